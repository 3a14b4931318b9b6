#pragma once

// Placement delivery arrays: the circulant construction from a packing, the
// C1-C3 conditions, and L-continuity of star runs (C4).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmacc/packing.hpp"
#include "cmacc/verification.hpp"

namespace cmacc {

/// A star, a (c, i) pair symbol from the circulant construction, or an opaque
/// integer symbol from an externally supplied array.
struct PdaEntry {
  enum class Kind : std::uint8_t { Star, Pair, Opaque };

  Kind kind = Kind::Star;
  std::int64_t first = 0;
  std::int64_t second = 0;

  static constexpr PdaEntry star() noexcept { return {}; }
  static constexpr PdaEntry pair(std::int64_t c, std::int64_t i) noexcept { return {Kind::Pair, c, i}; }
  static constexpr PdaEntry opaque(std::int64_t s) noexcept { return {Kind::Opaque, s, 0}; }

  bool is_star() const noexcept { return kind == Kind::Star; }
  std::string str() const;

  friend auto operator<=>(const PdaEntry&, const PdaEntry&) = default;
};

class PdaArray {
 public:
  /// All-star F x K array. Throws std::invalid_argument unless F, K >= 1.
  PdaArray(std::int64_t rows, std::int64_t cols);
  PdaArray(std::int64_t rows, std::int64_t cols, std::vector<PdaEntry> row_major);

  std::int64_t rows() const noexcept { return rows_; }
  std::int64_t cols() const noexcept { return cols_; }
  const PdaEntry& at(std::int64_t f, std::int64_t k) const;
  void set(std::int64_t f, std::int64_t k, PdaEntry e);
  const std::vector<PdaEntry>& entries() const noexcept { return grid_; }

  /// Size of the intended alphabet when known (e.g. b*v for the circulant
  /// construction); C2 is checked against it. Unset for loaded arrays, whose
  /// alphabet is the set of symbols that occur.
  std::optional<std::int64_t> declared_symbol_count;

  friend bool operator==(const PdaArray& a, const PdaArray& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.grid_ == b.grid_;
  }

 private:
  std::int64_t rows_;
  std::int64_t cols_;
  std::vector<PdaEntry> grid_;
};

struct PdaParams {
  std::int64_t K = 0;
  std::int64_t F = 0;
  std::int64_t Z = 0;
  std::int64_t S = 0;
  /// symbol -> number of occurrences g_s
  std::map<PdaEntry, std::int64_t> gain_histogram;

  std::int64_t max_gain() const noexcept;
  std::string label() const;  // "(K,F,Z,S)"
};

/// P(f,k) = (f+k, i) if k-f lies in block i (1-based), else star.
/// Throws std::invalid_argument if the family is not a valid NHSDP.
PdaArray build_pda(const PackingFamily& family);

/// C1, C2, C3a and C3b; violations carry (row, col) coordinates.
VerificationReport verify_pda(const PdaArray& array);

/// Stars of every row partition into disjoint cyclic runs of length L,
/// taken modulo the column count.
VerificationReport verify_l_continuity(const PdaArray& array, std::int64_t L);

/// Throws std::invalid_argument if the star count differs between columns.
PdaParams compute_params(const PdaArray& array);

/// Star columns of row f, ascending.
std::vector<Residue> star_columns(const PdaArray& array, std::int64_t f);

}  // namespace cmacc
