#pragma once

// Arithmetic in Z_v for odd v, plus cyclic-run decomposition of residue sets.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cmacc {

/// A canonical residue, always in [0, v) for the ring it came from.
struct Residue {
  std::int64_t value = 0;

  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Largest modulus accepted anywhere in the library.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

/// The ring Z_v with v odd, so that 2 is invertible.
class RingContext {
 public:
  /// Throws std::invalid_argument unless 1 <= v <= kMaxModulus and v is odd.
  explicit RingContext(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return modulus_; }
  /// (v+1)/2, the inverse of 2.
  std::int64_t inv2() const noexcept { return (modulus_ + 1) / 2; }

  Residue canon(std::int64_t x) const noexcept;
  Residue add(Residue a, Residue b) const noexcept;
  Residue sub(Residue a, Residue b) const noexcept;
  Residue neg(Residue a) const noexcept;
  /// Representative in [-(v-1)/2, (v-1)/2].
  std::int64_t symmetric(Residue a) const noexcept;
  bool contains(Residue a) const noexcept { return a.value >= 0 && a.value < modulus_; }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::int64_t modulus_;
};

Residue canon(std::int64_t x, const RingContext& ring);

/// (a + b) / 2 in Z_v.
Residue half_sum(Residue a, Residue b, const RingContext& ring);

/// {start, start+1, ..., start+length-1} reduced modulo the ambient modulus.
struct CyclicRun {
  Residue start;
  std::int64_t length = 0;

  bool contains(Residue r, std::int64_t modulus) const noexcept;
  std::vector<Residue> elements(std::int64_t modulus) const;

  friend auto operator<=>(const CyclicRun&, const CyclicRun&) = default;
};

/// Maximal cyclic runs of `set` inside Z_modulus, sorted by start. The full
/// set yields the single run {0, modulus}. Any modulus >= 1 is accepted here;
/// cyclic structure does not need 2 to be invertible.
std::vector<CyclicRun> maximal_runs(std::span<const Residue> set, std::int64_t modulus);

/// Partition of `set` into disjoint cyclic runs of exactly `run_length`, sorted
/// by start, or nullopt if none exists. When `set` is all of Z_modulus the
/// partition anchored at 0 is returned.
std::optional<std::vector<CyclicRun>> partition_into_runs(std::span<const Residue> set,
                                                          std::int64_t run_length,
                                                          std::int64_t modulus);

std::optional<std::vector<CyclicRun>> partition_into_runs(std::span<const Residue> set,
                                                          std::int64_t run_length,
                                                          const RingContext& ring);

/// Z_modulus minus `set`, ascending.
std::vector<Residue> complement(std::span<const Residue> set, std::int64_t modulus);

}  // namespace cmacc
