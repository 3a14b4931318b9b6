#pragma once

// Non-half-sum disjoint packings over Z_v, their cyclic multi-access
// refinement, and the offset-recursion generator that produces them.

#include <cstdint>
#include <string>
#include <vector>

#include "cmacc/residue_ring.hpp"
#include "cmacc/verification.hpp"

namespace cmacc {

/// The signed integer an element was generated from, with its sign vector.
struct ElementOrigin {
  std::int64_t signed_value = 0;
  std::vector<int> signs;  // each +1 or -1
};

struct Block {
  std::vector<Residue> elements;
  /// Generator index a = (a_1, ..., a_n), 1-based. Empty for loaded blocks.
  std::vector<std::int64_t> index;
  /// Parallel to `elements` for generated blocks, empty otherwise.
  std::vector<ElementOrigin> origins;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Residue r) const noexcept;
};

/// A family of equal-size blocks in Z_v. Disjointness and the half-sum
/// condition are not enforced here; that is what the verifiers are for.
class PackingFamily {
 public:
  /// Throws std::invalid_argument if blocks have different sizes or hold
  /// residues outside Z_v.
  PackingFamily(RingContext ring, std::vector<Block> blocks);

  /// Convenience: canonicalizes arbitrary signed integers into Z_v.
  static PackingFamily from_integers(std::int64_t v,
                                     const std::vector<std::vector<std::int64_t>>& blocks);

  const RingContext& ring() const noexcept { return ring_; }
  std::int64_t modulus() const noexcept { return ring_.modulus(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// g; zero for an empty family.
  std::size_t block_size() const noexcept;
  /// Union of all blocks, ascending and deduplicated.
  std::vector<Residue> ground_set() const;

 private:
  RingContext ring_;
  std::vector<Block> blocks_;
};

/// Input of the offset-recursion construction: odd access degree and m_1..m_n.
struct MVector {
  std::int64_t L = 1;
  std::vector<std::int64_t> m;

  std::size_t n() const noexcept { return m.size(); }
  std::int64_t product() const;
  /// Throws std::invalid_argument on even or non-positive L, empty m, or m_i < 1.
  void validate() const;

  friend bool operator==(const MVector&, const MVector&) = default;
};

std::string format_m(const std::vector<std::int64_t>& m, char sep = ',');
std::vector<std::int64_t> parse_m(const std::string& text);

struct ConstructionTrace {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g_off;
  std::vector<std::int64_t> x;  // x_i = f(i) / m_i
  std::int64_t phi = 0;
  std::int64_t v_min = 0;  // 2 * phi + 1
};

/// f(1) = m_1, g(1) = (L-1)/2; for i >= 2, g(i) = <-f(i-1)>_L and
/// f(i) = m_i (2 sum_{j<i} (f(j) + g(j)) + 1). Checks the closed-form product
/// identity for v_min before returning. Throws std::overflow_error when the
/// recursion leaves 64-bit range.
ConstructionTrace derive_trace(const MVector& mv);

/// v_min from the product form prod(1+2m_i) + 2 sum g(i) prod_{j>i}(1+2m_j).
std::int64_t v_min_product_form(const MVector& mv, const ConstructionTrace& trace);

/// One block per a in [m_1] x ... x [m_n], each holding the 2^n residues
/// sum_i alpha_i (a_i x_i + g(i)), alpha in {-1,+1}^n. Blocks are ordered
/// lexicographically in a; elements by alpha with alpha_1 most significant
/// and +1 before -1. Throws std::invalid_argument if v is even or below v_min.
PackingFamily construct_family(const MVector& mv, std::int64_t v);
PackingFamily construct_family(const MVector& mv);  // v = v_min

/// Disjointness, in-block duplicates, and half-sum exclusion.
VerificationReport verify_nhsdp(const PackingFamily& family);

/// verify_nhsdp plus the L-continuity of Z_v minus the ground set. On success
/// the report carries the run partition.
VerificationReport verify_cma(const PackingFamily& family, std::int64_t L);

/// Sorts the symmetric representatives of the ground set and checks every
/// neighbouring difference, including the wrap-around one, is 1 mod L.
VerificationReport check_neighbor_differences(const PackingFamily& family, std::int64_t L);

/// "(L,v,g,b)".
std::string parameter_label(const PackingFamily& family, std::int64_t L);

}  // namespace cmacc
