#pragma once

// Choosing m_1..m_n: exhaustive search for the largest prod(m_i) whose
// construction fits a modulus budget, and the closed-form choice
// m_1 = L m_2, m_2 = ... = m_n = floor((q-1)/2).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cmacc/exact.hpp"
#include "cmacc/packing.hpp"

namespace cmacc {

/// Budget v, odd access degree L, and dimension n (coded caching gain 2^n).
struct OptimizationInstance {
  std::int64_t v = 3;
  std::int64_t L = 1;
  std::int64_t n = 1;

  void validate() const;
};

struct Candidate {
  MVector m;
  ConstructionTrace trace;
  std::int64_t objective = 0;  // prod(m_i)
  /// construct_family at v_min passed verify_cma.
  bool verified = false;
};

/// Every m in Z_+^n with v_min(m) <= v, in lexicographic order. Branches are
/// cut by prod(1 + 2 m_i) <= v, which v_min always dominates.
std::vector<Candidate> feasible_candidates(const OptimizationInstance& inst);

/// Maximizer of prod(m_i) at dimension n, ties broken by the
/// lexicographically smaller m; the winner is re-verified as a CMA-NHSDP at
/// v_min. nullopt when no m fits the budget.
std::optional<Candidate> brute_force(const OptimizationInstance& inst);

/// brute_force for n = 1..n_max; entry n-1 belongs to dimension n.
std::vector<std::optional<Candidate>> brute_force_per_dimension(std::int64_t v, std::int64_t L,
                                                                 std::int64_t n_max);

/// Largest r with r^n <= x (x >= 0, n >= 1), computed without floating point.
std::int64_t integer_root(std::int64_t x, std::int64_t n);

struct ClosedFormSolution {
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t L = 0;
  MVector m;
  std::int64_t objective = 0;
  ConstructionTrace trace;
  // Parameters of the resulting L-continuous PDA at K = q^n L.
  std::int64_t K = 0;
  std::int64_t F = 0;
  std::int64_t Z = 0;
  BigInt S;
  Rational memory_ratio;  // Z / (L F)
  Rational rate;          // m_2^n L
  /// For odd q: Z = q^n L - (q-1)^n L and R = ((q-1)/2)^n L.
  std::optional<std::int64_t> odd_q_Z;
  std::optional<Rational> odd_q_rate;
};

/// q = floor((v/L)^(1/n)) as an exact integer root of floor(v/L).
/// nullopt when q <= 2 (m_2 would be 0). Throws std::invalid_argument on
/// even L, v < 3L, or n < 1.
std::optional<ClosedFormSolution> closed_form(std::int64_t v, std::int64_t L, std::int64_t n);

struct TradeoffRow {
  std::int64_t m2 = 0;
  std::int64_t objective = 0;
  MVector closed_form_m;
  std::int64_t closed_form_v_min = 0;
  /// Smallest-v_min ordered n-tuple with the same product, other than the
  /// closed-form one; equals the closed form when no other tuple exists.
  MVector alternative_m;
  std::int64_t alternative_v_min = 0;
  bool closed_form_no_worse = false;
};

std::vector<TradeoffRow> tradeoff_sweep(std::int64_t L, std::int64_t n, std::int64_t m2_lo,
                                        std::int64_t m2_hi);

/// Every m with n <= n_max whose family is a valid CMA-NHSDP at exactly
/// modulus v, verified. Sorted by n, then m.
std::vector<Candidate> realizable_at(std::int64_t v, std::int64_t L, std::int64_t n_max);

/// Header plus one row per candidate, each evaluated at its own v_min:
/// n,m,phi,v_min,objective,K,F,Z,S,M_over_N,R
void write_candidates_csv(std::ostream& out, const std::vector<Candidate>& rows);

}  // namespace cmacc
