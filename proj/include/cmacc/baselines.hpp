#pragma once

// Closed-form subpacketization and rate of published multi-access coded
// caching schemes, and side-by-side reports against the packing-based scheme.
// Cache-node memory ratio is t/K throughout.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmacc/exact.hpp"
#include "cmacc/macc.hpp"

namespace cmacc {

struct BaselinePoint {
  std::string scheme;
  std::int64_t K = 0;
  std::int64_t L = 0;
  std::optional<std::int64_t> t;  // unset for our own points
  Rational memory_ratio;
  std::optional<BigInt> F;
  std::optional<Rational> R;
  bool rate_is_lower_bound = false;
  bool applicable = true;
  std::string note;  // the violated constraint when not applicable
};

// Each evaluator throws std::out_of_range unless 1 <= L <= K and
// 0 <= t <= floor(K/L).
BaselinePoint eval_hkd(std::int64_t K, std::int64_t L, std::int64_t t);
BaselinePoint eval_rk1(std::int64_t K, std::int64_t L, std::int64_t t);
BaselinePoint eval_cw(std::int64_t K, std::int64_t L, std::int64_t t);
BaselinePoint eval_wcwl(std::int64_t K, std::int64_t L, std::int64_t t);
BaselinePoint eval_sr2(std::int64_t K, std::int64_t L, std::int64_t t);
/// t = 1; the rate is a lower bound.
BaselinePoint eval_mr(std::int64_t K, std::int64_t L);
/// t = 2; the rate is a lower bound.
BaselinePoint eval_spe(std::int64_t K, std::int64_t L);
/// Not evaluated: their rate formulas use quantities with no definition
/// available here. Always not applicable.
BaselinePoint eval_rk2(std::int64_t K, std::int64_t L, std::int64_t t);
BaselinePoint eval_sr1(std::int64_t K, std::int64_t L, std::int64_t t);

/// Our scheme as a report point.
BaselinePoint ours_point(const SchemeParams& params, std::int64_t real_users, std::string note);

/// Every baseline at every t in [0, floor(K/L)], plus MR and SPE.
std::vector<BaselinePoint> baseline_sweep(std::int64_t K, std::int64_t L);

/// Our points for K users: every verified construction at modulus K (odd K)
/// or K+1 with one virtual user (even K), one per memory ratio, keeping the
/// lowest rate. Even L uses the (L-1)-run placement; even K with even L is
/// rejected.
std::vector<BaselinePoint> our_points(std::int64_t K, std::int64_t L, std::int64_t n_max);

struct ComparisonRow {
  BaselinePoint point;
  /// Memory ratio of the our-scheme point this row is measured against: the
  /// one with equal memory ratio, else the largest not exceeding this row's.
  std::optional<Rational> reference_memory;
  std::optional<Rational> F_ratio;  // F_this / F_ours
  std::optional<Rational> R_ratio;  // R_this / R_ours
};

/// Rows for `ours` and `baselines` sorted by memory ratio.
std::vector<ComparisonRow> compare(std::int64_t K, std::int64_t L, const std::vector<BaselinePoint>& ours,
                                   const std::vector<BaselinePoint>& baselines);

/// scheme,K,L,t,M_over_N,F,R,applicable,note
void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
/// Same rows with rationals as {"num": "...", "den": "..."} and integers as
/// decimal strings.
void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows);
/// Aligned table with decimal renderings and the ratio columns.
void write_text(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace cmacc
