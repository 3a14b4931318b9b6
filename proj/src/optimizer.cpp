#include "cmacc/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "cmacc/detail/checked.hpp"

namespace cmacc {
namespace {

bool verify_at(const MVector& m, std::int64_t v) {
  return verify_cma(construct_family(m, v), m.L).valid();
}

}  // namespace

void OptimizationInstance::validate() const {
  if (v < 3) throw std::invalid_argument("budget v must be at least 3");
  if (L < 1 || L % 2 == 0) throw std::invalid_argument("access degree L must be odd and positive");
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
}

std::vector<Candidate> feasible_candidates(const OptimizationInstance& inst) {
  inst.validate();
  std::vector<Candidate> out;
  std::vector<std::int64_t> m;
  const auto n = static_cast<std::size_t>(inst.n);

  std::function<void(std::int64_t)> extend = [&](std::int64_t prefix) {
    if (m.size() == n) {
      MVector mv{inst.L, m};
      ConstructionTrace t = derive_trace(mv);
      if (t.v_min <= inst.v) out.push_back(Candidate{mv, std::move(t), mv.product(), false});
      return;
    }
    // Remaining coordinates contribute at least 3 each.
    std::int64_t rest = 1;
    for (std::size_t i = m.size() + 1; i < n; ++i) rest *= 3;
    for (std::int64_t mi = 1;; ++mi) {
      const std::int64_t next = prefix * (1 + 2 * mi);
      if (next > inst.v / rest) break;
      m.push_back(mi);
      extend(next);
      m.pop_back();
    }
  };
  extend(1);
  return out;
}

std::optional<Candidate> brute_force(const OptimizationInstance& inst) {
  std::vector<Candidate> all = feasible_candidates(inst);
  if (all.empty()) return std::nullopt;
  // Candidates arrive in lexicographic order; strict > keeps the first maximizer.
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].objective > all[best].objective) best = i;
  }
  Candidate winner = std::move(all[best]);
  winner.verified = verify_at(winner.m, winner.trace.v_min);
  if (!winner.verified) {
    throw std::logic_error("optimizer winner m=(" + format_m(winner.m.m) +
                           ") failed CMA-NHSDP verification at v_min");
  }
  return winner;
}

std::vector<std::optional<Candidate>> brute_force_per_dimension(std::int64_t v, std::int64_t L,
                                                                 std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<std::optional<Candidate>> out;
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(brute_force({v, L, n}));
  return out;
}

std::int64_t integer_root(std::int64_t x, std::int64_t n) {
  if (x < 0 || n < 1) throw std::invalid_argument("integer_root needs x >= 0 and n >= 1");
  if (n == 1 || x < 2) return x;
  // r^n <= x, tested with overflow-safe repeated multiplication
  auto fits = [&](std::int64_t r) {
    std::int64_t p = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      if (p > x / r) return false;
      p *= r;
    }
    return p <= x;
  };
  std::int64_t lo = 1;
  std::int64_t hi = std::min<std::int64_t>(x, std::int64_t{1} << 32);
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::optional<ClosedFormSolution> closed_form(std::int64_t v, std::int64_t L, std::int64_t n) {
  if (L < 1 || L % 2 == 0) throw std::invalid_argument("access degree L must be odd and positive");
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  if (v < 3 * L) throw std::invalid_argument("closed form needs v >= 3L");

  using detail::checked_mul;
  ClosedFormSolution s;
  s.q = integer_root(v / L, n);
  s.n = n;
  s.L = L;
  const std::int64_t m2 = (s.q - 1) / 2;
  if (m2 < 1) return std::nullopt;

  s.m.L = L;
  s.m.m.assign(static_cast<std::size_t>(n), m2);
  s.m.m[0] = L * m2;
  s.objective = s.m.product();
  s.trace = derive_trace(s.m);

  std::int64_t qn = 1;
  std::int64_t two_m2_n = 1;
  std::int64_t m2_n = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    qn = checked_mul(qn, s.q);
    two_m2_n = checked_mul(two_m2_n, 2 * m2);
    m2_n = checked_mul(m2_n, m2);
  }
  s.K = checked_mul(qn, L);
  s.F = s.K;
  s.Z = s.K - checked_mul(two_m2_n, L);
  s.S = BigInt(m2_n) * qn * L * L;
  s.memory_ratio = Rational(s.Z, checked_mul(L, s.F));
  s.rate = Rational(checked_mul(m2_n, L));
  if (s.q % 2 == 1) {
    std::int64_t q1n = 1;
    std::int64_t half_n = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      q1n = checked_mul(q1n, s.q - 1);
      half_n = checked_mul(half_n, (s.q - 1) / 2);
    }
    s.odd_q_Z = s.K - checked_mul(q1n, L);
    s.odd_q_rate = Rational(checked_mul(half_n, L));
  }
  return s;
}

std::vector<TradeoffRow> tradeoff_sweep(std::int64_t L, std::int64_t n, std::int64_t m2_lo,
                                        std::int64_t m2_hi) {
  if (n < 1 || m2_lo < 1 || m2_hi < m2_lo) throw std::invalid_argument("bad tradeoff sweep range");
  std::vector<TradeoffRow> rows;
  for (std::int64_t m2 = m2_lo; m2 <= m2_hi; ++m2) {
    TradeoffRow row;
    row.m2 = m2;
    row.closed_form_m = MVector{L, std::vector<std::int64_t>(static_cast<std::size_t>(n), m2)};
    row.closed_form_m.m[0] = L * m2;
    row.objective = row.closed_form_m.product();
    row.closed_form_v_min = derive_trace(row.closed_form_m).v_min;
    row.alternative_m = row.closed_form_m;
    row.alternative_v_min = row.closed_form_v_min;

    // ordered factorizations of the objective into n positive parts
    bool have_alt = false;
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t)> split = [&](std::int64_t rest) {
      if (static_cast<std::int64_t>(parts.size()) == n - 1) {
        parts.push_back(rest);
        if (parts != row.closed_form_m.m) {
          const MVector alt{L, parts};
          const std::int64_t vm = derive_trace(alt).v_min;
          if (!have_alt || vm < row.alternative_v_min) {
            row.alternative_m = alt;
            row.alternative_v_min = vm;
            have_alt = true;
          }
        }
        parts.pop_back();
        return;
      }
      for (std::int64_t d = 1; d <= rest; ++d) {
        if (rest % d != 0) continue;
        parts.push_back(d);
        split(rest / d);
        parts.pop_back();
      }
    };
    split(row.objective);
    row.closed_form_no_worse = row.closed_form_v_min <= row.alternative_v_min;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Candidate> realizable_at(std::int64_t v, std::int64_t L, std::int64_t n_max) {
  if (v < 3 || v % 2 == 0) throw std::invalid_argument("modulus must be odd and at least 3");
  std::vector<Candidate> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (Candidate& c : feasible_candidates({v, L, n})) {
      if (!verify_at(c.m, v)) continue;
      c.verified = true;
      out.push_back(std::move(c));
    }
  }
  return out;
}

void write_candidates_csv(std::ostream& out, const std::vector<Candidate>& rows) {
  out << "n,m,phi,v_min,objective,K,F,Z,S,M_over_N,R\n";
  for (const Candidate& c : rows) {
    const std::int64_t K = c.trace.v_min;
    const std::int64_t g = std::int64_t{1} << c.m.n();
    const std::int64_t Z = K - g * c.objective;
    out << c.m.n() << ',' << format_m(c.m.m, ';') << ',' << c.trace.phi << ',' << c.trace.v_min << ','
        << c.objective << ',' << K << ',' << K << ',' << Z << ',' << c.objective * K << ','
        << to_string(Rational(Z, c.m.L * K)) << ',' << c.objective << '\n';
  }
}

}  // namespace cmacc
