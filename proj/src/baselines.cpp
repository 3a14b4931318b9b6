#include "cmacc/baselines.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>

#include "cmacc/optimizer.hpp"
#include "json.hpp"

namespace cmacc {
namespace {

BaselinePoint base(const std::string& scheme, std::int64_t K, std::int64_t L, std::int64_t t) {
  if (K < 1 || L < 1 || L > K) {
    throw std::out_of_range("need 1 <= L <= K, got K=" + std::to_string(K) + " L=" + std::to_string(L));
  }
  if (t < 0 || t > K / L) {
    throw std::out_of_range("t=" + std::to_string(t) + " outside [0, floor(K/L)=" + std::to_string(K / L) + "]");
  }
  BaselinePoint p;
  p.scheme = scheme;
  p.K = K;
  p.L = L;
  p.t = t;
  p.memory_ratio = Rational(t, K);
  return p;
}

BaselinePoint not_applicable(BaselinePoint p, std::string why) {
  p.applicable = false;
  p.F.reset();
  p.R.reset();
  p.note = std::move(why);
  return p;
}

}  // namespace

BaselinePoint eval_hkd(std::int64_t K, std::int64_t L, std::int64_t t) {
  BaselinePoint p = base("HKD", K, L, t);
  if (K % L == 0) {
    p.F = BigInt(L) * binomial(K / L, t);
    p.R = Rational(K - t * L, 1 + t);
    p.note = "L|K";
  } else {
    p.F = binomial(K, t);
    p.R = Rational(K - t, 1 + t);
    p.note = "L does not divide K";
  }
  return p;
}

BaselinePoint eval_rk1(std::int64_t K, std::int64_t L, std::int64_t t) {
  BaselinePoint p = base("RK1", K, L, t);
  if (t < 1) return not_applicable(std::move(p), "needs t >= 1 (F has factor K/t)");
  const Rational F = Rational(binomial(K - t * (L - 1) - 1, t - 1) * K, t);
  if (!is_integer(F)) return not_applicable(std::move(p), "F=" + to_string(F) + " is not an integer");
  p.F = boost::multiprecision::numerator(F);
  p.R = Rational((K - t * L) * (K - t * L), K);
  return p;
}

BaselinePoint eval_cw(std::int64_t K, std::int64_t L, std::int64_t t) {
  BaselinePoint p = base("CW", K, L, t);
  p.F = binomial(K - t * (L - 1), t) * K;
  p.R = Rational(K - t * L, 1 + t);
  return p;
}

BaselinePoint eval_wcwl(std::int64_t K, std::int64_t L, std::int64_t t) {
  BaselinePoint p = base("WCWL", K, L, t);
  const std::int64_t r = K - t * L;
  const std::int64_t groups = K / (r + 1);
  if (K % (r + 1) == 0 || r == 1) {
    p.F = BigInt(K);
    p.R = Rational(r * (r + 1), 2 * K);
    p.note = "(K-tL+1)|K or K-tL=1";
  } else if (K % (r + 1) == r && r > 1) {
    p.F = BigInt(2 * groups + 1) * K;
    p.R = Rational(r, 2 * groups + 1);
    p.note = "<K>_(K-tL+1) = K-tL";
  } else {
    p.F = BigInt(2 * groups) * K;
    p.R = Rational(r, 2 * groups);
    p.note = "otherwise";
  }
  return p;
}

BaselinePoint eval_sr2(std::int64_t K, std::int64_t L, std::int64_t t) {
  BaselinePoint p = base("SR2", K, L, t);
  const std::int64_t r = K - t * L;
  if (t == 0 || K % t != 0) return not_applicable(std::move(p), "needs t|K");
  if ((r + t) == 0 || K % (r + t) != 0) return not_applicable(std::move(p), "needs (K-tL+t)|K");
  p.F = BigInt(K);
  p.R = Rational(r * (r + t), 2 * K);
  return p;
}

BaselinePoint eval_mr(std::int64_t K, std::int64_t L) {
  if (K / L < 1) return not_applicable(base("MR", K, L, 0), "needs t=1 <= floor(K/L)");
  BaselinePoint p = base("MR", K, L, 1);
  const BigInt numerator = BigInt(K) * (K - L);
  const std::int64_t denominator = 2 + 2 * (L / (K - L + 1));
  p.F = BigInt(K);
  p.R = Rational(ceil(Rational(numerator, denominator)), K);
  p.rate_is_lower_bound = true;
  return p;
}

BaselinePoint eval_spe(std::int64_t K, std::int64_t L) {
  if (K / L < 2) return not_applicable(base("SPE", K, L, 0), "needs t=2 <= floor(K/L)");
  BaselinePoint p = base("SPE", K, L, 2);
  const BigInt prod = BigInt(K) * (K - 2 * L + 2);
  if (prod % 4 != 0) return not_applicable(std::move(p), "needs 4 | K(K-2L+2)");
  p.F = prod / 4;
  p.R = Rational(K - 2 * L, 4);
  p.rate_is_lower_bound = true;
  return p;
}

BaselinePoint eval_rk2(std::int64_t K, std::int64_t L, std::int64_t t) {
  return not_applicable(base("RK2", K, L, t), "n/a: rate formula uses undefined quantities");
}

BaselinePoint eval_sr1(std::int64_t K, std::int64_t L, std::int64_t t) {
  return not_applicable(base("SR1", K, L, t), "n/a: subpacketization only bounded, not given");
}

BaselinePoint ours_point(const SchemeParams& params, std::int64_t real_users, std::string note) {
  BaselinePoint p;
  p.scheme = "ours";
  p.K = real_users;
  p.L = params.L;
  p.memory_ratio = params.memory_ratio;
  p.F = BigInt(params.F);
  p.R = params.rate;
  p.note = std::move(note);
  return p;
}

std::vector<BaselinePoint> baseline_sweep(std::int64_t K, std::int64_t L) {
  std::vector<BaselinePoint> out;
  for (std::int64_t t = 0; t <= K / L; ++t) {
    out.push_back(eval_hkd(K, L, t));
    out.push_back(eval_rk1(K, L, t));
    out.push_back(eval_cw(K, L, t));
    out.push_back(eval_rk2(K, L, t));
    out.push_back(eval_wcwl(K, L, t));
    out.push_back(eval_sr1(K, L, t));
    out.push_back(eval_sr2(K, L, t));
  }
  out.push_back(eval_mr(K, L));
  out.push_back(eval_spe(K, L));
  return out;
}

std::vector<BaselinePoint> our_points(std::int64_t K, std::int64_t L, std::int64_t n_max) {
  const bool even_k = K % 2 == 0;
  const bool even_l = L % 2 == 0;
  if (even_k && even_l) throw std::invalid_argument("even K together with even L is not supported");
  const std::int64_t v = even_k ? K + 1 : K;
  const std::int64_t run = even_l ? L - 1 : L;
  std::map<Rational, BaselinePoint> best;
  for (const Candidate& c : realizable_at(v, run, n_max)) {
    const PackingFamily family = construct_family(c.m, v);
    const MaccScheme scheme = even_k   ? adapt_even_k(K, family, L)
                              : even_l ? adapt_even_l(L, family)
                                       : MaccScheme::from_family(family, L);
    std::string note = "m=(" + format_m(c.m.m) + ")";
    if (even_k) note += " v=" + std::to_string(v) + " with 1 virtual user";
    if (even_l) note += " placed with L-1=" + std::to_string(run);
    BaselinePoint p = ours_point(scheme_params(scheme, 1), scheme.real_users(), note);
    auto it = best.find(p.memory_ratio);
    if (it == best.end() || *p.R < *it->second.R) best.insert_or_assign(p.memory_ratio, std::move(p));
  }
  std::vector<BaselinePoint> out;
  for (auto& [ratio, p] : best) out.push_back(std::move(p));
  return out;
}

std::vector<ComparisonRow> compare(std::int64_t K, std::int64_t L, const std::vector<BaselinePoint>& ours,
                                   const std::vector<BaselinePoint>& baselines) {
  std::vector<ComparisonRow> rows;
  for (const auto* group : {&ours, &baselines}) {
    for (const BaselinePoint& p : *group) {
      if (p.K != K || p.L != L) {
        throw std::invalid_argument("point " + p.scheme + " is for K=" + std::to_string(p.K) +
                                    " L=" + std::to_string(p.L));
      }
    }
  }

  for (const BaselinePoint& p : ours) rows.push_back(ComparisonRow{p, p.memory_ratio, Rational(1), Rational(1)});
  for (const BaselinePoint& p : baselines) {
    ComparisonRow row{p, std::nullopt, std::nullopt, std::nullopt};
    const BaselinePoint* ref = nullptr;
    for (const BaselinePoint& o : ours) {
      if (o.memory_ratio > p.memory_ratio) continue;
      if (ref == nullptr || o.memory_ratio > ref->memory_ratio) ref = &o;
    }
    if (ref != nullptr) {
      row.reference_memory = ref->memory_ratio;
      if (p.F && ref->F && *ref->F != 0) row.F_ratio = Rational(*p.F, *ref->F);
      if (p.R && ref->R && *ref->R != 0) row.R_ratio = *p.R / *ref->R;
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return a.point.memory_ratio < b.point.memory_ratio;
  });
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rate_text(const BaselinePoint& p) {
  if (!p.R) return "";
  return (p.rate_is_lower_bound ? ">=" : "") + to_string(*p.R);
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()}};
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "scheme,K,L,t,M_over_N,F,R,applicable,note\n";
  for (const ComparisonRow& row : rows) {
    const BaselinePoint& p = row.point;
    out << p.scheme << ',' << p.K << ',' << p.L << ',' << (p.t ? std::to_string(*p.t) : "") << ','
        << to_string(p.memory_ratio) << ',' << (p.F ? p.F->str() : "") << ',' << rate_text(p) << ','
        << (p.applicable ? "true" : "false") << ',' << csv_field(p.note) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const ComparisonRow& row : rows) {
    const BaselinePoint& p = row.point;
    nlohmann::json j;
    j["scheme"] = p.scheme;
    j["K"] = p.K;
    j["L"] = p.L;
    j["t"] = p.t ? nlohmann::json(*p.t) : nlohmann::json(nullptr);
    j["M_over_N"] = rational_json(p.memory_ratio);
    j["F"] = p.F ? nlohmann::json(p.F->str()) : nlohmann::json(nullptr);
    j["R"] = p.R ? rational_json(*p.R) : nlohmann::json(nullptr);
    j["R_is_lower_bound"] = p.rate_is_lower_bound;
    j["applicable"] = p.applicable;
    j["note"] = p.note;
    j["F_ratio"] = row.F_ratio ? rational_json(*row.F_ratio) : nlohmann::json(nullptr);
    j["R_ratio"] = row.R_ratio ? rational_json(*row.R_ratio) : nlohmann::json(nullptr);
    doc.push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

void write_text(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << std::left << std::setw(6) << "scheme" << std::right << std::setw(5) << "t" << std::setw(9) << "M/N"
      << std::setw(26) << "F" << std::setw(10) << "R" << std::setw(14) << "F/F_ours" << std::setw(10)
      << "R/R_ours" << "  note\n";
  for (const ComparisonRow& row : rows) {
    const BaselinePoint& p = row.point;
    std::string f = p.F ? p.F->str() : "n/a";
    if (f.size() > 24) f = f.substr(0, 1) + "." + f.substr(1, 4) + "e" + std::to_string(f.size() - 1);
    const std::string r = p.R ? (p.rate_is_lower_bound ? ">=" : "") + to_decimal(*p.R, 2) : "n/a";
    out << std::left << std::setw(6) << p.scheme << std::right << std::setw(5) << (p.t ? std::to_string(*p.t) : "-")
        << std::setw(9) << to_decimal(p.memory_ratio, 4) << std::setw(26) << f << std::setw(10) << r
        << std::setw(14) << (row.F_ratio ? to_decimal(*row.F_ratio, 2) : "-") << std::setw(10)
        << (row.R_ratio ? to_decimal(*row.R_ratio, 2) : "-") << "  " << p.note << '\n';
  }
}

}  // namespace cmacc
