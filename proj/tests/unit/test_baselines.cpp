#include <gtest/gtest.h>

#include <sstream>

#include "cmacc/baselines.hpp"
#include "support/fixtures.hpp"

namespace cmacc {
namespace {

TEST(Hkd, Branches) {
  const BaselinePoint a = eval_hkd(27, 3, 5);
  EXPECT_EQ(*a.F, 378);
  EXPECT_EQ(*a.R, Rational(2));
  EXPECT_EQ(*eval_hkd(27, 3, 0).R, Rational(27));
  EXPECT_EQ(*eval_hkd(84, 3, 28).R, Rational(0));
  const BaselinePoint b = eval_hkd(10, 3, 2);  // 3 does not divide 10
  EXPECT_EQ(*b.F, 45);
  EXPECT_EQ(*b.R, Rational(8, 3));
  EXPECT_EQ(a.memory_ratio, Rational(5, 27));
}

TEST(Hkd, RangeChecked) {
  EXPECT_THROW(eval_hkd(27, 3, 10), std::out_of_range);
  EXPECT_THROW(eval_hkd(27, 3, -1), std::out_of_range);
  EXPECT_THROW(eval_hkd(3, 4, 0), std::out_of_range);
}

TEST(Rk1, Values) {
  const BaselinePoint a = eval_rk1(27, 3, 5);
  EXPECT_EQ(*a.F, 9828);
  EXPECT_EQ(*a.R, Rational(16, 3));
  EXPECT_EQ(*eval_rk1(81, 3, 19).R, Rational(64, 9));
  EXPECT_EQ(*eval_rk1(27, 3, 9).R, Rational(0));
  EXPECT_FALSE(eval_rk1(27, 3, 0).applicable);
  EXPECT_FALSE(eval_rk1(27, 3, 0).note.empty());
}

TEST(Rk1, SubpacketizationIsIntegralAcrossSweep) {
  EXPECT_EQ(*eval_rk1(8, 2, 2).F, 20);
  EXPECT_EQ(*eval_rk1(9, 2, 2).F, 27);
  for (std::int64_t K = 2; K <= 40; ++K) {
    for (std::int64_t L = 1; L <= K; ++L) {
      for (std::int64_t t = 1; t <= K / L; ++t) ASSERT_TRUE(eval_rk1(K, L, t).applicable) << K << ' ' << L << ' ' << t;
    }
  }
}

TEST(Cw, Values) {
  EXPECT_EQ(*eval_cw(27, 3, 5).F, 167076);
  EXPECT_EQ(*eval_cw(27, 3, 5).R, Rational(2));
  EXPECT_EQ(*eval_cw(27, 3, 0).F, 27);
  EXPECT_EQ(*eval_cw(27, 3, 0).R, Rational(27));
  EXPECT_EQ(*eval_cw(81, 3, 19).F, binomial(43, 19) * 81);
  EXPECT_EQ(*eval_cw(81, 3, 19).R, Rational(6, 5));
}

TEST(Wcwl, ThreeCases) {
  const BaselinePoint other = eval_wcwl(27, 3, 5);
  EXPECT_EQ(*other.F, 108);
  EXPECT_EQ(*other.R, Rational(3));
  const BaselinePoint p = eval_wcwl(81, 3, 19);
  EXPECT_EQ(*p.F, 486);
  EXPECT_EQ(*p.R, Rational(4));
  // K - tL = 1: first case.
  const BaselinePoint first = eval_wcwl(10, 3, 3);
  EXPECT_EQ(*first.F, 10);
  EXPECT_EQ(*first.R, Rational(1, 10));
  // (K - tL + 1) | K: K=12, L=2, t=3 gives 6+1=7, no; t=4 gives 4+1=5, no; K=12, L=1, t=8: 5, no; t=9: 4 | 12.
  const BaselinePoint divides = eval_wcwl(12, 1, 9);
  EXPECT_EQ(*divides.F, 12);
  EXPECT_EQ(*divides.R, Rational(3 * 4, 24));
  // <K>_(r+1) = r with r > 1: K=11, L=1, t=7 gives r=4, 11 mod 5 = 1; t=8 gives r=3, 11 mod 4 = 3.
  const BaselinePoint middle = eval_wcwl(11, 1, 8);
  EXPECT_EQ(*middle.F, (2 * 2 + 1) * 11);
  EXPECT_EQ(*middle.R, Rational(3, 5));
}

TEST(Sr2, Applicability) {
  EXPECT_EQ(*eval_sr2(12, 3, 3).R, Rational(3, 4));
  EXPECT_EQ(*eval_sr2(12, 3, 3).F, 12);
  EXPECT_EQ(*eval_sr2(8, 3, 2).R, Rational(1, 2));
  EXPECT_EQ(*eval_sr2(6, 1, 3).R, Rational(3, 2));
  EXPECT_EQ(*eval_sr2(20, 3, 5).R, Rational(5, 4));
  const BaselinePoint na = eval_sr2(12, 2, 2);
  EXPECT_FALSE(na.applicable);
  EXPECT_NE(na.note.find("|K"), std::string::npos);
}

TEST(Mr, LowerBounds) {
  EXPECT_EQ(*eval_mr(5, 1).R, Rational(2));
  EXPECT_EQ(*eval_mr(6, 2).R, Rational(2));
  EXPECT_EQ(*eval_mr(5, 3).R, Rational(3, 5));
  EXPECT_EQ(*eval_mr(7, 2).R, Rational(18, 7));
  EXPECT_TRUE(eval_mr(5, 1).rate_is_lower_bound);
  EXPECT_EQ(*eval_mr(5, 1).t, 1);
}

TEST(Spe, Values) {
  EXPECT_EQ(*eval_spe(8, 2).F, 12);
  EXPECT_EQ(*eval_spe(8, 2).R, Rational(1));
  EXPECT_EQ(*eval_spe(6, 2).F, 6);
  EXPECT_EQ(*eval_spe(6, 2).R, Rational(1, 2));
  EXPECT_EQ(*eval_spe(6, 1).F, 9);
  EXPECT_EQ(*eval_spe(6, 1).R, Rational(1));
  EXPECT_FALSE(eval_spe(5, 2).applicable);
  EXPECT_TRUE(eval_spe(8, 2).rate_is_lower_bound);
}

TEST(Stubs, NotApplicableWithReason) {
  for (const BaselinePoint& p : {eval_rk2(27, 3, 5), eval_sr1(27, 3, 5)}) {
    EXPECT_FALSE(p.applicable);
    EXPECT_FALSE(p.note.empty());
    EXPECT_FALSE(p.F);
  }
}

TEST(Sweep, EveryNotApplicableRowHasReason) {
  for (const BaselinePoint& p : baseline_sweep(84, 3)) {
    if (!p.applicable) EXPECT_FALSE(p.note.empty()) << p.scheme;
  }
}

TEST(Compare, Z27Row) {
  const auto ours = our_points(27, 3, 2);
  const auto rows = compare(27, 3, ours, {eval_cw(27, 3, 5), eval_wcwl(27, 3, 5)});
  const ComparisonRow* ours_row = nullptr;
  const ComparisonRow* cw = nullptr;
  const ComparisonRow* wcwl = nullptr;
  for (const ComparisonRow& r : rows) {
    if (r.point.scheme == "ours" && r.point.memory_ratio == Rational(5, 27)) ours_row = &r;
    if (r.point.scheme == "CW") cw = &r;
    if (r.point.scheme == "WCWL") wcwl = &r;
  }
  ASSERT_TRUE(ours_row && cw && wcwl);
  EXPECT_EQ(*ours_row->point.F, 27);
  EXPECT_EQ(*ours_row->point.R, Rational(3));
  EXPECT_EQ(*cw->F_ratio, Rational(167076, 27));
  EXPECT_EQ(*cw->R_ratio, Rational(2, 3));
  EXPECT_EQ(*wcwl->F_ratio, Rational(4));
  EXPECT_EQ(*wcwl->R_ratio, Rational(1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i - 1].point.memory_ratio, rows[i].point.memory_ratio);
  }
}

TEST(Compare, WcwlAtZ81Budget) {
  const auto rows = compare(81, 3, our_points(81, 3, 3), {eval_wcwl(81, 3, 19)});
  const ComparisonRow& w = rows.back().point.scheme == "WCWL" ? rows.back() : *std::find_if(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.point.scheme == "WCWL"; });
  EXPECT_EQ(*w.reference_memory, Rational(19, 81));
  EXPECT_EQ(*w.F_ratio, Rational(486, 81));
  EXPECT_EQ(*w.R_ratio, Rational(4, 3));
}

TEST(Compare, OursOnlyAndMismatch) {
  const auto ours = our_points(27, 3, 2);
  EXPECT_EQ(compare(27, 3, ours, {}).size(), ours.size());
  EXPECT_THROW(compare(27, 3, ours, {eval_cw(28, 3, 1)}), std::invalid_argument);
}

TEST(OurPoints, EvenKUsesVirtualUser) {
  const auto ours = our_points(84, 3, 3);
  ASSERT_FALSE(ours.empty());
  for (const BaselinePoint& p : ours) {
    EXPECT_EQ(*p.F, 85);
    EXPECT_EQ(p.K, 84);
    EXPECT_NE(p.note.find("virtual"), std::string::npos);
  }
  EXPECT_THROW(our_points(84, 4, 2), std::invalid_argument);
}

TEST(Report, CsvColumnsAndJsonRationals) {
  const auto rows = compare(27, 3, {}, {eval_cw(27, 3, 5), eval_mr(27, 3), eval_rk2(27, 3, 5)});
  std::ostringstream csv;
  write_csv(csv, rows);
  EXPECT_EQ(csv.str(),
            "scheme,K,L,t,M_over_N,F,R,applicable,note\n"
            "MR,27,3,1,1/27,27,>=" + to_string(*eval_mr(27, 3).R) + ",true,\n"
            "CW,27,3,5,5/27,167076,2,true,\n"
            "RK2,27,3,5,5/27,,,false,n/a: rate formula uses undefined quantities\n");
  std::ostringstream json;
  write_json(json, rows);
  EXPECT_NE(json.str().find("\"F\": \"167076\""), std::string::npos);
  EXPECT_NE(json.str().find("\"num\": \"5\""), std::string::npos);
  std::ostringstream text;
  write_text(text, rows);
  EXPECT_NE(text.str().find("167076"), std::string::npos);
}

}  // namespace
}  // namespace cmacc
