#include <gtest/gtest.h>

#include <functional>

#include "cmacc/residue_ring.hpp"
#include "support/fixtures.hpp"

namespace cmacc {
namespace {

using testing::Gen;
using testing::residues;

TEST(Ring, RejectsEvenAndOutOfRangeModuli) {
  EXPECT_THROW(RingContext(4), std::invalid_argument);
  EXPECT_THROW(RingContext(0), std::invalid_argument);
  EXPECT_THROW(RingContext(-3), std::invalid_argument);
  EXPECT_THROW(RingContext(kMaxModulus + 1), std::invalid_argument);
  EXPECT_NO_THROW(RingContext(1));
  EXPECT_EQ(RingContext(27).inv2(), 14);
}

TEST(Ring, CanonExamples) {
  const RingContext r27(27);
  EXPECT_EQ(canon(-7, r27).value, 20);
  EXPECT_EQ(canon(81, r27).value, 0);
  EXPECT_EQ(canon(0, RingContext(5)).value, 0);
  EXPECT_EQ(canon(0, RingContext(1)).value, 0);
  EXPECT_EQ(canon(std::numeric_limits<std::int64_t>::min(), r27).value,
            ((std::numeric_limits<std::int64_t>::min() % 27) + 27) % 27);
}

TEST(Ring, SymmetricRepresentative) {
  const RingContext r27(27);
  EXPECT_EQ(r27.symmetric(Residue{20}), -7);
  EXPECT_EQ(r27.symmetric(Residue{13}), 13);
  EXPECT_EQ(r27.symmetric(Residue{14}), -13);
}

TEST(HalfSum, Examples) {
  const RingContext r5(5);
  const RingContext r27(27);
  EXPECT_EQ(half_sum(Residue{1}, Residue{4}, r5).value, 0);
  EXPECT_EQ(half_sum(canon(-7, r27), canon(7, r27), r27).value, 0);
  EXPECT_EQ(half_sum(Residue{9}, Residue{9}, r27).value, 9);
}

TEST(HalfSum, RejectsNonCanonicalInput) {
  EXPECT_THROW(half_sum(Residue{5}, Residue{1}, RingContext(5)), std::invalid_argument);
}

TEST(HalfSum, PropertyCommutesAndDoubles) {
  Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const RingContext ring(gen.odd(1, 2001));
    const Residue a{gen.integer(0, ring.modulus() - 1)};
    const Residue b{gen.integer(0, ring.modulus() - 1)};
    const Residue h = half_sum(a, b, ring);
    ASSERT_EQ(h, half_sum(b, a, ring));
    ASSERT_EQ(ring.add(h, h), ring.add(a, b));
  }
}

TEST(HalfSum, LargeModulusDoesNotOverflow) {
  const RingContext ring(kMaxModulus - 1);
  const Residue a{ring.modulus() - 1};
  const Residue h = half_sum(a, a, ring);
  EXPECT_EQ(h, a);
  EXPECT_EQ(ring.add(half_sum(a, Residue{ring.modulus() - 2}, ring), half_sum(a, Residue{ring.modulus() - 2}, ring)),
            ring.add(a, Residue{ring.modulus() - 2}));
}

TEST(Canon, PropertyIdempotentAndPeriodic) {
  Gen gen(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const RingContext ring(gen.odd(1, 999));
    const std::int64_t x = gen.integer(-1'000'000, 1'000'000);
    const Residue c = canon(x, ring);
    ASSERT_TRUE(ring.contains(c));
    ASSERT_EQ(canon(c.value, ring), c);
    ASSERT_EQ(canon(x + ring.modulus(), ring), c);
  }
}

TEST(Runs, ComplementOfZ27) {
  const auto ground = testing::z27_family().ground_set();
  const auto comp = complement(ground, 27);
  const auto runs = partition_into_runs(comp, 3, RingContext(27));
  ASSERT_TRUE(runs.has_value());
  const std::vector<CyclicRun> expected = {
      {Residue{2}, 3}, {Residue{8}, 3}, {Residue{17}, 3}, {Residue{23}, 3}, {Residue{26}, 3}};
  EXPECT_EQ(*runs, expected);
  EXPECT_EQ((*runs)[4].elements(27), residues({26, 0, 1}));
}

TEST(Runs, SmallCases) {
  auto single = partition_into_runs(residues({0}), 1, 5);
  ASSERT_TRUE(single);
  EXPECT_EQ(*single, (std::vector<CyclicRun>{{Residue{0}, 1}}));
  EXPECT_FALSE(partition_into_runs(residues({0, 2}), 2, 5));
  auto empty = partition_into_runs(std::vector<Residue>{}, 3, 7);
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->empty());
}

TEST(Runs, FullRingAnchoredAtZero) {
  std::vector<Residue> all;
  for (std::int64_t r = 0; r < 9; ++r) all.push_back(Residue{r});
  const auto runs = partition_into_runs(all, 3, 9);
  ASSERT_TRUE(runs);
  EXPECT_EQ(*runs, (std::vector<CyclicRun>{{Residue{0}, 3}, {Residue{3}, 3}, {Residue{6}, 3}}));
  EXPECT_FALSE(partition_into_runs(all, 2, 9));
  EXPECT_EQ(maximal_runs(all, 9), (std::vector<CyclicRun>{{Residue{0}, 9}}));
}

TEST(Runs, WrapAroundRunIsNotSplit) {
  const auto runs = maximal_runs(residues({5, 6, 0, 1, 3}), 7);
  EXPECT_EQ(runs, (std::vector<CyclicRun>{{Residue{3}, 1}, {Residue{5}, 4}}));
}

TEST(Runs, RejectsOutOfRangeResidues) {
  EXPECT_THROW(maximal_runs(residues({7}), 7), std::invalid_argument);
}

// Exhaustive oracle: does S split into disjoint L-runs? Picks the smallest
// element and tries every run that covers it.
bool oracle_partitions(std::vector<char> in, std::int64_t L) {
  const std::int64_t v = static_cast<std::int64_t>(in.size());
  const auto it = std::find(in.begin(), in.end(), 1);
  if (it == in.end()) return true;
  const std::int64_t x = it - in.begin();
  for (std::int64_t back = 0; back < L; ++back) {
    const std::int64_t start = ((x - back) % v + v) % v;
    bool ok = L <= v;
    for (std::int64_t j = 0; j < L && ok; ++j) ok = in[static_cast<std::size_t>((start + j) % v)] == 1;
    if (!ok) continue;
    std::vector<char> rest = in;
    for (std::int64_t j = 0; j < L; ++j) rest[static_cast<std::size_t>((start + j) % v)] = 0;
    if (oracle_partitions(rest, L)) return true;
  }
  return false;
}

TEST(Runs, PropertyAgreesWithExhaustiveSearch) {
  Gen gen(13);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t v = gen.odd(1, 15);
    const std::int64_t L = gen.integer(1, 5);
    const auto set = trial % 2 == 0 ? gen.subset(v, 0.6) : gen.run_union(v, L);
    std::vector<char> in(static_cast<std::size_t>(v), 0);
    for (Residue r : set) in[static_cast<std::size_t>(r.value)] = 1;
    const auto runs = partition_into_runs(set, L, v);
    ASSERT_EQ(runs.has_value(), oracle_partitions(in, L)) << "v=" << v << " L=" << L << " trial " << trial;
    if (!runs) continue;
    ASSERT_EQ(static_cast<std::int64_t>(set.size()) % L, 0);
    std::vector<char> covered(static_cast<std::size_t>(v), 0);
    for (const CyclicRun& run : *runs) {
      ASSERT_EQ(run.length, L);
      for (Residue r : run.elements(v)) {
        ASSERT_EQ(covered[static_cast<std::size_t>(r.value)], 0) << "overlap";
        covered[static_cast<std::size_t>(r.value)] = 1;
      }
    }
    ASSERT_EQ(covered, in);
    ASSERT_TRUE(std::is_sorted(runs->begin(), runs->end()));
  }
}

}  // namespace
}  // namespace cmacc
