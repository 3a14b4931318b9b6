#pragma once

// Shared golden instances and seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmacc/packing.hpp"
#include "cmacc/pda.hpp"
#include "cmacc/residue_ring.hpp"
#include "cmacc/text_format.hpp"

namespace cmacc::testing {

inline PackingFamily z5_family() { return PackingFamily::from_integers(5, {{1, 4}, {2, 3}}); }

inline PackingFamily z27_family() {
  return PackingFamily::from_integers(27, {{11, -7, 7, -11}, {12, -6, 6, -12}, {13, -5, 5, -13}});
}

/// 4 users, 4 packets, L = 2; stars at runs {0,1}, {1,2}, {2,3}, {3,0}.
inline PdaArray four_user_q() {
  const std::string text =
      "F=4 K=4\n"
      "* * 1 4\n"
      "1 * * 2\n"
      "3 2 * *\n"
      "* 4 3 *\n";
  std::istringstream in(text);
  return read_pda(in);
}

inline std::vector<Residue> residues(std::initializer_list<std::int64_t> xs) {
  std::vector<Residue> out;
  for (std::int64_t x : xs) out.push_back(Residue{x});
  return out;
}

inline std::set<std::int64_t> as_set(const Block& b) {
  std::set<std::int64_t> s;
  for (Residue r : b.elements) s.insert(r.value);
  return s;
}

inline std::set<std::set<std::int64_t>> as_sets(const PackingFamily& f) {
  std::set<std::set<std::int64_t>> out;
  for (const Block& b : f.blocks()) out.insert(as_set(b));
  return out;
}

/// Seeded source of random test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::int64_t odd(std::int64_t lo, std::int64_t hi) {
    std::int64_t x = integer(lo, hi);
    return x % 2 == 0 ? (x + 1 <= hi ? x + 1 : x - 1) : x;
  }

  /// Each residue of Z_v independently with probability p.
  std::vector<Residue> subset(std::int64_t v, double p) {
    std::vector<Residue> out;
    for (std::int64_t r = 0; r < v; ++r) {
      if (coin(p)) out.push_back(Residue{r});
    }
    return out;
  }

  /// Union of random disjoint runs of length L (possibly wrapping).
  std::vector<Residue> run_union(std::int64_t v, std::int64_t L) {
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    const std::int64_t attempts = integer(0, v / std::max<std::int64_t>(L, 1));
    for (std::int64_t a = 0; a < attempts; ++a) {
      const std::int64_t start = integer(0, v - 1);
      bool free = true;
      for (std::int64_t j = 0; j < L; ++j) free = free && !used[static_cast<std::size_t>((start + j) % v)];
      if (!free) continue;
      for (std::int64_t j = 0; j < L; ++j) used[static_cast<std::size_t>((start + j) % v)] = 1;
    }
    std::vector<Residue> out;
    for (std::int64_t r = 0; r < v; ++r) {
      if (used[static_cast<std::size_t>(r)]) out.push_back(Residue{r});
    }
    return out;
  }

  MVector mvector(std::int64_t max_n, std::int64_t max_m) {
    MVector mv;
    mv.L = 2 * integer(0, 2) + 1;
    const std::int64_t n = integer(1, max_n);
    for (std::int64_t i = 0; i < n; ++i) mv.m.push_back(integer(1, max_m));
    return mv;
  }

  /// b random disjoint blocks of size g in Z_v (b * g <= v).
  PackingFamily random_family(std::int64_t v, std::int64_t b, std::int64_t g) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(v));
    for (std::int64_t i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng_);
    std::vector<std::vector<std::int64_t>> blocks;
    for (std::int64_t i = 0; i < b; ++i) {
      blocks.emplace_back(pool.begin() + i * g, pool.begin() + (i + 1) * g);
    }
    return PackingFamily::from_integers(v, blocks);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cmacc::testing
