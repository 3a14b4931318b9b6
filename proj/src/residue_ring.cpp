#include "cmacc/residue_ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cmacc {
namespace {

std::vector<char> membership(std::span<const Residue> set, std::int64_t modulus) {
  std::vector<char> in(static_cast<std::size_t>(modulus), 0);
  for (Residue r : set) {
    if (r.value < 0 || r.value >= modulus) {
      throw std::invalid_argument("residue " + std::to_string(r.value) + " outside Z_" +
                                  std::to_string(modulus));
    }
    in[static_cast<std::size_t>(r.value)] = 1;
  }
  return in;
}

void check_modulus(std::int64_t modulus) {
  if (modulus < 1 || modulus > kMaxModulus) {
    throw std::invalid_argument("modulus out of range: " + std::to_string(modulus));
  }
}

}  // namespace

RingContext::RingContext(std::int64_t modulus) : modulus_(modulus) {
  check_modulus(modulus);
  if (modulus % 2 == 0) {
    throw std::invalid_argument("ring modulus must be odd, got " + std::to_string(modulus));
  }
}

Residue RingContext::canon(std::int64_t x) const noexcept {
  std::int64_t r = x % modulus_;
  if (r < 0) r += modulus_;
  return Residue{r};
}

Residue RingContext::add(Residue a, Residue b) const noexcept { return canon(a.value + b.value); }
Residue RingContext::sub(Residue a, Residue b) const noexcept { return canon(a.value - b.value); }
Residue RingContext::neg(Residue a) const noexcept { return canon(-a.value); }

std::int64_t RingContext::symmetric(Residue a) const noexcept {
  return a.value <= (modulus_ - 1) / 2 ? a.value : a.value - modulus_;
}

Residue canon(std::int64_t x, const RingContext& ring) { return ring.canon(x); }

Residue half_sum(Residue a, Residue b, const RingContext& ring) {
  if (!ring.contains(a) || !ring.contains(b)) {
    throw std::invalid_argument("half_sum operands must lie in [0, " + std::to_string(ring.modulus()) + ")");
  }
  // a + b + v is even whenever a + b is odd, since v is odd.
  std::int64_t s = ring.canon(a.value + b.value).value;
  if (s % 2 != 0) s += ring.modulus();
  return ring.canon(s / 2);
}

bool CyclicRun::contains(Residue r, std::int64_t modulus) const noexcept {
  std::int64_t offset = (r.value - start.value) % modulus;
  if (offset < 0) offset += modulus;
  return offset < length;
}

std::vector<Residue> CyclicRun::elements(std::int64_t modulus) const {
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) out.push_back(Residue{(start.value + i) % modulus});
  return out;
}

std::vector<CyclicRun> maximal_runs(std::span<const Residue> set, std::int64_t modulus) {
  check_modulus(modulus);
  const std::vector<char> in = membership(set, modulus);
  const auto first_gap = std::find(in.begin(), in.end(), 0);
  if (first_gap == in.end()) return {CyclicRun{Residue{0}, modulus}};

  // Walk once around the circle starting just after a gap, so no run is split.
  const std::int64_t gap = first_gap - in.begin();
  std::vector<CyclicRun> runs;
  std::int64_t run_start = -1;
  for (std::int64_t step = 1; step <= modulus; ++step) {
    const std::int64_t pos = (gap + step) % modulus;
    if (in[static_cast<std::size_t>(pos)]) {
      if (run_start < 0) run_start = pos;
    } else if (run_start >= 0) {
      std::int64_t len = (pos - run_start) % modulus;
      if (len < 0) len += modulus;
      runs.push_back(CyclicRun{Residue{run_start}, len});
      run_start = -1;
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::optional<std::vector<CyclicRun>> partition_into_runs(std::span<const Residue> set,
                                                          std::int64_t run_length,
                                                          std::int64_t modulus) {
  if (run_length < 1) throw std::invalid_argument("run length must be positive");
  std::vector<CyclicRun> out;
  for (const CyclicRun& run : maximal_runs(set, modulus)) {
    if (run.length % run_length != 0) return std::nullopt;
    for (std::int64_t off = 0; off < run.length; off += run_length) {
      out.push_back(CyclicRun{Residue{(run.start.value + off) % modulus}, run_length});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<CyclicRun>> partition_into_runs(std::span<const Residue> set,
                                                          std::int64_t run_length,
                                                          const RingContext& ring) {
  return partition_into_runs(set, run_length, ring.modulus());
}

std::vector<Residue> complement(std::span<const Residue> set, std::int64_t modulus) {
  check_modulus(modulus);
  const std::vector<char> in = membership(set, modulus);
  std::vector<Residue> out;
  for (std::int64_t i = 0; i < modulus; ++i) {
    if (!in[static_cast<std::size_t>(i)]) out.push_back(Residue{i});
  }
  return out;
}

}  // namespace cmacc
