#include "cmacc/packing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cmacc/detail/checked.hpp"

namespace cmacc {

using detail::checked_add;
using detail::checked_mul;

bool Block::contains(Residue r) const noexcept {
  return std::find(elements.begin(), elements.end(), r) != elements.end();
}

PackingFamily::PackingFamily(RingContext ring, std::vector<Block> blocks)
    : ring_(ring), blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    if (b.size() != blocks_.front().size()) {
      throw std::invalid_argument("ragged packing: block " + std::to_string(i + 1) + " has " +
                                  std::to_string(b.size()) + " elements, block 1 has " +
                                  std::to_string(blocks_.front().size()));
    }
    if (b.elements.empty()) throw std::invalid_argument("packing blocks must be non-empty");
    for (Residue r : b.elements) {
      if (!ring_.contains(r)) {
        throw std::invalid_argument("block element " + std::to_string(r.value) +
                                    " is not a canonical residue of Z_" +
                                    std::to_string(ring_.modulus()));
      }
    }
    if (!b.origins.empty() && b.origins.size() != b.elements.size()) {
      throw std::invalid_argument("block origins do not match its elements");
    }
  }
}

PackingFamily PackingFamily::from_integers(std::int64_t v,
                                           const std::vector<std::vector<std::int64_t>>& blocks) {
  RingContext ring(v);
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (const auto& raw : blocks) {
    Block b;
    for (std::int64_t x : raw) b.elements.push_back(ring.canon(x));
    out.push_back(std::move(b));
  }
  return PackingFamily(ring, std::move(out));
}

std::size_t PackingFamily::block_size() const noexcept {
  return blocks_.empty() ? 0 : blocks_.front().size();
}

std::vector<Residue> PackingFamily::ground_set() const {
  std::vector<Residue> all;
  for (const Block& b : blocks_) all.insert(all.end(), b.elements.begin(), b.elements.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::int64_t MVector::product() const {
  std::int64_t p = 1;
  for (std::int64_t mi : m) p = checked_mul(p, mi);
  return p;
}

void MVector::validate() const {
  if (L < 1) throw std::invalid_argument("access degree L must be positive");
  if (L % 2 == 0) {
    throw std::invalid_argument("access degree L=" + std::to_string(L) +
                                " is even; the offset recursion needs odd L");
  }
  if (m.empty()) throw std::invalid_argument("m-vector must have at least one entry");
  for (std::int64_t mi : m) {
    if (mi < 1) throw std::invalid_argument("m-vector entries must be positive");
  }
}

std::string format_m(const std::vector<std::int64_t>& m, char sep) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(m[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_m(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad m-vector entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad m-vector entry '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty m-vector");
  return out;
}

ConstructionTrace derive_trace(const MVector& mv) {
  mv.validate();
  const std::size_t n = mv.n();
  ConstructionTrace t;
  t.f.resize(n);
  t.g_off.resize(n);
  t.x.resize(n);

  std::int64_t prefix = 0;  // sum_{j<i} (f(j) + g(j))
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      t.f[0] = mv.m[0];
      t.g_off[0] = (mv.L - 1) / 2;
    } else {
      t.g_off[i] = detail::mod(-t.f[i - 1], mv.L);
      t.f[i] = checked_mul(mv.m[i], checked_add(checked_mul(2, prefix), 1));
    }
    t.x[i] = t.f[i] / mv.m[i];
    prefix = checked_add(prefix, checked_add(t.f[i], t.g_off[i]));
  }
  t.phi = prefix;
  t.v_min = checked_add(checked_mul(2, t.phi), 1);

  if (v_min_product_form(mv, t) != t.v_min) {
    throw std::logic_error("offset recursion disagrees with the product form of v_min");
  }
  return t;
}

std::int64_t v_min_product_form(const MVector& mv, const ConstructionTrace& trace) {
  const std::size_t n = mv.n();
  std::int64_t prod_all = 1;
  for (std::int64_t mi : mv.m) prod_all = checked_mul(prod_all, checked_add(1, 2 * mi));
  // suffix[i] = prod_{j>i} (1 + 2 m_j)
  std::vector<std::int64_t> suffix(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    suffix[i - 1] = checked_mul(suffix[i], checked_add(1, 2 * mv.m[i]));
  }
  std::int64_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) tail = checked_add(tail, checked_mul(trace.g_off[i], suffix[i]));
  return checked_add(prod_all, checked_mul(2, tail));
}

PackingFamily construct_family(const MVector& mv, std::int64_t v) {
  const ConstructionTrace t = derive_trace(mv);
  if (v % 2 == 0) throw std::invalid_argument("modulus v=" + std::to_string(v) + " is even");
  if (v < t.v_min) {
    throw std::invalid_argument("modulus v=" + std::to_string(v) + " is below v_min=" +
                                std::to_string(t.v_min));
  }
  const RingContext ring(v);
  const std::size_t n = mv.n();
  const std::size_t signs = std::size_t{1} << n;

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(mv.product()));
  std::vector<std::int64_t> a(n, 1);
  while (true) {
    Block b;
    b.index = a;
    b.elements.reserve(signs);
    b.origins.reserve(signs);
    for (std::size_t mask = 0; mask < signs; ++mask) {
      ElementOrigin origin;
      origin.signs.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const bool minus = (mask >> (n - 1 - i)) & 1U;
        origin.signs[i] = minus ? -1 : 1;
        origin.signed_value += origin.signs[i] * (a[i] * t.x[i] + t.g_off[i]);
      }
      b.elements.push_back(ring.canon(origin.signed_value));
      b.origins.push_back(std::move(origin));
    }
    blocks.push_back(std::move(b));

    // odometer, last coordinate fastest
    std::size_t pos = n;
    while (pos > 0 && a[pos - 1] == mv.m[pos - 1]) {
      a[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return PackingFamily(ring, std::move(blocks));
}

PackingFamily construct_family(const MVector& mv) { return construct_family(mv, derive_trace(mv).v_min); }

VerificationReport verify_nhsdp(const PackingFamily& family) {
  VerificationReport report;
  const RingContext& ring = family.ring();
  // residue -> owning block (1-based), first occurrence wins
  std::unordered_map<std::int64_t, std::size_t> owner;

  const auto& blocks = family.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    for (std::size_t ei = 0; ei < b.size(); ++ei) {
      const Residue r = b.elements[ei];
      if (std::find(b.elements.begin(), b.elements.begin() + static_cast<std::ptrdiff_t>(ei), r) !=
          b.elements.begin() + static_cast<std::ptrdiff_t>(ei)) {
        report.add(ViolationKind::DuplicateElement, {r.value, static_cast<std::int64_t>(bi + 1)},
                   "residue " + std::to_string(r.value) + " repeated in block " +
                       std::to_string(bi + 1));
        continue;
      }
      auto [it, inserted] = owner.emplace(r.value, bi + 1);
      if (!inserted) {
        report.add(ViolationKind::BlockOverlap,
                   {r.value, static_cast<std::int64_t>(it->second), static_cast<std::int64_t>(bi + 1)},
                   "residue " + std::to_string(r.value) + " lies in blocks " +
                       std::to_string(it->second) + " and " + std::to_string(bi + 1));
      }
    }
  }

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& el = blocks[bi].elements;
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        if (el[i] == el[j]) continue;
        const Residue h = half_sum(el[i], el[j], ring);
        auto hit = owner.find(h.value);
        if (hit == owner.end()) continue;
        report.add(ViolationKind::HalfSumHit,
                   {el[i].value, el[j].value, h.value, static_cast<std::int64_t>(hit->second)},
                   "half-sum of " + std::to_string(el[i].value) + " and " +
                       std::to_string(el[j].value) + " in block " + std::to_string(bi + 1) +
                       " is " + std::to_string(h.value) + ", which lies in block " +
                       std::to_string(hit->second));
      }
    }
  }
  return report;
}

VerificationReport verify_cma(const PackingFamily& family, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("access degree L must be positive");
  VerificationReport report = verify_nhsdp(family);
  const std::int64_t v = family.modulus();
  const std::vector<Residue> rest = complement(family.ground_set(), v);
  if (auto runs = partition_into_runs(rest, L, v)) {
    report.runs = std::move(*runs);
    return report;
  }
  for (const CyclicRun& run : maximal_runs(rest, v)) {
    if (run.length % L == 0) continue;
    report.add(ViolationKind::RunPartitionFailure, {run.start.value, run.length},
               "complement run starting at " + std::to_string(run.start.value) + " has length " +
                   std::to_string(run.length) + ", not a multiple of L=" + std::to_string(L));
  }
  return report;
}

VerificationReport check_neighbor_differences(const PackingFamily& family, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("access degree L must be positive");
  VerificationReport report;
  const RingContext& ring = family.ring();
  std::vector<std::int64_t> sym;
  for (Residue r : family.ground_set()) sym.push_back(ring.symmetric(r));
  std::sort(sym.begin(), sym.end());
  if (sym.empty()) return report;

  auto check = [&](std::int64_t lo, std::int64_t hi, std::int64_t diff) {
    if (diff % L == 1 % L) return;
    report.add(ViolationKind::NeighborDifference, {lo, hi, diff},
               "neighbours " + std::to_string(lo) + " and " + std::to_string(hi) +
                   " differ by " + std::to_string(diff) + ", not 1 mod " + std::to_string(L));
  };
  for (std::size_t i = 1; i < sym.size(); ++i) check(sym[i - 1], sym[i], sym[i] - sym[i - 1]);
  check(sym.back(), sym.front(), sym.front() + ring.modulus() - sym.back());
  return report;
}

std::string parameter_label(const PackingFamily& family, std::int64_t L) {
  return "(" + std::to_string(L) + "," + std::to_string(family.modulus()) + "," +
         std::to_string(family.block_size()) + "," + std::to_string(family.block_count()) + ")";
}

}  // namespace cmacc
