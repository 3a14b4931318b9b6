#include "cmacc/pda.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmacc {
namespace {

std::string coord(std::int64_t f, std::int64_t k) {
  return "(" + std::to_string(f) + "," + std::to_string(k) + ")";
}

}  // namespace

std::string PdaEntry::str() const {
  switch (kind) {
    case Kind::Star: return "*";
    case Kind::Pair: return std::to_string(first) + "," + std::to_string(second);
    case Kind::Opaque: return std::to_string(first);
  }
  return "?";
}

PdaArray::PdaArray(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("PDA dimensions must be positive");
  grid_.assign(static_cast<std::size_t>(rows * cols), PdaEntry::star());
}

PdaArray::PdaArray(std::int64_t rows, std::int64_t cols, std::vector<PdaEntry> row_major)
    : rows_(rows), cols_(cols), grid_(std::move(row_major)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("PDA dimensions must be positive");
  if (grid_.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("PDA grid is not " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
}

const PdaEntry& PdaArray::at(std::int64_t f, std::int64_t k) const {
  if (f < 0 || f >= rows_ || k < 0 || k >= cols_) throw std::out_of_range("PDA index " + coord(f, k));
  return grid_[static_cast<std::size_t>(f * cols_ + k)];
}

void PdaArray::set(std::int64_t f, std::int64_t k, PdaEntry e) {
  if (f < 0 || f >= rows_ || k < 0 || k >= cols_) throw std::out_of_range("PDA index " + coord(f, k));
  grid_[static_cast<std::size_t>(f * cols_ + k)] = e;
}

std::int64_t PdaParams::max_gain() const noexcept {
  std::int64_t best = 0;
  for (const auto& [sym, count] : gain_histogram) best = std::max(best, count);
  return best;
}

std::string PdaParams::label() const {
  return "(" + std::to_string(K) + "," + std::to_string(F) + "," + std::to_string(Z) + "," +
         std::to_string(S) + ")";
}

PdaArray build_pda(const PackingFamily& family) {
  const VerificationReport check = verify_nhsdp(family);
  if (!check.valid()) {
    throw std::invalid_argument("family is not an NHSDP: " + check.violations.front().detail);
  }
  const RingContext& ring = family.ring();
  const std::int64_t v = ring.modulus();

  std::vector<std::int64_t> owner(static_cast<std::size_t>(v), 0);
  for (std::size_t bi = 0; bi < family.block_count(); ++bi) {
    for (Residue r : family.blocks()[bi].elements) {
      owner[static_cast<std::size_t>(r.value)] = static_cast<std::int64_t>(bi + 1);
    }
  }

  PdaArray array(v, v);
  for (std::int64_t f = 0; f < v; ++f) {
    for (std::int64_t k = 0; k < v; ++k) {
      const std::int64_t block = owner[static_cast<std::size_t>(ring.canon(k - f).value)];
      if (block != 0) array.set(f, k, PdaEntry::pair(ring.canon(f + k).value, block));
    }
  }
  array.declared_symbol_count = static_cast<std::int64_t>(family.block_count()) * v;
  return array;
}

VerificationReport verify_pda(const PdaArray& array) {
  VerificationReport report;
  const std::int64_t F = array.rows();
  const std::int64_t K = array.cols();

  // C1
  std::vector<std::int64_t> stars(static_cast<std::size_t>(K), 0);
  for (std::int64_t f = 0; f < F; ++f) {
    for (std::int64_t k = 0; k < K; ++k) {
      if (array.at(f, k).is_star()) ++stars[static_cast<std::size_t>(k)];
    }
  }
  for (std::int64_t k = 1; k < K; ++k) {
    if (stars[static_cast<std::size_t>(k)] != stars[0]) {
      report.add(ViolationKind::StarCountMismatch, {k, stars[static_cast<std::size_t>(k)], stars[0]},
                 "column " + std::to_string(k) + " has " +
                     std::to_string(stars[static_cast<std::size_t>(k)]) + " stars, column 0 has " +
                     std::to_string(stars[0]));
    }
  }

  std::map<PdaEntry, std::vector<std::pair<std::int64_t, std::int64_t>>> occurrences;
  for (std::int64_t f = 0; f < F; ++f) {
    for (std::int64_t k = 0; k < K; ++k) {
      const PdaEntry& e = array.at(f, k);
      if (!e.is_star()) occurrences[e].emplace_back(f, k);
    }
  }

  // C2
  if (array.declared_symbol_count &&
      static_cast<std::int64_t>(occurrences.size()) != *array.declared_symbol_count) {
    report.add(ViolationKind::MissingSymbol,
               {static_cast<std::int64_t>(occurrences.size()), *array.declared_symbol_count},
               std::to_string(occurrences.size()) + " distinct symbols occur, alphabet has " +
                   std::to_string(*array.declared_symbol_count));
  }

  // C3
  for (const auto& [sym, cells] : occurrences) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const auto [f1, k1] = cells[a];
        const auto [f2, k2] = cells[b];
        if (f1 == f2 || k1 == k2) {
          report.add(ViolationKind::RepeatedSymbol, {f1, k1, f2, k2},
                     "symbol " + sym.str() + " repeats at " + coord(f1, k1) + " and " +
                         coord(f2, k2));
          continue;
        }
        if (!array.at(f1, k2).is_star() || !array.at(f2, k1).is_star()) {
          report.add(ViolationKind::CrossEntryNotStar, {f1, k1, f2, k2},
                     "symbol " + sym.str() + " at " + coord(f1, k1) + " and " + coord(f2, k2) +
                         " but " + coord(f1, k2) + " or " + coord(f2, k1) + " is not a star");
        }
      }
    }
  }
  return report;
}

std::vector<Residue> star_columns(const PdaArray& array, std::int64_t f) {
  std::vector<Residue> cols;
  for (std::int64_t k = 0; k < array.cols(); ++k) {
    if (array.at(f, k).is_star()) cols.push_back(Residue{k});
  }
  return cols;
}

VerificationReport verify_l_continuity(const PdaArray& array, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("access degree L must be positive");
  VerificationReport report;
  for (std::int64_t f = 0; f < array.rows(); ++f) {
    const std::vector<Residue> cols = star_columns(array, f);
    if (partition_into_runs(cols, L, array.cols())) continue;
    for (const CyclicRun& run : maximal_runs(cols, array.cols())) {
      if (run.length % L == 0) continue;
      report.add(ViolationKind::StarRunFailure, {f, run.start.value, run.length},
                 "row " + std::to_string(f) + ": star run at column " +
                     std::to_string(run.start.value) + " has length " + std::to_string(run.length) +
                     ", not a multiple of L=" + std::to_string(L));
    }
  }
  return report;
}

PdaParams compute_params(const PdaArray& array) {
  PdaParams p;
  p.F = array.rows();
  p.K = array.cols();
  for (std::int64_t k = 0; k < p.K; ++k) {
    std::int64_t z = 0;
    for (std::int64_t f = 0; f < p.F; ++f) {
      if (array.at(f, k).is_star()) ++z;
    }
    if (k == 0) {
      p.Z = z;
    } else if (z != p.Z) {
      throw std::invalid_argument("star count differs between columns; no single Z exists");
    }
  }
  for (const PdaEntry& e : array.entries()) {
    if (!e.is_star()) ++p.gain_histogram[e];
  }
  p.S = static_cast<std::int64_t>(p.gain_histogram.size());
  return p;
}

}  // namespace cmacc
