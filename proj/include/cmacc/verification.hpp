#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cmacc/residue_ring.hpp"

namespace cmacc {

enum class ViolationKind {
  // packing
  BlockOverlap,
  DuplicateElement,
  HalfSumHit,
  RunPartitionFailure,
  NeighborDifference,
  // PDA conditions
  StarCountMismatch,  // C1
  MissingSymbol,      // C2
  RepeatedSymbol,     // C3a
  CrossEntryNotStar,  // C3b
  StarRunFailure,     // C4
};

std::string_view to_string(ViolationKind kind);

/// One failed condition. `witness` holds the residues or (row, column)
/// coordinates involved; `detail` is a human-readable rendering of them.
struct Violation {
  ViolationKind kind;
  std::vector<std::int64_t> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  /// Run partition of the star/complement set when one was computed.
  std::vector<CyclicRun> runs;

  bool valid() const noexcept { return violations.empty(); }
  void add(ViolationKind kind, std::vector<std::int64_t> witness, std::string detail);
  void merge(VerificationReport other);
  bool has(ViolationKind kind) const noexcept;
};

}  // namespace cmacc
