#include "cmacc/verification.hpp"

#include <algorithm>

namespace cmacc {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BlockOverlap: return "block-overlap";
    case ViolationKind::DuplicateElement: return "duplicate-element";
    case ViolationKind::HalfSumHit: return "half-sum-hit";
    case ViolationKind::RunPartitionFailure: return "run-partition-failure";
    case ViolationKind::NeighborDifference: return "neighbor-difference";
    case ViolationKind::StarCountMismatch: return "C1-star-count";
    case ViolationKind::MissingSymbol: return "C2-missing-symbol";
    case ViolationKind::RepeatedSymbol: return "C3a-repeated-symbol";
    case ViolationKind::CrossEntryNotStar: return "C3b-cross-entry";
    case ViolationKind::StarRunFailure: return "C4-star-runs";
  }
  return "unknown";
}

void VerificationReport::add(ViolationKind kind, std::vector<std::int64_t> witness,
                             std::string detail) {
  violations.push_back(Violation{kind, std::move(witness), std::move(detail)});
}

void VerificationReport::merge(VerificationReport other) {
  for (Violation& v : other.violations) violations.push_back(std::move(v));
  if (runs.empty()) runs = std::move(other.runs);
}

bool VerificationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace cmacc
