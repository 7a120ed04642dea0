#pragma once

#include <string>
#include <vector>

#include "mvhota/dataset.hpp"

namespace mvhota {

struct ValidationIssue {
  enum class Kind {
    GeometryMismatch,  // n_views, n_frames or image size differ
    ViewMissing,       // view has points in one dataset only
    FrameMissing,      // frame has points in one dataset only
  };
  Kind kind;
  Role missing_from = Role::Prediction;  // for ViewMissing / FrameMissing
  std::string field;                      // for GeometryMismatch
  int index = -1;                         // view or frame
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool empty() const noexcept { return issues.empty(); }
  bool geometry_ok() const;
};

/// Compares a GT/prediction pair. Pure; missing views/frames are informational
/// (they become false negatives or false positives when scored).
ValidationReport validate_pair(const Dataset& gt, const Dataset& pred);

/// Re-homes `pred` into `geometry`, dropping points that fall outside it.
Dataset conform_to(const Geometry& geometry, const Dataset& pred);

}  // namespace mvhota
