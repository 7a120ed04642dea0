#pragma once

#include <optional>
#include <vector>

#include "mvhota/dataset.hpp"

namespace mvhota {

/// Extent of spatial and temporal occlusion in a ground-truth dataset.
///
/// `simple` counts physical points per frame (distinct (frame, id) pairs) and
/// the share of them not annotated in every view.
///
/// The weighted forms are evaluated per point k and averaged over all ids:
///   OI_v(k) = 1 - 1/N * sum_f P(k,v,f) * c_f(k),   c_f(k) = 1/M * sum_w P(k,w,f)
/// with P the annotation indicator, N frames and M views. `temporal` fixes
/// c_f = 1; `multiview` fixes the outer indicator to 1 (hence is the same for
/// every view).
struct OcclusionIndex {
  double simple = 0.0;
  std::vector<double> weighted_per_view;
  double weighted_mean = 0.0;
  std::vector<double> temporal_per_view;
  double temporal_mean = 0.0;
  std::vector<double> multiview_per_view;
  double multiview_mean = 0.0;
};

/// Empty for a dataset without points.
std::optional<OcclusionIndex> occlusion_index(const Dataset& gt);

}  // namespace mvhota
