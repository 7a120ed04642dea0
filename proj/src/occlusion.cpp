#include "mvhota/occlusion.hpp"

#include <map>
#include <numeric>
#include <string>

namespace mvhota {

namespace {

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::optional<OcclusionIndex> occlusion_index(const Dataset& gt) {
  if (gt.size() == 0) return std::nullopt;

  const int n_views = gt.n_views();
  const int n_frames = gt.n_frames();

  // presence[id][frame * n_views + view]
  std::map<std::string, std::vector<char>> presence;
  for (const Point& p : gt.points()) {
    auto& mask = presence.try_emplace(p.id.value(), std::vector<char>(static_cast<std::size_t>(n_frames) * n_views, 0))
                     .first->second;
    mask[static_cast<std::size_t>(p.frame) * n_views + p.view] = 1;
  }

  OcclusionIndex oi;
  long physical = 0;
  long corresponded = 0;
  std::vector<double> weighted(n_views, 0.0), temporal(n_views, 0.0), multiview(n_views, 0.0);

  for (const auto& [id, mask] : presence) {
    std::vector<double> sum_weighted(n_views, 0.0), sum_temporal(n_views, 0.0);
    double sum_views = 0.0;
    for (int f = 0; f < n_frames; ++f) {
      int visible = 0;
      for (int v = 0; v < n_views; ++v) visible += mask[static_cast<std::size_t>(f) * n_views + v];
      if (visible > 0) ++physical;
      if (visible == n_views) ++corresponded;

      const double c_f = static_cast<double>(visible) / n_views;
      sum_views += c_f;
      for (int v = 0; v < n_views; ++v) {
        if (!mask[static_cast<std::size_t>(f) * n_views + v]) continue;
        sum_weighted[v] += c_f;
        sum_temporal[v] += 1.0;
      }
    }
    for (int v = 0; v < n_views; ++v) {
      weighted[v] += 1.0 - sum_weighted[v] / n_frames;
      temporal[v] += 1.0 - sum_temporal[v] / n_frames;
      multiview[v] += 1.0 - sum_views / n_frames;
    }
  }

  const double n_points = static_cast<double>(presence.size());
  for (int v = 0; v < n_views; ++v) {
    weighted[v] /= n_points;
    temporal[v] /= n_points;
    multiview[v] /= n_points;
  }

  oi.simple = 1.0 - static_cast<double>(corresponded) / static_cast<double>(physical);
  oi.weighted_per_view = std::move(weighted);
  oi.temporal_per_view = std::move(temporal);
  oi.multiview_per_view = std::move(multiview);
  oi.weighted_mean = mean(oi.weighted_per_view);
  oi.temporal_mean = mean(oi.temporal_per_view);
  oi.multiview_mean = mean(oi.multiview_per_view);
  return oi;
}

}  // namespace mvhota
