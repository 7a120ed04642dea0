#include "mvhota/matching.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mvhota {

FrameMatch match_frame(std::span<const Point> gt_points, std::span<const Point> pred_points, double alpha,
                       double diagonal_bound) {
  FrameMatch out;
  if (!gt_points.empty()) {
    out.view = gt_points.front().view;
    out.frame = gt_points.front().frame;
  } else if (!pred_points.empty()) {
    out.view = pred_points.front().view;
    out.frame = pred_points.front().frame;
  }

  const CostMatrix costs = build_cost_matrix(gt_points, pred_points, alpha, diagonal_bound);
  const Assignment assignment = solve_assignment(costs);

  std::vector<char> gt_matched(gt_points.size(), 0), pred_matched(pred_points.size(), 0);
  for (auto [g, p] : assignment.pairs) {
    const double d = std::hypot(gt_points[g].x - pred_points[p].x, gt_points[g].y - pred_points[p].y);
    if (d < alpha) {
      out.true_positives.push_back({g, p, d});
      gt_matched[g] = 1;
      pred_matched[p] = 1;
    }
  }
  for (std::size_t g = 0; g < gt_points.size(); ++g)
    if (!gt_matched[g]) out.false_negatives.push_back(g);
  for (std::size_t p = 0; p < pred_points.size(); ++p)
    if (!pred_matched[p]) out.false_positives.push_back(p);
  return out;
}

namespace {

std::vector<Point> gather(const Dataset& d, std::span<const std::size_t> indices) {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(d.point(i));
  return out;
}

}  // namespace

std::vector<FrameMatch> match_dataset(const Dataset& gt, const Dataset& pred, double alpha) {
  if (gt.n_views() != pred.n_views() || gt.n_frames() != pred.n_frames())
    throw std::invalid_argument("match_dataset: view/frame layout differs between datasets");

  const double bound = gt.geometry().diagonal();
  std::vector<FrameMatch> matches;
  matches.reserve(static_cast<std::size_t>(gt.n_views()) * gt.n_frames());
  for (int v = 0; v < gt.n_views(); ++v) {
    for (int f = 0; f < gt.n_frames(); ++f) {
      const auto gt_idx = gt.cell(v, f);
      const auto pred_idx = pred.cell(v, f);
      FrameMatch m = match_frame(gather(gt, gt_idx), gather(pred, pred_idx), alpha, bound);
      m.view = v;
      m.frame = f;
      for (auto& tp : m.true_positives) {
        tp.gt = gt_idx[tp.gt];
        tp.pred = pred_idx[tp.pred];
      }
      for (auto& i : m.false_negatives) i = gt_idx[i];
      for (auto& i : m.false_positives) i = pred_idx[i];
      matches.push_back(std::move(m));
    }
  }
  return matches;
}

void TrackRegistry::observe(int view, const std::string& id, double x, double y, int frame) {
  Track& t = views_.at(view)[id];
  t.x = x;
  t.y = y;
  t.last_frame = frame;
}

Dataset assign_temporal_ids(const Dataset& pred, double alpha) {
  std::set<std::string, std::less<>> taken;
  for (const Point& p : pred.points())
    if (p.id) taken.insert(*p.id);

  std::vector<Point> points(pred.points().begin(), pred.points().end());
  TrackRegistry registry(pred.n_views());
  const double bound = pred.geometry().diagonal();

  for (int v = 0; v < pred.n_views(); ++v) {
    long fresh = 0;
    auto next_fresh_id = [&] {
      std::string id;
      do {
        id = "t" + std::to_string(v) + "." + std::to_string(fresh++);
      } while (taken.count(id));
      return id;
    };

    for (int f = 0; f < pred.n_frames(); ++f) {
      const auto cell = pred.cell(v, f);
      std::set<std::string, std::less<>> used_here;
      std::vector<std::size_t> unlabelled;
      for (std::size_t i : cell) {
        if (points[i].id)
          used_here.insert(*points[i].id);
        else
          unlabelled.push_back(i);
      }

      if (!unlabelled.empty()) {
        std::vector<std::string> candidate_ids;
        std::vector<Point> candidate_positions;
        for (const auto& [id, track] : registry.tracks(v)) {
          if (used_here.count(id)) continue;
          candidate_ids.push_back(id);
          Point last;
          last.x = track.x;
          last.y = track.y;
          candidate_positions.push_back(last);
        }

        const std::vector<Point> rows = gather(pred, unlabelled);
        const Assignment a = solve_assignment(build_cost_matrix(rows, candidate_positions, alpha, bound));
        std::vector<char> labelled(unlabelled.size(), 0);
        for (auto [r, c] : a.pairs) {
          const double d = std::hypot(rows[r].x - candidate_positions[c].x, rows[r].y - candidate_positions[c].y);
          if (d < alpha) {
            points[unlabelled[r]].id = candidate_ids[c];
            labelled[r] = 1;
          }
        }
        for (std::size_t r = 0; r < unlabelled.size(); ++r)
          if (!labelled[r]) points[unlabelled[r]].id = next_fresh_id();
      }

      for (std::size_t i : cell) registry.observe(v, *points[i].id, points[i].x, points[i].y, f);
    }
  }
  return Dataset(pred.geometry(), std::move(points), pred.role());
}

Dataset strip_ids(const Dataset& dataset) {
  std::vector<Point> points(dataset.points().begin(), dataset.points().end());
  for (Point& p : points) p.id.reset();
  return Dataset(dataset.geometry(), std::move(points), dataset.role());
}

}  // namespace mvhota
