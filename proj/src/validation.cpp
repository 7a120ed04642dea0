#include "mvhota/validation.hpp"

#include <algorithm>
#include <set>

namespace mvhota {

bool ValidationReport::geometry_ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const ValidationIssue& i) { return i.kind == ValidationIssue::Kind::GeometryMismatch; });
}

namespace {

void compare_field(ValidationReport& report, const char* field, int gt, int pred) {
  if (gt == pred) return;
  report.issues.push_back({ValidationIssue::Kind::GeometryMismatch, Role::Prediction, field, -1,
                           std::string(field) + ": ground truth " + std::to_string(gt) + ", prediction " +
                               std::to_string(pred)});
}

void compare_presence(ValidationReport& report, ValidationIssue::Kind kind, const char* what,
                      const std::set<int>& gt, const std::set<int>& pred) {
  std::vector<int> only_gt, only_pred;
  std::set_difference(gt.begin(), gt.end(), pred.begin(), pred.end(), std::back_inserter(only_gt));
  std::set_difference(pred.begin(), pred.end(), gt.begin(), gt.end(), std::back_inserter(only_pred));
  for (int i : only_gt)
    report.issues.push_back({kind, Role::Prediction, "", i,
                             std::string(what) + " " + std::to_string(i) + " has no predictions"});
  for (int i : only_pred)
    report.issues.push_back({kind, Role::GroundTruth, "", i,
                             std::string(what) + " " + std::to_string(i) + " has no ground truth"});
}

}  // namespace

ValidationReport validate_pair(const Dataset& gt, const Dataset& pred) {
  ValidationReport report;
  const Geometry& a = gt.geometry();
  const Geometry& b = pred.geometry();
  compare_field(report, "n_views", a.n_views, b.n_views);
  compare_field(report, "n_frames", a.n_frames, b.n_frames);
  compare_field(report, "image_width", a.image_width, b.image_width);
  compare_field(report, "image_height", a.image_height, b.image_height);

  std::set<int> gt_views, pred_views, gt_frames, pred_frames;
  for (const Point& p : gt.points()) {
    gt_views.insert(p.view);
    gt_frames.insert(p.frame);
  }
  for (const Point& p : pred.points()) {
    pred_views.insert(p.view);
    pred_frames.insert(p.frame);
  }
  compare_presence(report, ValidationIssue::Kind::ViewMissing, "view", gt_views, pred_views);
  compare_presence(report, ValidationIssue::Kind::FrameMissing, "frame", gt_frames, pred_frames);
  return report;
}

Dataset conform_to(const Geometry& geometry, const Dataset& pred) {
  std::vector<Point> kept;
  for (const Point& p : pred.points()) {
    if (p.view >= geometry.n_views || p.frame >= geometry.n_frames) continue;
    if (p.x > geometry.image_width || p.y > geometry.image_height) continue;
    kept.push_back(p);
  }
  return Dataset(geometry, std::move(kept), pred.role());
}

}  // namespace mvhota
