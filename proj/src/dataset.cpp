#include "mvhota/dataset.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace mvhota {

double Geometry::diagonal() const {
  return std::hypot(static_cast<double>(image_width), static_cast<double>(image_height));
}

DatasetError::DatasetError(std::string location, const std::string& message)
    : std::runtime_error(location.empty() ? message : location + ": " + message),
      location_(std::move(location)),
      message_(message) {}

namespace {

std::string point_location(std::size_t i) { return "/points/" + std::to_string(i); }

}  // namespace

Dataset::Dataset(Geometry geometry, std::vector<Point> points, Role role)
    : geometry_(geometry), points_(std::move(points)), role_(role) {
  if (geometry_.n_views < 1) throw DatasetError("/n_views", "n_views must be at least 1");
  if (geometry_.n_frames < 1) throw DatasetError("/n_frames", "n_frames must be at least 1");
  if (geometry_.image_width < 1) throw DatasetError("/image_width", "image_width must be positive");
  if (geometry_.image_height < 1) throw DatasetError("/image_height", "image_height must be positive");

  cells_.assign(static_cast<std::size_t>(geometry_.n_views) * geometry_.n_frames, {});
  std::vector<std::set<std::string, std::less<>>> ids_in_cell(cells_.size());

  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.view < 0 || p.view >= geometry_.n_views)
      throw DatasetError(point_location(i) + "/view", "view " + std::to_string(p.view) + " out of range");
    if (p.frame < 0 || p.frame >= geometry_.n_frames)
      throw DatasetError(point_location(i) + "/frame", "frame " + std::to_string(p.frame) + " out of range");
    if (!std::isfinite(p.x) || p.x < 0.0 || p.x > geometry_.image_width)
      throw DatasetError(point_location(i) + "/x", "x outside image bounds");
    if (!std::isfinite(p.y) || p.y < 0.0 || p.y > geometry_.image_height)
      throw DatasetError(point_location(i) + "/y", "y outside image bounds");
    if (role_ == Role::GroundTruth && !p.id)
      throw DatasetError(point_location(i) + "/id", "ground-truth point without id");

    const std::size_t c = static_cast<std::size_t>(p.view) * geometry_.n_frames + p.frame;
    if (p.id && !ids_in_cell[c].insert(*p.id).second)
      throw DatasetError(point_location(i) + "/id", "duplicate identity '" + *p.id + "' in view " +
                                                        std::to_string(p.view) + " frame " +
                                                        std::to_string(p.frame));
    cells_[c].push_back(i);
  }
}

std::span<const std::size_t> Dataset::cell(int view, int frame) const {
  if (view < 0 || view >= geometry_.n_views || frame < 0 || frame >= geometry_.n_frames)
    throw std::out_of_range("cell index out of range");
  return cells_[static_cast<std::size_t>(view) * geometry_.n_frames + frame];
}

bool Dataset::has_absent_ids() const {
  for (const Point& p : points_)
    if (!p.id) return true;
  return false;
}

Dataset with_points(const Dataset& base, std::vector<Point> points) {
  return Dataset(base.geometry(), std::move(points), base.role());
}

const char* to_string(Role role) {
  return role == Role::GroundTruth ? "ground_truth" : "prediction";
}

}  // namespace mvhota
