#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvhota {

enum class Role { GroundTruth, Prediction };

/// One annotated or predicted 2-D point.
struct Point {
  int view = 0;
  int frame = 0;
  double x = 0.0;
  double y = 0.0;
  std::optional<std::string> id;
  std::optional<std::string> class_label;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Geometry {
  int n_views = 1;
  int n_frames = 1;
  int image_width = 1;
  int image_height = 1;

  /// Length of the image diagonal; the cost given to pairs beyond the match radius.
  double diagonal() const;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

/// Raised for any malformed or invariant-violating dataset. `location()` names
/// the source and the offending position (byte offset or JSON pointer).
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::string location, const std::string& message);
  const std::string& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// Immutable collection of points indexed by (view, frame).
///
/// Construction validates: n_views, n_frames and image size positive; every
/// point inside the view/frame range and the image; ground truth carries an id
/// on every point; ids are unique within a (view, frame) cell for both roles.
class Dataset {
 public:
  Dataset(Geometry geometry, std::vector<Point> points, Role role);

  const Geometry& geometry() const noexcept { return geometry_; }
  int n_views() const noexcept { return geometry_.n_views; }
  int n_frames() const noexcept { return geometry_.n_frames; }
  Role role() const noexcept { return role_; }

  std::span<const Point> points() const noexcept { return points_; }
  const Point& point(std::size_t index) const { return points_.at(index); }
  std::size_t size() const noexcept { return points_.size(); }

  /// Indices into points() for one (view, frame), in input order.
  std::span<const std::size_t> cell(int view, int frame) const;

  /// True when any point lacks an id.
  bool has_absent_ids() const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.role_ == b.role_ && a.geometry_ == b.geometry_ && a.points_ == b.points_;
  }

 private:
  Geometry geometry_;
  std::vector<Point> points_;
  Role role_;
  std::vector<std::vector<std::size_t>> cells_;
};

/// Same geometry and role, different points (re-validated).
Dataset with_points(const Dataset& base, std::vector<Point> points);

const char* to_string(Role role);

}  // namespace mvhota
