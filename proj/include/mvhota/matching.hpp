#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mvhota/assignment.hpp"
#include "mvhota/dataset.hpp"

namespace mvhota {

struct MatchedPair {
  std::size_t gt = 0;    // index of the GT point
  std::size_t pred = 0;  // index of the predicted point
  double distance = 0.0;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// Outcome of matching one (view, frame). Indices refer to the point sequences
/// handed to match_frame, or to Dataset::points() for match_dataset.
struct FrameMatch {
  int view = 0;
  int frame = 0;
  std::vector<MatchedPair> true_positives;    // ascending gt index
  std::vector<std::size_t> false_positives;   // ascending
  std::vector<std::size_t> false_negatives;   // ascending

  friend bool operator==(const FrameMatch&, const FrameMatch&) = default;
};

/// Thresholded Hungarian match. Pairs assigned at distance >= alpha are not
/// matches: each contributes one FN and one FP.
FrameMatch match_frame(std::span<const Point> gt_points, std::span<const Point> pred_points, double alpha,
                       double diagonal_bound);

/// match_frame over every (view, frame) in view-major order, with indices
/// translated to Dataset::points(). Image geometry comes from `gt`.
std::vector<FrameMatch> match_dataset(const Dataset& gt, const Dataset& pred, double alpha);

/// Last known position of every prediction id, per view. Entries never expire,
/// so an id that leaves and re-enters near where it was last seen is recovered.
class TrackRegistry {
 public:
  struct Track {
    double x = 0.0;
    double y = 0.0;
    int last_frame = -1;
  };

  explicit TrackRegistry(int n_views) : views_(n_views) {}

  void observe(int view, const std::string& id, double x, double y, int frame);
  const std::map<std::string, Track>& tracks(int view) const { return views_.at(view); }

 private:
  std::vector<std::map<std::string, Track>> views_;
};

/// Gives every id-less prediction an id by matching each frame, in order and
/// per view, against the registry of all previously seen ids. Predictions that
/// already carry an id keep it. Unmatched predictions get a fresh id
/// "t<view>.<n>" that does not occur anywhere in the input.
Dataset assign_temporal_ids(const Dataset& pred, double alpha);

/// Copy of `dataset` with every id removed.
Dataset strip_ids(const Dataset& dataset);

}  // namespace mvhota
