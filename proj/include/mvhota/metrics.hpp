#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mvhota/dataset.hpp"
#include "mvhota/matching.hpp"

namespace mvhota {

// Detection -----------------------------------------------------------------

struct DetTally {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  DetTally& operator+=(const DetTally& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const DetTally&, const DetTally&) = default;
};

struct DetectionScores {
  double det_acc = 0.0;  // tp / (tp + fp + fn)
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;  // 2tp / (2tp + fp + fn)
};

DetTally tally_detections(std::span<const FrameMatch> matches);

/// Any ratio with a zero denominator is 0.
DetectionScores detection_scores(const DetTally& tally);

// Temporal association --------------------------------------------------------

struct AssociationCounts {
  long tpa = 0;
  long fpa = 0;
  long fna = 0;
  double jaccard() const { return static_cast<double>(tpa) / static_cast<double>(tpa + fpa + fna); }
};

/// One entry per true positive, in match order. For a TP (g, p) in view v:
/// TPA counts TPs in v pairing g with p, FNA the remaining GT detections of g
/// in v, FPA the remaining detections of p in v. Ids are compared per view.
struct AssTally {
  std::vector<AssociationCounts> per_tp;
};

AssTally tally_associations(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches);

/// Mean per-TP association Jaccard; `zero_tp_value` when there is no TP.
double ass_acc(const AssTally& tally, double zero_tp_value = 0.0);

// Multi-view correspondence ----------------------------------------------------

struct CorrespondenceCounts {
  long tpc = 0;
  long fpc = 0;
  long fnc = 0;
  double jaccard() const { return static_cast<double>(tpc) / static_cast<double>(tpc + fpc + fnc); }
};

/// One entry per true positive, in match order.
///
/// A TP for GT id g with prediction id p in view u, frame f is compared with
/// every other view v at frame f:
///   - g annotated in v: TPC when g is a TP in v, FNC otherwise;
///   - g not annotated in v: FPC when a prediction in v carries id p, TPC otherwise.
/// With a single view each TP counts one TPC for its own view.
///
/// GT ids must be the global (cross-view) ids.
struct CorresTally {
  std::vector<CorrespondenceCounts> per_tp;
};

CorresTally classify_correspondence(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches);

/// Mean per-TP correspondence Jaccard; `zero_tp_value` when there is no TP.
double corres_acc(const CorresTally& tally, double zero_tp_value = 0.0);

// Combined scores --------------------------------------------------------------

/// Cube root of the product: the geometric mean of the three accuracies.
double mv_hota(double det_acc, double ass_acc, double corres_acc);

double hota(double det_acc, double ass_acc);

/// CLEAR-MOT accuracy 1 - (fn + fp + idsw) / gt_count; empty when gt_count is 0.
std::optional<double> mota(long gt_count, long fn, long fp, long idsw);

/// Identity switches: a GT id whose matched prediction id differs from the one
/// of its most recent earlier match in the same view.
long count_id_switches(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches);

struct IdentityTally {
  long idtp = 0;
  long gt_count = 0;
  long pred_count = 0;
};

/// Trajectory-level matching in one view: GT ids and prediction ids are paired
/// one-to-one to maximise the number of frames where both are present within
/// distance < alpha.
IdentityTally identity_tally(const Dataset& gt, const Dataset& pred, int view, double alpha);

/// 2 IDTP / (2 IDTP + IDFP + IDFN); empty when there is neither GT nor prediction.
std::optional<double> idf1(const IdentityTally& tally);

}  // namespace mvhota
