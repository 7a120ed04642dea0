#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvhota/dataset.hpp"
#include "mvhota/matching.hpp"
#include "mvhota/metrics.hpp"
#include "mvhota/occlusion.hpp"

namespace mvhota {

struct EvalConfig {
  double alpha = 6.0;          // match radius in pixels
  bool per_class = false;      // score each class label separately, then macro-average
  double zero_tp_value = 0.0;  // AssAcc / CorresAcc when there is no true positive
  bool reassign_pred_ids = false;  // drop prediction ids and assign them temporally
};

class GeometryMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Headline scores. det_acc, ass_acc, corres_acc, mv_hota, precision, recall
/// and loc_acc pool every view; hota, mota, idf1 and f1 are per-view scores
/// averaged over the views where they are defined.
struct Scores {
  double det_acc = 0.0;
  double ass_acc = 0.0;
  double corres_acc = 0.0;
  double mv_hota = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  std::optional<double> hota;
  std::optional<double> mota;
  std::optional<double> idf1;
  std::optional<double> f1;
  std::optional<double> loc_acc;  // mean TP distance, px
};

/// Raw counts behind the scores, for error-type decomposition.
struct Tallies {
  DetTally det;
  long gt_count = 0;
  long pred_count = 0;
  long idsw = 0;
  long idtp = 0;
  long tpa = 0;  // sums over all TPs
  long fpa = 0;
  long fna = 0;
  long tpc = 0;
  long fpc = 0;
  long fnc = 0;
};

struct ViewScores {
  int view = 0;
  DetTally det;
  long gt_count = 0;
  long pred_count = 0;
  long idsw = 0;
  long idtp = 0;
  std::optional<double> det_acc;
  std::optional<double> ass_acc;
  std::optional<double> hota;
  std::optional<double> mota;
  std::optional<double> idf1;
  std::optional<double> f1;
};

struct ClassScores {
  std::string label;  // "" for points without a class
  Scores scores;
  Tallies tallies;
};

struct MetricReport {
  double alpha = 0.0;
  Scores scores;
  Tallies tallies;
  std::optional<OcclusionIndex> occlusion;
  std::vector<ViewScores> per_view;    // empty in per-class mode
  std::vector<ClassScores> per_class;  // filled in per-class mode
};

/// Full single-pass result, including intermediate artefacts.
struct Evaluation {
  MetricReport report;
  Dataset prepared_pred;  // predictions with every id assigned
  std::vector<FrameMatch> matches;
  AssTally associations;
  CorresTally correspondences;
};

/// Pipeline: GT id remap -> temporal id assignment where needed -> per-frame
/// matching -> tallies -> scores. Throws GeometryMismatchError when the pair's
/// geometry differs. `config.per_class` is ignored.
Evaluation evaluate_detailed(const Dataset& gt, const Dataset& pred, const EvalConfig& config);

/// evaluate_detailed(...).report, or the per-class macro average.
MetricReport evaluate(const Dataset& gt, const Dataset& pred, const EvalConfig& config);

struct SweepPoint {
  double alpha = 0.0;
  Scores scores;
};

/// Headline scores at alpha = lo, lo + step, ... <= hi (plus a 1e-9 slack).
std::vector<SweepPoint> alpha_sweep(const Dataset& gt, const Dataset& pred, const EvalConfig& config, double lo,
                                    double hi, double step);

}  // namespace mvhota
