#include "mvhota/evaluate.hpp"

#include <cmath>
#include <map>
#include <set>

#include "mvhota/id_map.hpp"
#include "mvhota/validation.hpp"

namespace mvhota {

namespace {

std::optional<double> mean_of(const std::vector<std::optional<double>>& values) {
  double sum = 0.0;
  int n = 0;
  for (const auto& v : values) {
    if (!v) continue;
    sum += *v;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

Dataset prepare_predictions(const Dataset& pred, const EvalConfig& config) {
  if (config.reassign_pred_ids) return assign_temporal_ids(strip_ids(pred), config.alpha);
  if (pred.has_absent_ids()) return assign_temporal_ids(pred, config.alpha);
  return pred;
}

}  // namespace

Evaluation evaluate_detailed(const Dataset& gt, const Dataset& pred, const EvalConfig& config) {
  if (!(config.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (gt.role() != Role::GroundTruth) throw std::invalid_argument("first dataset must be ground truth");
  const ValidationReport validation = validate_pair(gt, pred);
  if (!validation.geometry_ok()) {
    std::string msg = "geometry mismatch:";
    for (const auto& issue : validation.issues)
      if (issue.kind == ValidationIssue::Kind::GeometryMismatch) msg += " " + issue.message + ";";
    throw GeometryMismatchError(msg);
  }

  const RemappedGroundTruth remapped = remap_gt_ids(gt);
  Dataset prepared = prepare_predictions(pred, config);
  std::vector<FrameMatch> matches = match_dataset(remapped.dataset, prepared, config.alpha);

  // Temporal association runs on per-view local GT ids; correspondence needs
  // the global ones. Point order is shared, so match indices apply to both.
  AssTally associations = tally_associations(remapped.dataset, prepared, matches);
  CorresTally correspondences = classify_correspondence(gt, prepared, matches);

  MetricReport report;
  report.alpha = config.alpha;
  Tallies& t = report.tallies;
  t.det = tally_detections(matches);
  t.gt_count = static_cast<long>(gt.size());
  t.pred_count = static_cast<long>(prepared.size());
  for (const auto& c : associations.per_tp) {
    t.tpa += c.tpa;
    t.fpa += c.fpa;
    t.fna += c.fna;
  }
  for (const auto& c : correspondences.per_tp) {
    t.tpc += c.tpc;
    t.fpc += c.fpc;
    t.fnc += c.fnc;
  }

  Scores& s = report.scores;
  const DetectionScores det = detection_scores(t.det);
  s.det_acc = det.det_acc;
  s.precision = det.precision;
  s.recall = det.recall;
  s.ass_acc = ass_acc(associations, config.zero_tp_value);
  s.corres_acc = corres_acc(correspondences, config.zero_tp_value);
  s.mv_hota = t.det.tp > 0 ? mv_hota(s.det_acc, s.ass_acc, s.corres_acc) : 0.0;

  double distance_sum = 0.0;
  for (const FrameMatch& m : matches)
    for (const MatchedPair& tp : m.true_positives) distance_sum += tp.distance;
  if (t.det.tp > 0) s.loc_acc = distance_sum / static_cast<double>(t.det.tp);

  // Per-view scores. TPs are laid out in match order, matches in view order.
  std::vector<std::optional<double>> hotas, motas, idf1s, f1s;
  std::size_t tp_cursor = 0;
  for (int v = 0; v < gt.n_views(); ++v) {
    const auto first = matches.begin() + static_cast<std::ptrdiff_t>(v) * gt.n_frames();
    const std::span<const FrameMatch> view_matches(&*first, static_cast<std::size_t>(gt.n_frames()));

    ViewScores vs;
    vs.view = v;
    vs.det = tally_detections(view_matches);
    vs.gt_count = vs.det.tp + vs.det.fn;
    vs.pred_count = vs.det.tp + vs.det.fp;
    vs.idsw = count_id_switches(gt, prepared, view_matches);
    const IdentityTally identity = identity_tally(gt, prepared, v, config.alpha);
    vs.idtp = identity.idtp;

    AssTally view_ass;
    view_ass.per_tp.assign(associations.per_tp.begin() + static_cast<std::ptrdiff_t>(tp_cursor),
                           associations.per_tp.begin() + static_cast<std::ptrdiff_t>(tp_cursor + vs.det.tp));
    tp_cursor += static_cast<std::size_t>(vs.det.tp);

    if (vs.gt_count + vs.pred_count > 0) {
      const DetectionScores vd = detection_scores(vs.det);
      vs.det_acc = vd.det_acc;
      vs.ass_acc = ass_acc(view_ass, config.zero_tp_value);
      vs.hota = hota(*vs.det_acc, *vs.ass_acc);
      vs.f1 = vd.f1;
    }
    vs.mota = mota(vs.gt_count, vs.det.fn, vs.det.fp, vs.idsw);
    vs.idf1 = idf1(identity);

    t.idsw += vs.idsw;
    t.idtp += vs.idtp;
    hotas.push_back(vs.hota);
    motas.push_back(vs.mota);
    idf1s.push_back(vs.idf1);
    f1s.push_back(vs.f1);
    report.per_view.push_back(vs);
  }
  s.hota = mean_of(hotas);
  s.mota = mean_of(motas);
  s.idf1 = mean_of(idf1s);
  s.f1 = mean_of(f1s);

  report.occlusion = occlusion_index(gt);
  return {std::move(report), std::move(prepared), std::move(matches), std::move(associations),
          std::move(correspondences)};
}

namespace {

Dataset select_class(const Dataset& d, const std::string& label) {
  std::vector<Point> kept;
  for (const Point& p : d.points())
    if (p.class_label.value_or("") == label) kept.push_back(p);
  return with_points(d, std::move(kept));
}

Scores macro_average(const std::vector<ClassScores>& classes) {
  Scores s;
  const double n = static_cast<double>(classes.size());
  std::vector<std::optional<double>> hota, mota, idf1, f1, loc;
  for (const ClassScores& c : classes) {
    s.det_acc += c.scores.det_acc / n;
    s.ass_acc += c.scores.ass_acc / n;
    s.corres_acc += c.scores.corres_acc / n;
    s.mv_hota += c.scores.mv_hota / n;
    s.precision += c.scores.precision / n;
    s.recall += c.scores.recall / n;
    hota.push_back(c.scores.hota);
    mota.push_back(c.scores.mota);
    idf1.push_back(c.scores.idf1);
    f1.push_back(c.scores.f1);
    loc.push_back(c.scores.loc_acc);
  }
  s.hota = mean_of(hota);
  s.mota = mean_of(mota);
  s.idf1 = mean_of(idf1);
  s.f1 = mean_of(f1);
  s.loc_acc = mean_of(loc);
  return s;
}

}  // namespace

MetricReport evaluate(const Dataset& gt, const Dataset& pred, const EvalConfig& config) {
  if (!config.per_class) return evaluate_detailed(gt, pred, config).report;

  std::set<std::string> labels;
  for (const Point& p : gt.points()) labels.insert(p.class_label.value_or(""));
  for (const Point& p : pred.points()) labels.insert(p.class_label.value_or(""));

  MetricReport report;
  report.alpha = config.alpha;
  for (const std::string& label : labels) {
    const MetricReport r = evaluate_detailed(select_class(gt, label), select_class(pred, label), config).report;
    report.per_class.push_back({label, r.scores, r.tallies});
    Tallies& t = report.tallies;
    t.det += r.tallies.det;
    t.gt_count += r.tallies.gt_count;
    t.pred_count += r.tallies.pred_count;
    t.idsw += r.tallies.idsw;
    t.idtp += r.tallies.idtp;
    t.tpa += r.tallies.tpa;
    t.fpa += r.tallies.fpa;
    t.fna += r.tallies.fna;
    t.tpc += r.tallies.tpc;
    t.fpc += r.tallies.fpc;
    t.fnc += r.tallies.fnc;
  }
  if (!report.per_class.empty()) report.scores = macro_average(report.per_class);
  report.occlusion = occlusion_index(gt);
  return report;
}

std::vector<SweepPoint> alpha_sweep(const Dataset& gt, const Dataset& pred, const EvalConfig& config, double lo,
                                    double hi, double step) {
  if (!(lo > 0.0) || !(step > 0.0) || hi < lo) throw std::invalid_argument("alpha sweep needs 0 < lo <= hi, step > 0");
  std::vector<SweepPoint> out;
  for (long i = 0;; ++i) {
    const double alpha = lo + static_cast<double>(i) * step;
    if (alpha > hi + 1e-9) break;
    EvalConfig c = config;
    c.alpha = alpha;
    out.push_back({alpha, evaluate(gt, pred, c).scores});
  }
  return out;
}

}  // namespace mvhota
