#include "mvhota/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mvhota {

namespace {

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

const std::string& id_of(const Dataset& d, std::size_t index) {
  const Point& p = d.point(index);
  if (!p.id) throw std::invalid_argument("point " + std::to_string(index) + " has no id");
  return *p.id;
}

}  // namespace

DetTally tally_detections(std::span<const FrameMatch> matches) {
  DetTally t;
  for (const FrameMatch& m : matches) {
    t.tp += static_cast<long>(m.true_positives.size());
    t.fp += static_cast<long>(m.false_positives.size());
    t.fn += static_cast<long>(m.false_negatives.size());
  }
  return t;
}

DetectionScores detection_scores(const DetTally& t) {
  const double tp = static_cast<double>(t.tp);
  const double fp = static_cast<double>(t.fp);
  const double fn = static_cast<double>(t.fn);
  DetectionScores s;
  s.det_acc = ratio(tp, tp + fp + fn);
  s.precision = ratio(tp, tp + fp);
  s.recall = ratio(tp, tp + fn);
  s.f1 = ratio(2.0 * tp, 2.0 * tp + fp + fn);
  return s;
}

AssTally tally_associations(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches) {
  using Key = std::tuple<int, std::string, std::string>;
  std::map<Key, long> pair_count;
  std::map<std::pair<int, std::string>, long> gt_count, pred_count;

  for (const Point& p : gt.points()) ++gt_count[{p.view, p.id.value()}];
  for (std::size_t i = 0; i < pred.size(); ++i) ++pred_count[{pred.point(i).view, id_of(pred, i)}];
  for (const FrameMatch& m : matches)
    for (const MatchedPair& tp : m.true_positives) ++pair_count[{m.view, id_of(gt, tp.gt), id_of(pred, tp.pred)}];

  AssTally tally;
  for (const FrameMatch& m : matches) {
    for (const MatchedPair& tp : m.true_positives) {
      const std::string& g = id_of(gt, tp.gt);
      const std::string& p = id_of(pred, tp.pred);
      AssociationCounts c;
      c.tpa = pair_count.at({m.view, g, p});
      c.fna = gt_count.at({m.view, g}) - c.tpa;
      c.fpa = pred_count.at({m.view, p}) - c.tpa;
      tally.per_tp.push_back(c);
    }
  }
  return tally;
}

double ass_acc(const AssTally& tally, double zero_tp_value) {
  if (tally.per_tp.empty()) return zero_tp_value;
  double sum = 0.0;
  for (const AssociationCounts& c : tally.per_tp) sum += c.jaccard();
  return sum / static_cast<double>(tally.per_tp.size());
}

CorresTally classify_correspondence(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches) {
  // (view, frame) -> ids; the frame's views are scanned per TP.
  using Cell = std::pair<int, int>;
  std::map<Cell, std::set<std::string, std::less<>>> gt_present, gt_detected, pred_present;
  for (const Point& p : gt.points()) gt_present[{p.view, p.frame}].insert(p.id.value());
  for (std::size_t i = 0; i < pred.size(); ++i)
    pred_present[{pred.point(i).view, pred.point(i).frame}].insert(id_of(pred, i));
  for (const FrameMatch& m : matches)
    for (const MatchedPair& tp : m.true_positives) gt_detected[{m.view, m.frame}].insert(id_of(gt, tp.gt));

  auto contains = [](const auto& index, Cell cell, const std::string& id) {
    auto it = index.find(cell);
    return it != index.end() && it->second.count(id) > 0;
  };

  CorresTally tally;
  const int n_views = gt.n_views();
  for (const FrameMatch& m : matches) {
    for (const MatchedPair& tp : m.true_positives) {
      const std::string& g = id_of(gt, tp.gt);
      const std::string& p = id_of(pred, tp.pred);
      CorrespondenceCounts c;
      if (n_views == 1) c.tpc = 1;
      for (int v = 0; v < n_views; ++v) {
        if (v == m.view) continue;
        const Cell cell{v, m.frame};
        if (contains(gt_present, cell, g)) {
          if (contains(gt_detected, cell, g))
            ++c.tpc;
          else
            ++c.fnc;
        } else if (contains(pred_present, cell, p)) {
          ++c.fpc;
        } else {
          ++c.tpc;
        }
      }
      tally.per_tp.push_back(c);
    }
  }
  return tally;
}

double corres_acc(const CorresTally& tally, double zero_tp_value) {
  if (tally.per_tp.empty()) return zero_tp_value;
  double sum = 0.0;
  for (const CorrespondenceCounts& c : tally.per_tp) sum += c.jaccard();
  return sum / static_cast<double>(tally.per_tp.size());
}

double mv_hota(double det_acc, double ass_acc, double corres_acc) { return std::cbrt(det_acc * ass_acc * corres_acc); }

double hota(double det_acc, double ass_acc) { return std::sqrt(det_acc * ass_acc); }

std::optional<double> mota(long gt_count, long fn, long fp, long idsw) {
  if (gt_count <= 0) return std::nullopt;
  return 1.0 - static_cast<double>(fn + fp + idsw) / static_cast<double>(gt_count);
}

long count_id_switches(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches) {
  // Visit matches in (view, frame) order regardless of input order.
  std::vector<const FrameMatch*> ordered;
  for (const FrameMatch& m : matches) ordered.push_back(&m);
  std::stable_sort(ordered.begin(), ordered.end(), [](const FrameMatch* a, const FrameMatch* b) {
    return std::tie(a->view, a->frame) < std::tie(b->view, b->frame);
  });

  std::map<std::pair<int, std::string>, std::string> last_match;
  long switches = 0;
  for (const FrameMatch* m : ordered) {
    for (const MatchedPair& tp : m->true_positives) {
      const std::string& p = id_of(pred, tp.pred);
      auto [it, inserted] = last_match.try_emplace({m->view, id_of(gt, tp.gt)}, p);
      if (!inserted && it->second != p) {
        ++switches;
        it->second = p;
      }
    }
  }
  return switches;
}

IdentityTally identity_tally(const Dataset& gt, const Dataset& pred, int view, double alpha) {
  std::map<std::string, std::size_t> gt_ids, pred_ids;
  IdentityTally t;
  for (int f = 0; f < gt.n_frames(); ++f) {
    for (std::size_t i : gt.cell(view, f)) gt_ids.emplace(id_of(gt, i), 0);
    t.gt_count += static_cast<long>(gt.cell(view, f).size());
  }
  for (int f = 0; f < pred.n_frames(); ++f) {
    for (std::size_t i : pred.cell(view, f)) pred_ids.emplace(id_of(pred, i), 0);
    t.pred_count += static_cast<long>(pred.cell(view, f).size());
  }
  if (gt_ids.empty() || pred_ids.empty()) return t;

  std::size_t k = 0;
  for (auto& [id, index] : gt_ids) index = k++;
  k = 0;
  for (auto& [id, index] : pred_ids) index = k++;

  std::vector<long> overlap(gt_ids.size() * pred_ids.size(), 0);
  const int frames = std::min(gt.n_frames(), pred.n_frames());
  for (int f = 0; f < frames; ++f) {
    for (std::size_t gi : gt.cell(view, f)) {
      const Point& g = gt.point(gi);
      for (std::size_t pi : pred.cell(view, f)) {
        const Point& p = pred.point(pi);
        if (std::hypot(g.x - p.x, g.y - p.y) < alpha)
          ++overlap[gt_ids.at(*g.id) * pred_ids.size() + pred_ids.at(id_of(pred, pi))];
      }
    }
  }

  const long most = *std::max_element(overlap.begin(), overlap.end());
  CostMatrix costs(gt_ids.size(), pred_ids.size());
  for (std::size_t r = 0; r < gt_ids.size(); ++r)
    for (std::size_t c = 0; c < pred_ids.size(); ++c)
      costs(r, c) = static_cast<double>(most - overlap[r * pred_ids.size() + c]);
  for (auto [r, c] : solve_assignment(costs).pairs) t.idtp += overlap[r * pred_ids.size() + c];
  return t;
}

std::optional<double> idf1(const IdentityTally& t) {
  const long den = t.gt_count + t.pred_count;
  if (den == 0) return std::nullopt;
  return 2.0 * static_cast<double>(t.idtp) / static_cast<double>(den);
}

}  // namespace mvhota
