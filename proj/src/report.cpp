#include "mvhota/report.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace mvhota {

using nlohmann::json;

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json scores_to_json(const Scores& s) {
  return {
      {"det_acc", s.det_acc},     {"ass_acc", s.ass_acc}, {"corres_acc", s.corres_acc},
      {"mv_hota", s.mv_hota},     {"precision", s.precision}, {"recall", s.recall},
      {"hota", opt(s.hota)},      {"mota", opt(s.mota)},   {"idf1", opt(s.idf1)},
      {"f1", opt(s.f1)},          {"loc_acc", opt(s.loc_acc)},
  };
}

json tallies_to_json(const Tallies& t) {
  return {
      {"tp", t.det.tp},   {"fp", t.det.fp},   {"fn", t.det.fn},   {"gt_count", t.gt_count},
      {"pred_count", t.pred_count},           {"idsw", t.idsw},   {"idtp", t.idtp},
      {"tpa", t.tpa},     {"fpa", t.fpa},     {"fna", t.fna},     {"tpc", t.tpc},
      {"fpc", t.fpc},     {"fnc", t.fnc},
  };
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

std::string full(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

std::vector<std::optional<double>> table_columns(const Scores& s) {
  return {s.mota, s.idf1, s.f1, s.det_acc, s.ass_acc, s.hota, s.corres_acc, s.mv_hota};
}

const std::vector<std::string> kColumns = {"MOTA", "IDF1", "F1", "DetAcc", "AssAcc", "HOTA", "CorresAcc", "mvHOTA"};

std::string table(const std::vector<std::pair<std::string, Scores>>& rows) {
  std::size_t label_width = 6;
  for (const auto& [label, scores] : rows) label_width = std::max(label_width, label.size());

  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), "Metric");
  out << buf;
  for (const auto& c : kColumns) {
    std::snprintf(buf, sizeof buf, "  %9s", c.c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& [label, scores] : rows) {
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), label.c_str());
    out << buf;
    for (const auto& v : table_columns(scores)) {
      std::snprintf(buf, sizeof buf, "  %9s", cell(v).c_str());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

json occlusion_to_json(const OcclusionIndex& oi) {
  return {
      {"simple", oi.simple},
      {"weighted_per_view", oi.weighted_per_view},
      {"weighted_mean", oi.weighted_mean},
      {"temporal_per_view", oi.temporal_per_view},
      {"temporal_mean", oi.temporal_mean},
      {"multiview_per_view", oi.multiview_per_view},
      {"multiview_mean", oi.multiview_mean},
  };
}

json report_to_json(const MetricReport& report) {
  json out = scores_to_json(report.scores);
  out["alpha"] = report.alpha;
  out["tallies"] = tallies_to_json(report.tallies);
  out["occlusion_index"] = report.occlusion ? occlusion_to_json(*report.occlusion) : json(nullptr);

  json views = json::array();
  for (const ViewScores& v : report.per_view) {
    views.push_back({
        {"view", v.view},         {"tp", v.det.tp},       {"fp", v.det.fp},     {"fn", v.det.fn},
        {"gt_count", v.gt_count}, {"pred_count", v.pred_count},                 {"idsw", v.idsw},
        {"idtp", v.idtp},         {"det_acc", opt(v.det_acc)},                  {"ass_acc", opt(v.ass_acc)},
        {"hota", opt(v.hota)},    {"mota", opt(v.mota)},  {"idf1", opt(v.idf1)}, {"f1", opt(v.f1)},
    });
  }
  out["per_view"] = std::move(views);

  json classes = json::array();
  for (const ClassScores& c : report.per_class) {
    json entry = scores_to_json(c.scores);
    entry["class"] = c.label;
    entry["tallies"] = tallies_to_json(c.tallies);
    classes.push_back(std::move(entry));
  }
  out["per_class"] = std::move(classes);
  return out;
}

std::string render_table(const MetricReport& report, const std::string& row_label) {
  std::vector<std::pair<std::string, Scores>> rows;
  for (const ClassScores& c : report.per_class) rows.emplace_back("class:" + c.label, c.scores);
  rows.emplace_back(report.per_class.empty() ? row_label : row_label + " (macro)", report.scores);

  std::ostringstream out;
  out << table(rows);
  const Tallies& t = report.tallies;
  out << "\nalpha " << cell(report.alpha) << "  TP " << t.det.tp << "  FP " << t.det.fp << "  FN " << t.det.fn
      << "  IDSW " << t.idsw << "  precision " << cell(report.scores.precision) << "  recall "
      << cell(report.scores.recall) << "  LocAcc " << cell(report.scores.loc_acc) << '\n';
  if (report.occlusion) {
    out << "occlusion index " << cell(report.occlusion->simple) << "  weighted " << cell(report.occlusion->weighted_mean)
        << "  temporal " << cell(report.occlusion->temporal_mean) << "  multi-view "
        << cell(report.occlusion->multiview_mean) << '\n';
  }
  return out.str();
}

std::string render_csv(const MetricReport& report, const std::string& row_label) {
  std::ostringstream out;
  out << "row";
  for (const auto& c : kColumns) out << ',' << c;
  out << ",Precision,Recall,LocAcc,TP,FP,FN,IDSW\n";

  auto row = [&](const std::string& label, const Scores& s, const Tallies& t) {
    out << label;
    for (const auto& v : table_columns(s)) out << ',' << full(v);
    out << ',' << full(s.precision) << ',' << full(s.recall) << ',' << full(s.loc_acc) << ',' << t.det.tp << ','
        << t.det.fp << ',' << t.det.fn << ',' << t.idsw << '\n';
  };
  for (const ClassScores& c : report.per_class) row("class:" + c.label, c.scores, c.tallies);
  row(row_label, report.scores, report.tallies);
  return out.str();
}

json sweep_to_json(std::span<const SweepPoint> sweep) {
  json out = json::array();
  for (const SweepPoint& p : sweep) {
    json entry = scores_to_json(p.scores);
    entry["alpha"] = p.alpha;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string render_sweep_table(std::span<const SweepPoint> sweep) {
  std::vector<std::pair<std::string, Scores>> rows;
  for (const SweepPoint& p : sweep) rows.emplace_back("alpha=" + cell(p.alpha), p.scores);
  return table(rows);
}

std::string render_sweep_csv(std::span<const SweepPoint> sweep) {
  std::ostringstream out;
  out << "alpha";
  for (const auto& c : kColumns) out << ',' << c;
  out << ",Precision,Recall,LocAcc\n";
  for (const SweepPoint& p : sweep) {
    out << full(p.alpha);
    for (const auto& v : table_columns(p.scores)) out << ',' << full(v);
    out << ',' << full(p.scores.precision) << ',' << full(p.scores.recall) << ',' << full(p.scores.loc_acc) << '\n';
  }
  return out.str();
}

json matches_to_json(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches) {
  auto point_json = [](const Point& p) {
    return json{{"id", p.id ? json(*p.id) : json(nullptr)}, {"x", p.x}, {"y", p.y}};
  };
  json out = json::array();
  for (const FrameMatch& m : matches) {
    json tps = json::array(), fps = json::array(), fns = json::array();
    for (const MatchedPair& tp : m.true_positives)
      tps.push_back({{"gt", point_json(gt.point(tp.gt))}, {"pred", point_json(pred.point(tp.pred))},
                     {"distance", tp.distance}});
    for (std::size_t i : m.false_positives) fps.push_back(point_json(pred.point(i)));
    for (std::size_t i : m.false_negatives) fns.push_back(point_json(gt.point(i)));
    out.push_back({{"view", m.view}, {"frame", m.frame}, {"tp", std::move(tps)}, {"fp", std::move(fps)},
                   {"fn", std::move(fns)}});
  }
  return out;
}

}  // namespace mvhota
