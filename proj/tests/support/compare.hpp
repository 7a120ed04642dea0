#pragma once

// Field-by-field comparison of a library evaluation with the oracle.

#include <cmath>
#include <sstream>
#include <string>

#include "mvhota/evaluate.hpp"
#include "oracle/oracle.hpp"
#include "support/scenes.hpp"

namespace scenes {

class Mismatch {
 public:
  explicit Mismatch(double tol) : tol_(tol) {}

  void num(const char* name, double got, double want) {
    if (!(std::abs(got - want) <= tol_)) note(name, got, want);
  }
  void opt(const char* name, const std::optional<double>& got, const std::optional<double>& want) {
    if (got.has_value() != want.has_value()) {
      out_ << name << ": defined " << got.has_value() << " vs " << want.has_value() << "; ";
      return;
    }
    if (got) num(name, *got, *want);
  }
  void count(const char* name, long got, long want) {
    if (got != want) note(name, static_cast<double>(got), static_cast<double>(want));
  }
  std::string str() const { return out_.str(); }

 private:
  void note(const char* name, double got, double want) {
    out_.precision(17);
    out_ << name << ": " << got << " vs " << want << "; ";
  }
  double tol_;
  std::ostringstream out_;
};

/// Empty when every score, tally and occlusion value agrees within `tol`.
inline std::string compare_with_oracle(const Scene& s, double alpha, double tol) {
  mvhota::EvalConfig config;
  config.alpha = alpha;
  config.reassign_pred_ids = s.mode == IdMode::Reassign;
  const mvhota::MetricReport r = mvhota::evaluate(s.gt, s.pred, config);
  const oracle::Result o = oracle::evaluate(s.gt, s.pred, alpha, config.reassign_pred_ids);

  Mismatch m(tol);
  m.count("tp", r.tallies.det.tp, o.tp);
  m.count("fp", r.tallies.det.fp, o.fp);
  m.count("fn", r.tallies.det.fn, o.fn);
  m.count("idsw", r.tallies.idsw, o.idsw);
  m.count("idtp", r.tallies.idtp, o.idtp);
  m.count("tpa", r.tallies.tpa, o.tpa);
  m.count("fpa", r.tallies.fpa, o.fpa);
  m.count("fna", r.tallies.fna, o.fna);
  m.count("tpc", r.tallies.tpc, o.tpc);
  m.count("fpc", r.tallies.fpc, o.fpc);
  m.count("fnc", r.tallies.fnc, o.fnc);
  m.num("det_acc", r.scores.det_acc, o.det_acc);
  m.num("ass_acc", r.scores.ass_acc, o.ass_acc);
  m.num("corres_acc", r.scores.corres_acc, o.corres_acc);
  m.num("mv_hota", r.scores.mv_hota, o.mv_hota);
  m.num("precision", r.scores.precision, o.precision);
  m.num("recall", r.scores.recall, o.recall);
  m.opt("hota", r.scores.hota, o.hota);
  m.opt("mota", r.scores.mota, o.mota);
  m.opt("idf1", r.scores.idf1, o.idf1);
  m.opt("f1", r.scores.f1, o.f1);
  m.opt("loc_acc", r.scores.loc_acc, o.loc_acc);
  for (std::size_t v = 0; v < r.per_view.size(); ++v) {
    m.opt("view hota", r.per_view[v].hota, o.view_hota[v]);
    m.opt("view mota", r.per_view[v].mota, o.view_mota[v]);
    m.opt("view idf1", r.per_view[v].idf1, o.view_idf1[v]);
    m.opt("view f1", r.per_view[v].f1, o.view_f1[v]);
  }

  const auto oi = oracle::occlusion(s.gt);
  if (oi.has_value() != r.occlusion.has_value()) return m.str() + "occlusion presence differs";
  if (oi) {
    m.num("oi simple", r.occlusion->simple, oi->simple);
    for (std::size_t v = 0; v < oi->weighted.size(); ++v) {
      m.num("oi weighted", r.occlusion->weighted_per_view[v], oi->weighted[v]);
      m.num("oi temporal", r.occlusion->temporal_per_view[v], oi->temporal[v]);
      m.num("oi multiview", r.occlusion->multiview_per_view[v], oi->multiview[v]);
    }
  }
  return m.str();
}

}  // namespace scenes
