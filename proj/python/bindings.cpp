#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvhota/dataset_io.hpp"
#include "mvhota/evaluate.hpp"
#include "mvhota/report.hpp"
#include "mvhota/synth.hpp"

namespace py = pybind11;
using namespace mvhota;

namespace {

std::string evaluate_json(const std::string& gt_text, const std::string& pred_text, double alpha, bool per_class,
                          bool reassign_ids, double zero_tp_value) {
  const Dataset gt = parse_dataset(std::string_view(gt_text), Role::GroundTruth, "gt");
  const Dataset pred = parse_dataset(std::string_view(pred_text), Role::Prediction, "pred");
  EvalConfig c;
  c.alpha = alpha;
  c.per_class = per_class;
  c.reassign_pred_ids = reassign_ids;
  c.zero_tp_value = zero_tp_value;
  return report_to_json(evaluate(gt, pred, c)).dump();
}

std::optional<std::string> occlusion_json(const std::string& gt_text) {
  const auto oi = occlusion_index(parse_dataset(std::string_view(gt_text), Role::GroundTruth, "gt"));
  if (!oi) return std::nullopt;
  return occlusion_to_json(*oi).dump();
}

std::pair<std::vector<std::pair<std::size_t, std::size_t>>, double> solve(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows[0].size() : 0;
  std::vector<double> values;
  for (const auto& r : rows) {
    if (r.size() != m) throw std::invalid_argument("cost matrix rows differ in length");
    values.insert(values.end(), r.begin(), r.end());
  }
  const Assignment a = solve_assignment(CostMatrix(n, m, std::move(values)));
  return {a.pairs, a.total_cost};
}

std::pair<std::string, std::string> synth(const SynthConfig& c) {
  const SynthResult r = generate(c);
  return {serialize_dataset(r.gt), serialize_dataset(r.pred)};
}

}  // namespace

PYBIND11_MODULE(_mvhota, m) {
  m.doc() = "Multi-view point tracking evaluation";

  py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
  py::register_exception<GeometryMismatchError>(m, "GeometryMismatchError", PyExc_ValueError);

  py::class_<SynthConfig>(m, "SynthConfig")
      .def(py::init<>())
      .def_readwrite("n_views", &SynthConfig::n_views)
      .def_readwrite("n_frames", &SynthConfig::n_frames)
      .def_readwrite("n_points", &SynthConfig::n_points)
      .def_readwrite("motion_amplitude", &SynthConfig::motion_amplitude)
      .def_readwrite("view_drop_prob", &SynthConfig::view_drop_prob)
      .def_readwrite("temporal_drop_prob", &SynthConfig::temporal_drop_prob)
      .def_readwrite("pred_noise_sigma", &SynthConfig::pred_noise_sigma)
      .def_readwrite("pred_fp_rate", &SynthConfig::pred_fp_rate)
      .def_readwrite("pred_miss_rate", &SynthConfig::pred_miss_rate)
      .def_readwrite("id_switch_prob", &SynthConfig::id_switch_prob)
      .def_readwrite("seed", &SynthConfig::seed)
      .def_readwrite("image_width", &SynthConfig::image_width)
      .def_readwrite("image_height", &SynthConfig::image_height)
      .def_readwrite("view_disparity", &SynthConfig::view_disparity);

  m.def("evaluate_json", &evaluate_json, py::arg("gt"), py::arg("pred"), py::arg("alpha") = 6.0,
        py::arg("per_class") = false, py::arg("reassign_ids") = false, py::arg("zero_tp_value") = 0.0,
        "Score two dataset documents; returns the report as JSON text.");
  m.def("occlusion_json", &occlusion_json, py::arg("gt"));
  m.def("solve_assignment", &solve, py::arg("costs"),
        "Minimum-cost assignment of a rectangular cost matrix: (pairs, total_cost).");
  m.def("synth", &synth, py::arg("config"), "Generate (gt, pred) dataset documents.");
  m.def("mv_hota", &mv_hota, py::arg("det_acc"), py::arg("ass_acc"), py::arg("corres_acc"));
  m.def("hota", &hota, py::arg("det_acc"), py::arg("ass_acc"));
}
