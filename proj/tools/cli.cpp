#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mvhota/dataset_io.hpp"
#include "mvhota/evaluate.hpp"
#include "mvhota/report.hpp"
#include "mvhota/synth.hpp"
#include "mvhota/validation.hpp"

namespace mvhota::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoFailure("cannot write " + path);
  file << text;
  if (!file.flush()) throw IoFailure("cannot write " + path);
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

struct SweepSpec {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec s;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  in >> s.lo >> c1 >> s.hi >> c2 >> s.step;
  if (!in || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw std::invalid_argument("--alpha-sweep expects LO:HI:STEP, got '" + text + "'");
  return s;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct EvaluateFlags {
  std::string gt, pred, output, format = "table", dump_matches, sweep, meta;
  double alpha = 6.0;
  bool assign_ids = false, per_class = false, force = false;
};

int run_evaluate(const EvaluateFlags& f, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  const Dataset gt = load_dataset(f.gt, Role::GroundTruth);
  Dataset pred = load_dataset(f.pred, Role::Prediction);

  const ValidationReport validation = validate_pair(gt, pred);
  if (!validation.geometry_ok()) {
    for (const auto& issue : validation.issues)
      if (issue.kind == ValidationIssue::Kind::GeometryMismatch) err << "geometry mismatch: " << issue.message << '\n';
    if (!f.force) {
      err << "rerun with --force to score predictions inside the ground-truth geometry\n";
      return kInvalid;
    }
    pred = conform_to(gt.geometry(), pred);
  }

  EvalConfig config;
  config.alpha = f.alpha;
  config.per_class = f.per_class;
  config.reassign_pred_ids = f.assign_ids;
  const MetricReport report = evaluate(gt, pred, config);

  std::vector<SweepPoint> sweep;
  if (!f.sweep.empty()) {
    const SweepSpec s = parse_sweep(f.sweep);
    sweep = alpha_sweep(gt, pred, config, s.lo, s.hi, s.step);
  }

  std::string text;
  if (f.format == "json") {
    json j = report_to_json(report);
    if (!f.sweep.empty()) j["alpha_sweep"] = sweep_to_json(sweep);
    text = pretty(j);
  } else if (f.format == "csv") {
    text = render_csv(report);
    if (!f.sweep.empty()) text += "\n" + render_sweep_csv(sweep);
  } else {
    text = render_table(report);
    if (!f.sweep.empty()) text += "\n" + render_sweep_table(sweep);
  }
  write_text(f.output, text, out);

  if (!f.dump_matches.empty()) {
    const Evaluation detailed = evaluate_detailed(gt, pred, config);
    write_text(f.dump_matches, pretty(matches_to_json(gt, detailed.prepared_pred, detailed.matches)), out);
  }
  if (!f.meta.empty()) {
    const json meta = {{"tool", "mvhota"},
                       {"version", kVersion},
                       {"arguments", args},
                       {"gt", std::filesystem::absolute(f.gt).string()},
                       {"pred", std::filesystem::absolute(f.pred).string()},
                       {"created_utc", utc_now()}};
    write_text(f.meta, pretty(meta), out);
  }
  return kOk;
}

int run_synth(const SynthConfig& config, const std::string& out_dir, std::ostream& out) {
  config.validate();
  const SynthResult r = generate(config);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoFailure("cannot create " + out_dir + ": " + ec.message());
  const std::filesystem::path dir(out_dir);
  write_text((dir / "gt.json").string(), serialize_dataset(r.gt), out);
  write_text((dir / "pred.json").string(), serialize_dataset(r.pred), out);

  out << "wrote " << (dir / "gt.json").string() << " (" << r.gt.size() << " points) and "
      << (dir / "pred.json").string() << " (" << r.pred.size() << " points)\n";
  const auto oi = occlusion_index(r.gt);
  if (!oi) {
    out << "occlusion index n/a (no ground-truth points)\n";
    return kOk;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "occlusion index %.4f  weighted %.4f  temporal %.4f  multi-view %.4f\n", oi->simple,
                oi->weighted_mean, oi->temporal_mean, oi->multiview_mean);
  out << buf;
  return kOk;
}

int run_validate(const std::string& gt_path, const std::string& pred_path, std::ostream& out) {
  const Dataset gt = load_dataset(gt_path, Role::GroundTruth);
  out << gt_path << ": ok, " << gt.size() << " points, " << gt.n_views() << " views, " << gt.n_frames()
      << " frames\n";
  if (pred_path.empty()) return kOk;
  const Dataset pred = load_dataset(pred_path, Role::Prediction);
  out << pred_path << ": ok, " << pred.size() << " points\n";
  const ValidationReport report = validate_pair(gt, pred);
  for (const auto& issue : report.issues) out << (issue.kind == ValidationIssue::Kind::GeometryMismatch ? "error: " : "note: ") << issue.message << '\n';
  return report.geometry_ok() ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-view point tracking evaluation", "mvhota"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  EvaluateFlags ef;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against ground truth");
  evaluate_cmd->add_option("--gt", ef.gt, "Ground-truth JSON")->required();
  evaluate_cmd->add_option("--pred", ef.pred, "Prediction JSON")->required();
  evaluate_cmd->add_option("--alpha", ef.alpha, "Match radius in pixels")->capture_default_str();
  evaluate_cmd->add_flag("--assign-ids", ef.assign_ids, "Discard prediction ids and assign them temporally");
  evaluate_cmd->add_flag("--per-class", ef.per_class, "Score each class label, then macro-average");
  evaluate_cmd->add_option("--output", ef.output, "Report path (default stdout)");
  evaluate_cmd->add_option("--format", ef.format, "Report format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  evaluate_cmd->add_option("--dump-matches", ef.dump_matches, "Write per-frame matches as JSON");
  evaluate_cmd->add_option("--alpha-sweep", ef.sweep, "Also score at alpha = LO:HI:STEP");
  evaluate_cmd->add_flag("--force", ef.force, "Score despite a geometry mismatch");
  evaluate_cmd->add_option("--meta", ef.meta, "Write provenance JSON (timestamp, arguments) to this path");

  SynthConfig sc;
  std::string out_dir = ".";
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic ground-truth/prediction pair");
  synth_cmd->add_option("--out-dir", out_dir, "Directory for gt.json and pred.json")->capture_default_str();
  synth_cmd->add_option("--n-views", sc.n_views)->capture_default_str();
  synth_cmd->add_option("--n-frames", sc.n_frames)->capture_default_str();
  synth_cmd->add_option("--n-points", sc.n_points)->capture_default_str();
  synth_cmd->add_option("--motion-amplitude", sc.motion_amplitude)->capture_default_str();
  synth_cmd->add_option("--view-drop-prob", sc.view_drop_prob)->capture_default_str();
  synth_cmd->add_option("--temporal-drop-prob", sc.temporal_drop_prob)->capture_default_str();
  synth_cmd->add_option("--pred-noise-sigma", sc.pred_noise_sigma)->capture_default_str();
  synth_cmd->add_option("--pred-fp-rate", sc.pred_fp_rate)->capture_default_str();
  synth_cmd->add_option("--pred-miss-rate", sc.pred_miss_rate)->capture_default_str();
  synth_cmd->add_option("--id-switch-prob", sc.id_switch_prob)->capture_default_str();
  synth_cmd->add_option("--seed", sc.seed)->capture_default_str();
  synth_cmd->add_option("--image-width", sc.image_width)->capture_default_str();
  synth_cmd->add_option("--image-height", sc.image_height)->capture_default_str();
  synth_cmd->add_option("--view-disparity", sc.view_disparity)->capture_default_str();

  std::string vgt, vpred;
  auto* validate_cmd = app.add_subcommand("validate", "Check dataset files and a GT/prediction pair");
  validate_cmd->add_option("--gt", vgt, "Ground-truth JSON")->required();
  validate_cmd->add_option("--pred", vpred, "Prediction JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (evaluate_cmd->parsed()) return run_evaluate(ef, args, out, err);
    if (synth_cmd->parsed()) return run_synth(sc, out_dir, out);
    return run_validate(vgt, vpred, out);
  } catch (const DatasetError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const GeometryMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace mvhota::cli
