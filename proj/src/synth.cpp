#include "mvhota/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mvhota {

namespace {

// Distributions are written out on top of the engine's raw output, whose
// sequence is fixed by the standard; std:: distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    int k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }

  std::size_t index(std::size_t n) { return std::min(n - 1, static_cast<std::size_t>(uniform() * n)); }

 private:
  std::mt19937_64 engine_;
};

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

double clamp(double v, double hi) { return std::clamp(v, 0.0, hi); }

void sort_points(std::vector<Point>& points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return std::tie(a.view, a.frame, a.id) < std::tie(b.view, b.frame, b.id);
  });
}

struct Trajectory {
  double cx, cy, amp_x, amp_y, omega_x, omega_y, phase_x, phase_y;

  std::pair<double, double> at(int frame, double disparity) const {
    return {cx + amp_x * std::sin(omega_x * frame + phase_x) + disparity,
            cy + amp_y * std::sin(omega_y * frame + phase_y)};
  }
};

}  // namespace

void SynthConfig::validate() const {
  if (n_views < 1) throw std::invalid_argument("n_views must be at least 1");
  if (n_frames < 1) throw std::invalid_argument("n_frames must be at least 1");
  if (n_points < 1) throw std::invalid_argument("n_points must be at least 1");
  if (!(motion_amplitude >= 0.0)) throw std::invalid_argument("motion_amplitude must be non-negative");
  if (!(pred_noise_sigma >= 0.0)) throw std::invalid_argument("pred_noise_sigma must be non-negative");
  if (!(pred_fp_rate >= 0.0)) throw std::invalid_argument("pred_fp_rate must be non-negative");
  if (!(view_disparity >= 0.0)) throw std::invalid_argument("view_disparity must be non-negative");
  check_probability(view_drop_prob, "view_drop_prob");
  check_probability(temporal_drop_prob, "temporal_drop_prob");
  check_probability(pred_miss_rate, "pred_miss_rate");
  check_probability(id_switch_prob, "id_switch_prob");
  const double margin = motion_amplitude + 1.0;
  if (image_width <= 2.0 * margin + view_disparity * (n_views - 1) || image_height <= 2.0 * margin)
    throw std::invalid_argument("image too small for motion_amplitude and view_disparity");
}

SynthResult generate(const SynthConfig& c) {
  c.validate();
  Rng rng(c.seed);
  const double W = c.image_width;
  const double H = c.image_height;
  const double margin = c.motion_amplitude + 1.0;
  const double span_x = c.view_disparity * (c.n_views - 1);

  std::vector<Trajectory> tracks;
  for (int k = 0; k < c.n_points; ++k) {
    Trajectory t;
    t.cx = rng.uniform(margin, W - margin - span_x);
    t.cy = rng.uniform(margin, H - margin);
    t.amp_x = c.motion_amplitude * rng.uniform(0.3, 1.0);
    t.amp_y = c.motion_amplitude * rng.uniform(0.3, 1.0);
    t.omega_x = rng.uniform(0.05, 0.3);
    t.omega_y = rng.uniform(0.05, 0.3);
    t.phase_x = rng.uniform(0.0, 2.0 * std::numbers::pi);
    t.phase_y = rng.uniform(0.0, 2.0 * std::numbers::pi);
    tracks.push_back(t);
  }

  const std::size_t P = c.n_points, V = c.n_views, F = c.n_frames;
  std::vector<char> temporal_dropped(P * F, 0), view_dropped(P * V * F, 0), visible(P * V * F, 0);
  for (std::size_t k = 0; k < P; ++k)
    for (std::size_t f = 0; f < F; ++f) temporal_dropped[k * F + f] = rng.bernoulli(c.temporal_drop_prob);
  for (std::size_t k = 0; k < P; ++k)
    for (std::size_t v = 0; v < V; ++v)
      for (std::size_t f = 0; f < F; ++f) {
        const std::size_t i = (k * V + v) * F + f;
        view_dropped[i] = rng.bernoulli(c.view_drop_prob);
        visible[i] = !view_dropped[i] && !temporal_dropped[k * F + f];
      }

  std::vector<Point> gt_points, pred_points;
  std::vector<std::string> track_id(P * V);
  for (std::size_t k = 0; k < P; ++k)
    for (std::size_t v = 0; v < V; ++v) track_id[k * V + v] = "p" + std::to_string(k);
  long switch_counter = 0;
  long clutter_counter = 0;

  for (int v = 0; v < c.n_views; ++v) {
    const double disparity = c.view_disparity * v;
    for (int f = 0; f < c.n_frames; ++f) {
      std::vector<std::size_t> hidden;
      for (std::size_t k = 0; k < P; ++k) {
        const std::size_t i = (k * V + v) * F + f;
        if (rng.bernoulli(c.id_switch_prob))
          track_id[k * V + v] = "p" + std::to_string(k) + "s" + std::to_string(switch_counter++);

        auto [x, y] = tracks[k].at(f, disparity);
        if (!visible[i]) {
          hidden.push_back(k);
          continue;
        }
        gt_points.push_back({v, f, x, y, "g" + std::to_string(k), std::nullopt});

        const bool missed = rng.bernoulli(c.pred_miss_rate);
        const double nx = rng.normal() * c.pred_noise_sigma;
        const double ny = rng.normal() * c.pred_noise_sigma;
        if (!missed) pred_points.push_back({v, f, clamp(x + nx, W), clamp(y + ny, H), track_id[k * V + v], std::nullopt});
      }

      const int n_fp = rng.poisson(c.pred_fp_rate);
      for (int j = 0; j < n_fp; ++j) {
        const bool ghost = rng.bernoulli(0.5) && !hidden.empty();
        if (ghost) {
          const std::size_t pick = rng.index(hidden.size());
          const std::size_t k = hidden[pick];
          hidden.erase(hidden.begin() + static_cast<std::ptrdiff_t>(pick));
          auto [x, y] = tracks[k].at(f, disparity);
          const double nx = rng.normal() * c.pred_noise_sigma;
          const double ny = rng.normal() * c.pred_noise_sigma;
          pred_points.push_back({v, f, clamp(x + nx, W), clamp(y + ny, H), track_id[k * V + v], std::nullopt});
        } else {
          const double x = rng.uniform(0.0, W);
          const double y = rng.uniform(0.0, H);
          pred_points.push_back({v, f, x, y, "f" + std::to_string(clutter_counter++), std::nullopt});
        }
      }
    }
  }

  sort_points(gt_points);
  sort_points(pred_points);
  const Geometry geometry{c.n_views, c.n_frames, c.image_width, c.image_height};
  return {Dataset(geometry, std::move(gt_points), Role::GroundTruth),
          Dataset(geometry, std::move(pred_points), Role::Prediction), std::move(visible), std::move(view_dropped),
          std::move(temporal_dropped)};
}

namespace {

Point at(int view, int frame, double x, double y, const char* id) { return {view, frame, x, y, id, std::nullopt}; }

}  // namespace

std::pair<Dataset, Dataset> twin_track_fixture(TwinTrackVariant variant) {
  const Geometry geometry{2, 4, 640, 480};
  const double disparity = 30.0;
  auto pos_a = [&](int view, int frame) { return std::pair{100.0 + 2.0 * frame + disparity * view, 100.0}; };
  auto pos_b = [&](int view, int frame) { return std::pair{300.0 + 2.0 * frame + disparity * view, 250.0}; };
  const double dx = 1.5, dy = -1.0;

  std::vector<Point> gt, pred;
  auto add = [&](auto pos, const char* gt_id, int view, int frame, const char* pred_id) {
    auto [x, y] = pos(view, frame);
    gt.push_back(at(view, frame, x, y, gt_id));
    if (pred_id) pred.push_back(at(view, frame, x + dx, y + dy, pred_id));
  };

  // Point a: both views detected in frames 0-2, missed in frame 3 of both views;
  // an id switch in view 0 at frame 2.
  add(pos_a, "a", 0, 0, "pa");
  add(pos_a, "a", 0, 1, "pa");
  add(pos_a, "a", 0, 2, "pa2");
  add(pos_a, "a", 0, 3, nullptr);
  add(pos_a, "a", 1, 0, "pa");
  add(pos_a, "a", 1, 1, "pa");
  add(pos_a, "a", 1, 2, "pa");
  add(pos_a, "a", 1, 3, nullptr);
  pred.push_back(at(0, 1, 500.0, 400.0, "fa"));
  pred.push_back(at(1, 2, 520.0, 60.0, "fa1"));

  if (variant == TwinTrackVariant::A) {
    // Point b: same per-view pattern as a, but its misses fall on different
    // frames in the two views, so its detections lack a partner view.
    add(pos_b, "b", 0, 0, "pb");
    add(pos_b, "b", 0, 1, "pb");
    add(pos_b, "b", 0, 2, "pb2");
    add(pos_b, "b", 0, 3, nullptr);
    add(pos_b, "b", 1, 0, nullptr);
    add(pos_b, "b", 1, 1, "pb");
    add(pos_b, "b", 1, 2, "pb");
    add(pos_b, "b", 1, 3, "pb");
    pred.push_back(at(0, 1, 560.0, 420.0, "fb"));
    pred.push_back(at(1, 2, 580.0, 80.0, "fb1"));
  }

  sort_points(gt);
  sort_points(pred);
  return {Dataset(geometry, std::move(gt), Role::GroundTruth), Dataset(geometry, std::move(pred), Role::Prediction)};
}

std::pair<Dataset, Dataset> three_view_fixture(ThreeViewCase c) {
  const Geometry geometry{3, 1, 640, 480};
  std::vector<Point> gt, pred;
  for (int v = 0; v < 3; ++v) {
    const double x = 200.0 + 25.0 * v;
    const double y = 240.0;
    const bool annotated = !(c == ThreeViewCase::SpuriousView && v == 2);
    const bool predicted = !(c == ThreeViewCase::MissingView && v == 2);
    if (annotated) gt.push_back(at(v, 0, x, y, "q"));
    if (predicted) pred.push_back(at(v, 0, x + 1.0, y + 1.0, "pq"));
  }
  return {Dataset(geometry, std::move(gt), Role::GroundTruth), Dataset(geometry, std::move(pred), Role::Prediction)};
}

Dataset occlusion_fixture(int n_frames) {
  const Geometry geometry{2, n_frames, 640, 480};
  std::vector<Point> gt;
  const char* ids[] = {"s1", "s2", "s3", "s4"};
  for (int f = 0; f < n_frames; ++f) {
    for (int k = 0; k < 4; ++k) {
      const double x = 100.0 + 80.0 * k + f;
      const double y = 200.0;
      // s4 is only visible in one view, alternating between frames.
      if (k < 3) {
        gt.push_back(at(0, f, x, y, ids[k]));
        gt.push_back(at(1, f, x + 30.0, y, ids[k]));
      } else {
        gt.push_back(at(f % 2, f, x + 30.0 * (f % 2), y, ids[k]));
      }
    }
  }
  sort_points(gt);
  return Dataset(geometry, std::move(gt), Role::GroundTruth);
}

}  // namespace mvhota
