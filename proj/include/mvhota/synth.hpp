#pragma once

#include <cstdint>
#include <vector>

#include "mvhota/dataset.hpp"

namespace mvhota {

struct SynthConfig {
  int n_views = 2;
  int n_frames = 20;
  int n_points = 5;
  double motion_amplitude = 20.0;   // px, sinusoid amplitude
  double view_drop_prob = 0.1;      // per point, view and frame: spatial occlusion
  double temporal_drop_prob = 0.05; // per point and frame: hidden in every view
  double pred_noise_sigma = 1.5;    // px
  double pred_fp_rate = 0.2;        // expected false positives per view and frame
  double pred_miss_rate = 0.1;      // per visible GT observation
  double id_switch_prob = 0.02;     // per point, view and frame
  std::uint64_t seed = 42;
  int image_width = 640;
  int image_height = 480;
  double view_disparity = 30.0;     // horizontal offset between consecutive views, px

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SynthResult {
  Dataset gt;
  Dataset pred;
  // Indexed [(point * n_views + view) * n_frames + frame].
  std::vector<char> visible;
  std::vector<char> view_dropped;
  // Indexed [point * n_frames + frame].
  std::vector<char> temporal_dropped;
};

/// Smooth sinusoidal trajectories with a constant per-view disparity. GT ids
/// are "g<k>"; prediction ids start as "p<k>" in every view, change to
/// "p<k>s<n>" on an id switch, and false positives are either ghosts reusing
/// the id of a point hidden in that view or clutter named "f<n>". Output points
/// are sorted by (view, frame, id). Identical configs give identical output.
SynthResult generate(const SynthConfig& config);

enum class TwinTrackVariant { A, B };

/// Stereo toy pair: variant A has two GT ids, B drops the second id and its
/// predictions. Per-view detection, association and identity scores agree
/// between variants; only the cross-view correspondence differs.
std::pair<Dataset, Dataset> twin_track_fixture(TwinTrackVariant variant);

enum class ThreeViewCase { AllCorresponded, SpuriousView, MissingView };

/// Three-view single-frame pairs isolating TPC (all views detected), FPC (a
/// prediction in a view without GT) and FNC (an annotated view left undetected).
std::pair<Dataset, Dataset> three_view_fixture(ThreeViewCase c);

/// Stereo GT with four points per frame, three annotated in both views.
Dataset occlusion_fixture(int n_frames = 3);

}  // namespace mvhota
