#include <gtest/gtest.h>

#include <cmath>

#include "mvhota/dataset_io.hpp"
#include "mvhota/synth.hpp"

using namespace mvhota;

TEST(Synth, Deterministic) {
  SynthConfig c;
  c.n_views = 3;
  const SynthResult a = generate(c);
  const SynthResult b = generate(c);
  EXPECT_EQ(serialize_dataset(a.gt), serialize_dataset(b.gt));
  EXPECT_EQ(serialize_dataset(a.pred), serialize_dataset(b.pred));
  c.seed = 43;
  EXPECT_NE(serialize_dataset(generate(c).pred), serialize_dataset(a.pred));
}

TEST(Synth, SortedAndInBounds) {
  SynthConfig c;
  c.n_views = 3;
  c.pred_noise_sigma = 50.0;
  c.pred_fp_rate = 2.0;
  const SynthResult r = generate(c);
  for (const Dataset* d : {&r.gt, &r.pred}) {
    for (std::size_t i = 1; i < d->size(); ++i) {
      const Point& a = d->point(i - 1);
      const Point& b = d->point(i);
      EXPECT_TRUE(std::tie(a.view, a.frame, a.id) < std::tie(b.view, b.frame, b.id));
    }
  }
  EXPECT_FALSE(r.pred.has_absent_ids());
}

TEST(Synth, VisibilityMasksDescribeGt) {
  SynthConfig c;
  c.n_views = 3;
  c.n_points = 7;
  c.view_drop_prob = 0.3;
  c.temporal_drop_prob = 0.2;
  const SynthResult r = generate(c);
  long visible = 0;
  for (int k = 0; k < c.n_points; ++k)
    for (int v = 0; v < c.n_views; ++v)
      for (int f = 0; f < c.n_frames; ++f) {
        const std::size_t i = (static_cast<std::size_t>(k) * c.n_views + v) * c.n_frames + f;
        const bool expect = !r.view_dropped[i] && !r.temporal_dropped[static_cast<std::size_t>(k) * c.n_frames + f];
        EXPECT_EQ(static_cast<bool>(r.visible[i]), expect);
        visible += r.visible[i];
      }
  EXPECT_EQ(visible, static_cast<long>(r.gt.size()));
}

TEST(Synth, CleanPredictionsMatchGt) {
  SynthConfig c;
  c.view_drop_prob = 0.0;
  c.temporal_drop_prob = 0.0;
  c.pred_noise_sigma = 0.0;
  c.pred_fp_rate = 0.0;
  c.pred_miss_rate = 0.0;
  c.id_switch_prob = 0.0;
  const SynthResult r = generate(c);
  ASSERT_EQ(r.gt.size(), static_cast<std::size_t>(c.n_views * c.n_frames * c.n_points));
  ASSERT_EQ(r.pred.size(), r.gt.size());
  for (std::size_t i = 0; i < r.gt.size(); ++i) {
    EXPECT_EQ(r.gt.point(i).x, r.pred.point(i).x);
    EXPECT_EQ(r.gt.point(i).y, r.pred.point(i).y);
  }
}

// Empirical drop rates stay within 3 sigma of the configured probabilities.
TEST(Synth, DropFrequencies) {
  SynthConfig c;
  c.n_views = 2;
  c.n_points = 100;
  c.n_frames = 200;
  c.view_drop_prob = 0.15;
  c.temporal_drop_prob = 0.07;
  c.image_width = 4000;
  c.image_height = 4000;
  const SynthResult r = generate(c);
  auto within = [](const std::vector<char>& v, double p) {
    double hits = 0;
    for (char x : v) hits += x;
    const double n = static_cast<double>(v.size());
    return std::abs(hits - n * p) <= 3.0 * std::sqrt(n * p * (1 - p));
  };
  EXPECT_TRUE(within(r.view_dropped, c.view_drop_prob));
  EXPECT_TRUE(within(r.temporal_dropped, c.temporal_drop_prob));
}

TEST(Synth, ConfigValidation) {
  SynthConfig c;
  c.view_drop_prob = 1.5;
  EXPECT_THROW(generate(c), std::invalid_argument);
  c = {};
  c.pred_miss_rate = -0.1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.n_points = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.image_width = 40;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.pred_noise_sigma = std::nan("");
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Synth, Fixtures) {
  const auto [gt_a, pred_a] = twin_track_fixture(TwinTrackVariant::A);
  const auto [gt_b, pred_b] = twin_track_fixture(TwinTrackVariant::B);
  EXPECT_EQ(gt_a.size(), 16u);
  EXPECT_EQ(gt_b.size(), 8u);
  EXPECT_EQ(pred_a.size(), 16u);
  EXPECT_EQ(pred_b.size(), 8u);
  EXPECT_EQ(three_view_fixture(ThreeViewCase::SpuriousView).first.size(), 2u);
  EXPECT_EQ(three_view_fixture(ThreeViewCase::MissingView).second.size(), 2u);
  EXPECT_EQ(occlusion_fixture(5).n_frames(), 5);
}
