#include <gtest/gtest.h>

#include <random>

#include "mvhota/matching.hpp"
#include "mvhota/synth.hpp"
#include "oracle/oracle.hpp"
#include "support/scenes.hpp"

using namespace mvhota;

namespace {

Point pt(int v, int f, double x, double y, std::optional<std::string> id = std::nullopt) {
  return {v, f, x, y, std::move(id), std::nullopt};
}

}  // namespace

TEST(MatchFrame, ThresholdIsStrict) {
  const std::vector<Point> gt = {pt(0, 0, 10, 10, "a"), pt(0, 0, 50, 50, "b")};
  const std::vector<Point> pred = {pt(0, 0, 16, 10, "p"), pt(0, 0, 52, 50, "q")};
  const FrameMatch m = match_frame(gt, pred, 6.0, 1000.0);
  ASSERT_EQ(m.true_positives.size(), 1u);
  EXPECT_EQ(m.true_positives[0], (MatchedPair{1, 1, 2.0}));
  EXPECT_EQ(m.false_negatives, std::vector<std::size_t>{0});
  EXPECT_EQ(m.false_positives, std::vector<std::size_t>{0});
}

TEST(MatchFrame, GlobalOptimumBeatsGreedy) {
  // Greedy nearest-first would pair (a, p) at 1 and leave b unmatched.
  const std::vector<Point> gt = {pt(0, 0, 10, 10, "a"), pt(0, 0, 14, 10, "b")};
  const std::vector<Point> pred = {pt(0, 0, 11, 10, "p"), pt(0, 0, 6, 10, "q")};
  const FrameMatch m = match_frame(gt, pred, 5.0, 1000.0);
  ASSERT_EQ(m.true_positives.size(), 2u);
  EXPECT_EQ(m.true_positives[0].pred, 1u);
  EXPECT_EQ(m.true_positives[1].pred, 0u);
  EXPECT_TRUE(m.false_negatives.empty());
  EXPECT_TRUE(m.false_positives.empty());
}

TEST(MatchFrame, EmptySides) {
  const std::vector<Point> some = {pt(0, 0, 1, 1, "a"), pt(0, 0, 2, 2, "b")};
  const FrameMatch only_gt = match_frame(some, {}, 6.0, 10.0);
  EXPECT_EQ(only_gt.false_negatives.size(), 2u);
  const FrameMatch only_pred = match_frame({}, some, 6.0, 10.0);
  EXPECT_EQ(only_pred.false_positives.size(), 2u);
}

TEST(MatchDataset, IndicesReferToDatasetPoints) {
  const auto [gt, pred] = twin_track_fixture(TwinTrackVariant::A);
  const auto matches = match_dataset(gt, pred, 6.0);
  ASSERT_EQ(matches.size(), 8u);
  for (std::size_t k = 0; k < matches.size(); ++k) {
    EXPECT_EQ(matches[k].view, static_cast<int>(k / 4));
    EXPECT_EQ(matches[k].frame, static_cast<int>(k % 4));
    for (const auto& tp : matches[k].true_positives) {
      EXPECT_EQ(gt.point(tp.gt).view, matches[k].view);
      EXPECT_EQ(pred.point(tp.pred).frame, matches[k].frame);
    }
  }
  const Dataset other({3, 4, 640, 480}, {}, Role::Prediction);
  EXPECT_THROW(match_dataset(gt, other, 6.0), std::invalid_argument);
}

TEST(TemporalIds, FollowsTracksAndRecoversAfterGap) {
  const Geometry g{1, 4, 200, 200};
  const Dataset pred(g,
                     {pt(0, 0, 10, 10), pt(0, 0, 100, 100), pt(0, 1, 12, 10), pt(0, 1, 102, 100),
                      // Frame 2: the first track is missing; frame 3: it is back near its last position.
                      pt(0, 2, 104, 100), pt(0, 3, 14, 10), pt(0, 3, 106, 100)},
                     Role::Prediction);
  const Dataset out = assign_temporal_ids(pred, 6.0);
  EXPECT_FALSE(out.has_absent_ids());
  EXPECT_EQ(*out.point(0).id, "t0.0");
  EXPECT_EQ(*out.point(1).id, "t0.1");
  EXPECT_EQ(*out.point(2).id, "t0.0");
  EXPECT_EQ(*out.point(3).id, "t0.1");
  EXPECT_EQ(*out.point(4).id, "t0.1");
  EXPECT_EQ(*out.point(5).id, "t0.0");
  EXPECT_EQ(*out.point(6).id, "t0.1");
}

TEST(TemporalIds, KeepsGivenIdsAndAvoidsCollisions) {
  const Geometry g{2, 2, 200, 200};
  const Dataset pred(g,
                     {pt(0, 0, 10, 10, "t0.0"), pt(0, 0, 50, 50), pt(0, 1, 11, 10), pt(0, 1, 51, 50, "t0.0"),
                      pt(1, 0, 10, 10)},
                     Role::Prediction);
  const Dataset out = assign_temporal_ids(pred, 6.0);
  EXPECT_EQ(*out.point(0).id, "t0.0");
  EXPECT_EQ(*out.point(1).id, "t0.1");  // "t0.0" is taken
  // Frame 1: "t0.0" is carried by a labelled point, so it is not a candidate.
  EXPECT_EQ(*out.point(2).id, "t0.2");
  EXPECT_EQ(*out.point(3).id, "t0.0");
  EXPECT_EQ(*out.point(4).id, "t1.0");
}

TEST(TemporalIds, StripIds) {
  const auto [gt, pred] = twin_track_fixture(TwinTrackVariant::A);
  const Dataset s = strip_ids(pred);
  EXPECT_EQ(s.size(), pred.size());
  for (const Point& p : s.points()) EXPECT_FALSE(p.id);
}

TEST(MatchingProperty, AgreesWithBruteForceOnRandomScenes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const scenes::Scene s = scenes::random_scene(rng);
    const Dataset pred = s.mode == scenes::IdMode::Keep ? s.pred : strip_ids(s.pred);
    const Dataset got = assign_temporal_ids(pred, 6.0);
    const Dataset want = oracle::temporal_ids(pred, 6.0);
    ASSERT_EQ(got, want) << "trial " << trial;

    const auto matches = match_dataset(s.gt, got, 6.0);
    long tp = 0;
    for (const auto& m : matches) {
      tp += static_cast<long>(m.true_positives.size());
      for (const auto& t : m.true_positives) EXPECT_LT(t.distance, 6.0);
      const std::size_t cell_gt = s.gt.cell(m.view, m.frame).size();
      const std::size_t cell_pred = got.cell(m.view, m.frame).size();
      EXPECT_EQ(m.true_positives.size() + m.false_negatives.size(), cell_gt);
      EXPECT_EQ(m.true_positives.size() + m.false_positives.size(), cell_pred);
    }
    EXPECT_EQ(tp, oracle::evaluate(s.gt, got, 6.0, false).tp);
  }
}
