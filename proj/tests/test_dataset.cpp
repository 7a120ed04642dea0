#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mvhota/dataset_io.hpp"
#include "mvhota/id_map.hpp"
#include "mvhota/synth.hpp"
#include "mvhota/validation.hpp"

using namespace mvhota;

namespace {

Geometry stereo() { return {2, 3, 100, 80}; }

Point pt(int v, int f, double x, double y, std::optional<std::string> id = std::nullopt) {
  return {v, f, x, y, std::move(id), std::nullopt};
}

std::string location_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DatasetError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST(Dataset, CellsKeepInputOrder) {
  Dataset d(stereo(), {pt(1, 2, 5, 5, "b"), pt(0, 0, 1, 1, "a"), pt(1, 2, 6, 6, "a")}, Role::GroundTruth);
  ASSERT_EQ(d.cell(1, 2).size(), 2u);
  EXPECT_EQ(d.cell(1, 2)[0], 0u);
  EXPECT_EQ(d.cell(1, 2)[1], 2u);
  EXPECT_EQ(d.cell(0, 1).size(), 0u);
  EXPECT_FALSE(d.has_absent_ids());
}

TEST(Dataset, Validation) {
  EXPECT_THROW(Dataset({0, 1, 10, 10}, {}, Role::GroundTruth), DatasetError);
  EXPECT_THROW(Dataset({1, 1, 10, 0}, {}, Role::GroundTruth), DatasetError);
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(2, 0, 1, 1, "a")}, Role::GroundTruth); }), "/points/0/view");
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(0, 3, 1, 1, "a")}, Role::GroundTruth); }), "/points/0/frame");
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(0, 0, 1, 1, "a"), pt(0, 0, 101, 1, "b")}, Role::GroundTruth); }),
            "/points/1/x");
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(0, 0, 1, -0.5, "a")}, Role::GroundTruth); }), "/points/0/y");
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(0, 0, 1, 1)}, Role::GroundTruth); }), "/points/0/id");
  EXPECT_EQ(location_of([] { Dataset(stereo(), {pt(0, 0, 1, 1, "a"), pt(0, 0, 2, 2, "a")}, Role::Prediction); }),
            "/points/1/id");
  // Image borders are inside; id-less predictions are allowed.
  EXPECT_NO_THROW(Dataset(stereo(), {pt(0, 0, 0, 0), pt(0, 0, 100, 80), pt(0, 0, 3, 3)}, Role::Prediction));
  // The same id in different cells is fine.
  EXPECT_NO_THROW(Dataset(stereo(), {pt(0, 0, 1, 1, "a"), pt(1, 0, 1, 1, "a")}, Role::GroundTruth));
}

TEST(DatasetIo, RoundTrip) {
  const auto [gt, pred] = twin_track_fixture(TwinTrackVariant::A);
  EXPECT_EQ(parse_dataset(serialize_dataset(gt), Role::GroundTruth), gt);
  EXPECT_EQ(parse_dataset(serialize_dataset(pred), Role::Prediction), pred);

  std::vector<Point> points(pred.points().begin(), pred.points().end());
  points[0].id.reset();
  points[1].class_label = "tool";
  const Dataset mixed = with_points(pred, points);
  const Dataset back = parse_dataset(serialize_dataset(mixed), Role::Prediction);
  EXPECT_EQ(back, mixed);
  EXPECT_TRUE(back.has_absent_ids());
}

TEST(DatasetIo, NullAndMissingOptionalFields) {
  const char* doc = R"({"n_views":1,"n_frames":1,"image_width":10,"image_height":10,
    "points":[{"view":0,"frame":0,"x":1,"y":2,"id":null,"class":null},{"view":0,"frame":0,"x":3.5,"y":4}]})";
  const Dataset d = parse_dataset(std::string_view(doc), Role::Prediction);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_FALSE(d.point(0).id);
  EXPECT_FALSE(d.point(1).class_label);
  EXPECT_DOUBLE_EQ(d.point(1).x, 3.5);
}

TEST(DatasetIo, ErrorsCarryLocation) {
  auto loc = [](std::string_view text) {
    return location_of([&] { parse_dataset(text, Role::GroundTruth, "f.json"); });
  };
  EXPECT_EQ(loc(R"({"n_views":1,)").rfind("f.json:byte ", 0), 0u);
  EXPECT_EQ(loc(R"({"n_frames":1,"image_width":10,"image_height":10,"points":[]})"), "f.json:/n_views");
  EXPECT_EQ(loc(R"({"n_views":1.5,"n_frames":1,"image_width":10,"image_height":10,"points":[]})"), "f.json:/n_views");
  EXPECT_EQ(loc(R"({"n_views":1,"n_frames":1,"image_width":10,"image_height":10,"points":[{"view":0,"frame":0,"x":"1","y":1,"id":"a"}]})"),
            "f.json:/points/0/x");
  EXPECT_EQ(loc(R"({"n_views":1,"n_frames":1,"image_width":10,"image_height":10,"points":[{"view":0,"frame":0,"x":1,"y":1,"id":7}]})"),
            "f.json:/points/0/id");
  EXPECT_EQ(loc(R"({"n_views":1,"n_frames":1,"image_width":10,"image_height":10,"points":[{"view":0,"frame":0,"x":1,"y":1}]})"),
            "f.json:/points/0/id");
  EXPECT_EQ(loc(R"([])"), "f.json:");
}

TEST(DatasetIo, FileRoundTripAndMissingFile) {
  const auto dir = std::filesystem::temp_directory_path() / "mvhota_io_test";
  std::filesystem::create_directories(dir);
  const Dataset gt = occlusion_fixture();
  save_dataset(gt, dir / "gt.json");
  EXPECT_EQ(load_dataset(dir / "gt.json", Role::GroundTruth), gt);
  EXPECT_THROW(load_dataset(dir / "absent.json", Role::GroundTruth), std::ios_base::failure);
  std::filesystem::remove_all(dir);
}

TEST(IdMap, LexicographicLocalIndices) {
  Dataset gt(stereo(), {pt(0, 0, 1, 1, "zeta"), pt(0, 1, 1, 1, "alpha"), pt(1, 0, 1, 1, "zeta")}, Role::GroundTruth);
  const RemappedGroundTruth r = remap_gt_ids(gt);
  EXPECT_EQ(r.ids.size(0), 2u);
  EXPECT_EQ(r.ids.size(1), 1u);
  EXPECT_EQ(*r.ids.local(0, "alpha"), 0);
  EXPECT_EQ(*r.ids.local(0, "zeta"), 1);
  EXPECT_EQ(*r.ids.local(1, "zeta"), 0);
  EXPECT_FALSE(r.ids.local(1, "alpha"));
  EXPECT_EQ(r.ids.global(0, 1), "zeta");
  EXPECT_EQ(*r.dataset.point(0).id, "1");
  EXPECT_EQ(*r.dataset.point(2).id, "0");
  EXPECT_EQ(restore_gt_ids(r.dataset, r.ids), gt);
}

TEST(IdMap, RoundTripOnSynth) {
  SynthConfig c;
  c.n_views = 3;
  c.n_points = 12;
  const Dataset gt = generate(c).gt;
  const auto r = remap_gt_ids(gt);
  EXPECT_EQ(restore_gt_ids(r.dataset, r.ids), gt);
}

TEST(Validation, ReportsGeometryAndCoverage) {
  Dataset gt(stereo(), {pt(0, 0, 1, 1, "a"), pt(1, 1, 1, 1, "a")}, Role::GroundTruth);
  Dataset pred(stereo(), {pt(0, 0, 1, 1, "p"), pt(0, 2, 1, 1, "p")}, Role::Prediction);
  const ValidationReport r = validate_pair(gt, pred);
  EXPECT_TRUE(r.geometry_ok());
  bool view1_missing = false, frame2_missing_from_gt = false;
  for (const auto& i : r.issues) {
    if (i.kind == ValidationIssue::Kind::ViewMissing && i.index == 1 && i.missing_from == Role::Prediction)
      view1_missing = true;
    if (i.kind == ValidationIssue::Kind::FrameMissing && i.index == 2 && i.missing_from == Role::GroundTruth)
      frame2_missing_from_gt = true;
  }
  EXPECT_TRUE(view1_missing);
  EXPECT_TRUE(frame2_missing_from_gt);

  Dataset wide({2, 3, 200, 80}, {pt(0, 0, 150, 1, "p"), pt(0, 0, 10, 1, "q")}, Role::Prediction);
  const ValidationReport bad = validate_pair(gt, wide);
  EXPECT_FALSE(bad.geometry_ok());
  ASSERT_FALSE(bad.issues.empty());
  EXPECT_EQ(bad.issues[0].field, "image_width");

  const Dataset conformed = conform_to(gt.geometry(), wide);
  EXPECT_EQ(conformed.geometry(), gt.geometry());
  ASSERT_EQ(conformed.size(), 1u);
  EXPECT_EQ(*conformed.point(0).id, "q");
}
