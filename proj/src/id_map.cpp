#include "mvhota/id_map.hpp"

#include <charconv>
#include <set>

namespace mvhota {

IdMap::IdMap(std::vector<std::vector<std::string>> globals_per_view)
    : local_to_global_(std::move(globals_per_view)), global_to_local_(local_to_global_.size()) {
  for (std::size_t v = 0; v < local_to_global_.size(); ++v) {
    for (std::size_t i = 0; i < local_to_global_[v].size(); ++i) {
      if (!global_to_local_[v].emplace(local_to_global_[v][i], static_cast<int>(i)).second)
        throw std::invalid_argument("IdMap: duplicate global id '" + local_to_global_[v][i] + "'");
    }
  }
}

std::optional<int> IdMap::local(int view, std::string_view global) const {
  const auto& m = global_to_local_.at(view);
  auto it = m.find(global);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

const std::string& IdMap::global(int view, int local) const { return local_to_global_.at(view).at(local); }

RemappedGroundTruth remap_gt_ids(const Dataset& gt) {
  std::vector<std::set<std::string>> seen(gt.n_views());
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const Point& p = gt.point(i);
    if (!p.id) throw DatasetError("/points/" + std::to_string(i) + "/id", "ground-truth point without id");
    seen[p.view].insert(*p.id);
  }

  std::vector<std::vector<std::string>> globals(gt.n_views());
  for (int v = 0; v < gt.n_views(); ++v) globals[v].assign(seen[v].begin(), seen[v].end());
  IdMap ids(std::move(globals));

  std::vector<Point> points(gt.points().begin(), gt.points().end());
  for (Point& p : points) p.id = std::to_string(*ids.local(p.view, *p.id));
  return {Dataset(gt.geometry(), std::move(points), gt.role()), std::move(ids)};
}

Dataset restore_gt_ids(const Dataset& remapped, const IdMap& ids) {
  std::vector<Point> points(remapped.points().begin(), remapped.points().end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Point& p = points[i];
    int local = -1;
    const std::string& token = p.id.value();
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), local);
    if (ec != std::errc() || end != token.data() + token.size())
      throw DatasetError("/points/" + std::to_string(i) + "/id", "not a local index: '" + token + "'");
    p.id = ids.global(p.view, local);
  }
  return Dataset(remapped.geometry(), std::move(points), remapped.role());
}

}  // namespace mvhota
