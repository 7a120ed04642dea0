#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvhota/dataset.hpp"

namespace mvhota {

/// Per-view bijection between global ground-truth ids and contiguous 0-based
/// local indices. Local indices follow the lexicographic order of the global ids
/// present in that view.
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(std::vector<std::vector<std::string>> globals_per_view);

  int n_views() const noexcept { return static_cast<int>(local_to_global_.size()); }
  std::size_t size(int view) const { return local_to_global_.at(view).size(); }

  std::optional<int> local(int view, std::string_view global) const;
  const std::string& global(int view, int local) const;
  std::span<const std::string> globals(int view) const { return local_to_global_.at(view); }

 private:
  std::vector<std::vector<std::string>> local_to_global_;
  std::vector<std::map<std::string, int, std::less<>>> global_to_local_;
};

struct RemappedGroundTruth {
  Dataset dataset;  // ids replaced by decimal local indices ("0", "1", ...)
  IdMap ids;
};

/// Replaces every GT id with its per-view local index. Throws DatasetError for
/// a point without id (only possible for a Prediction-role input).
RemappedGroundTruth remap_gt_ids(const Dataset& gt);

/// Inverse of remap_gt_ids.
Dataset restore_gt_ids(const Dataset& remapped, const IdMap& ids);

}  // namespace mvhota
