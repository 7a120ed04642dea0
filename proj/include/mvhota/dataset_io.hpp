#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mvhota/dataset.hpp"

namespace mvhota {

/// Reads one dataset document:
///
///   { "n_views": int, "n_frames": int, "image_width": int, "image_height": int,
///     "points": [ { "view": int, "frame": int, "x": num, "y": num,
///                   "id": string|null, "class": string|null } ] }
///
/// Errors are DatasetError with `source` plus a byte offset (syntax) or a JSON
/// pointer (structure and invariants).
Dataset parse_dataset(std::istream& in, Role role, std::string_view source = "<stream>");
Dataset parse_dataset(std::string_view text, Role role, std::string_view source = "<string>");
Dataset dataset_from_json(const nlohmann::json& doc, Role role, std::string_view source = "<json>");

/// Throws std::ios_base::failure when the file cannot be opened.
Dataset load_dataset(const std::filesystem::path& path, Role role);

nlohmann::json dataset_to_json(const Dataset& dataset);
std::string serialize_dataset(const Dataset& dataset);
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace mvhota
