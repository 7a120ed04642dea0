#include "mvhota/dataset_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace mvhota {

using nlohmann::json;

namespace {

std::string at(std::string_view source, const std::string& pointer) {
  return std::string(source) + ":" + pointer;
}

const json& require(const json& obj, const char* key, std::string_view source, const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DatasetError(at(source, pointer + "/" + key), std::string("missing required field '") + key + "'");
  return *it;
}

int require_int(const json& obj, const char* key, std::string_view source, const std::string& pointer) {
  const json& v = require(obj, key, source, pointer);
  if (!v.is_number_integer())
    throw DatasetError(at(source, pointer + "/" + key), std::string("field '") + key + "' must be an integer");
  const auto value = v.get<long long>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
    throw DatasetError(at(source, pointer + "/" + key), std::string("field '") + key + "' out of range");
  return static_cast<int>(value);
}

double require_number(const json& obj, const char* key, std::string_view source, const std::string& pointer) {
  const json& v = require(obj, key, source, pointer);
  if (!v.is_number())
    throw DatasetError(at(source, pointer + "/" + key), std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::optional<std::string> optional_string(const json& obj, const char* key, std::string_view source,
                                           const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    throw DatasetError(at(source, pointer + "/" + key), std::string("field '") + key + "' must be a string or null");
  return it->get<std::string>();
}

}  // namespace

Dataset dataset_from_json(const json& doc, Role role, std::string_view source) {
  if (!doc.is_object()) throw DatasetError(at(source, ""), "document must be a JSON object");

  Geometry geometry;
  geometry.n_views = require_int(doc, "n_views", source, "");
  geometry.n_frames = require_int(doc, "n_frames", source, "");
  geometry.image_width = require_int(doc, "image_width", source, "");
  geometry.image_height = require_int(doc, "image_height", source, "");

  const json& raw = require(doc, "points", source, "");
  if (!raw.is_array()) throw DatasetError(at(source, "/points"), "'points' must be an array");

  std::vector<Point> points;
  points.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string pointer = "/points/" + std::to_string(i);
    const json& item = raw[i];
    if (!item.is_object()) throw DatasetError(at(source, pointer), "point must be an object");
    Point p;
    p.view = require_int(item, "view", source, pointer);
    p.frame = require_int(item, "frame", source, pointer);
    p.x = require_number(item, "x", source, pointer);
    p.y = require_number(item, "y", source, pointer);
    p.id = optional_string(item, "id", source, pointer);
    p.class_label = optional_string(item, "class", source, pointer);
    points.push_back(std::move(p));
  }

  try {
    return Dataset(geometry, std::move(points), role);
  } catch (const DatasetError& e) {
    throw DatasetError(at(source, e.location()), e.message());
  }
}

Dataset parse_dataset(std::istream& in, Role role, std::string_view source) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DatasetError(std::string(source) + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  return dataset_from_json(doc, role, source);
}

Dataset parse_dataset(std::string_view text, Role role, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DatasetError(std::string(source) + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  return dataset_from_json(doc, role, source);
}

Dataset load_dataset(const std::filesystem::path& path, Role role) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return parse_dataset(in, role, path.string());
}

json dataset_to_json(const Dataset& dataset) {
  const Geometry& g = dataset.geometry();
  json points = json::array();
  for (const Point& p : dataset.points()) {
    points.push_back({
        {"view", p.view},
        {"frame", p.frame},
        {"x", p.x},
        {"y", p.y},
        {"id", p.id ? json(*p.id) : json(nullptr)},
        {"class", p.class_label ? json(*p.class_label) : json(nullptr)},
    });
  }
  return {
      {"n_views", g.n_views},
      {"n_frames", g.n_frames},
      {"image_width", g.image_width},
      {"image_height", g.image_height},
      {"points", std::move(points)},
  };
}

std::string serialize_dataset(const Dataset& dataset) { return dataset_to_json(dataset).dump(1) + "\n"; }

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << serialize_dataset(dataset);
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

}  // namespace mvhota
