#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "mvhota/evaluate.hpp"

namespace mvhota {

/// Machine-readable report. Undefined scores serialize as null.
nlohmann::json report_to_json(const MetricReport& report);

/// Aligned table, columns MOTA IDF1 F1 DetAcc AssAcc HOTA CorresAcc mvHOTA,
/// 4 decimals; a row per class in per-class mode.
std::string render_table(const MetricReport& report, const std::string& row_label = "result");

/// Header plus one row per class (or a single row), full precision.
std::string render_csv(const MetricReport& report, const std::string& row_label = "result");

nlohmann::json sweep_to_json(std::span<const SweepPoint> sweep);
std::string render_sweep_table(std::span<const SweepPoint> sweep);
std::string render_sweep_csv(std::span<const SweepPoint> sweep);

/// Frame matches with ids and coordinates, for debugging.
nlohmann::json matches_to_json(const Dataset& gt, const Dataset& pred, std::span<const FrameMatch> matches);

nlohmann::json occlusion_to_json(const OcclusionIndex& oi);

}  // namespace mvhota
