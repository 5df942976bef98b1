#pragma once

#include <filesystem>

#include <json.hpp>

#include "dalescope/components.hpp"
#include "dalescope/engine.hpp"
#include "dalescope/features.hpp"

namespace dalescope {

nlohmann::json to_json(const RunStats& stats);
nlohmann::json to_json(const FeatureDescriptor& desc);
nlohmann::json to_json(const ComponentMap& m);

/// Label raster as ASCII PGM with maxval = count (counts can exceed 255,
/// which a Grid cannot hold).
void write_label_raster(const std::filesystem::path& path, const ComponentMap& m);

} // namespace dalescope
