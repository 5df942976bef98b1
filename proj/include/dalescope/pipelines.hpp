#pragma once

#include <string>
#include <vector>

#include "dalescope/engine.hpp"
#include "dalescope/grid.hpp"

namespace dalescope {

/// One emitted pipeline stage. Tags mirror the figure numbering the cascade
/// reproduces, e.g. "16_2_7_lakes".
struct StageResult {
    std::string tag;
    Grid image;
    RunStats stats; // zeroed for pure pointwise stages
};

std::vector<std::string> pipeline_names();

/// Runs a named multi-stage cascade: "alphabet", "hieroglyph", "face" or
/// "waterfall-border". The input is padded by `margin` background cells for
/// the duration of the run and every stage is cropped back.
std::vector<StageResult> run_pipeline(const std::string& name, const Grid& input,
                                      int margin = 2);

} // namespace dalescope
