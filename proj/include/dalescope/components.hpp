#pragma once

#include <string>
#include <vector>

#include "dalescope/grid.hpp"

namespace dalescope {

/// Four: shared edge only. X: shared vertex only (diagonals). Eight: both.
enum class Connectivity { Four, X, Eight };

std::string to_string(Connectivity c);

/// Per-cell component ids, 0 = background, 1..count in raster
/// first-encounter order.
struct ComponentMap {
    int width = 0;
    int height = 0;
    int count = 0;
    Connectivity connectivity = Connectivity::Eight;
    Level background = 0;
    std::vector<int> labels;

    int label(int row, int col) const {
        return labels[static_cast<std::size_t>(row) * width + col];
    }
};

/// Foreground is every cell != background, whatever its level.
ComponentMap label_components(const Grid& g, Connectivity connectivity,
                              Level background = 0);

/// Grid equal to g on cells labeled id, background elsewhere.
Grid extract_component(const Grid& g, const ComponentMap& m, int id);

} // namespace dalescope
