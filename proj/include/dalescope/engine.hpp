#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dalescope/grid.hpp"
#include "dalescope/kernels.hpp"

namespace dalescope {

/// Fair update orders. All of them re-examine every cell until the grid is
/// globally stable; updates are in place (no double buffer), matching the
/// clock-less hardware model.
struct Schedule {
    enum class Kind { RasterSweep, ReverseSweep, Worklist, RandomFair };
    Kind kind = Kind::RasterSweep;
    std::uint32_t seed = 0; // RandomFair only

    static Schedule raster() { return {Kind::RasterSweep, 0}; }
    static Schedule reverse() { return {Kind::ReverseSweep, 0}; }
    static Schedule worklist() { return {Kind::Worklist, 0}; }
    static Schedule random_fair(std::uint32_t seed) { return {Kind::RandomFair, seed}; }
};

/// Audit trail of one run. undershoots counts CONTRACT updates that set a
/// cell strictly below its reference value (the paper's code does not clamp).
struct RunStats {
    long passes = 0;
    long cell_updates = 0;
    long undershoots = 0;
    bool converged = true;
};

struct FixpointResult {
    Grid grid;
    RunStats stats;
};

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

/// Iterates one kernel to a global fixed point. ref must be present exactly
/// when the kernel is guarded and must match g's shape. If max_passes is hit
/// first, the partial grid is returned with stats.converged = false.
FixpointResult run_fixpoint(const Grid& g, const KernelSchema& schema,
                            const Grid* ref = nullptr,
                            Schedule schedule = Schedule::raster(),
                            std::optional<long> max_passes = std::nullopt,
                            BorderPolicy policy = {});

/// Allowance fill: starts from an empty grid, seeds take their reference
/// values, then any not-yet-filled cell whose reference value is <= the max
/// of its 4-neighbors' filled values is filled and disallowed. The filled
/// region is everything reachable from the seeds along 4-paths with
/// non-increasing reference values.
FixpointResult run_waterfall(const Grid& ref, const std::vector<Cell>& seeds);

std::vector<Cell> border_cells(const Grid& g);

/// The variable-value ray of slope 1/peak: if e4 > 1 the cell becomes
/// e4 - 1; if the cell below holds 1 the cell restarts at peak.
Grid run_slope_ray(const Grid& g, Level peak = 5);

} // namespace dalescope
