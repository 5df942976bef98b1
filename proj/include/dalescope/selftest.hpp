#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dalescope/grid.hpp"

namespace dalescope {

struct SelftestLine {
    std::string name;
    bool pass = false;
    bool informational = false; // reported, not gating
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestLine> lines;
    bool all_pass() const;
};

/// Exhaustive 4x4 oracle sweeps plus the property suites. quick trims the
/// exhaustive sweeps to a deterministic sample for fast smoke runs.
SelftestReport run_selftest(bool quick = false);

/// Enumerates all 4x4 foreground patterns embedded in an 8x8 zero margin.
/// The visitor gets the pattern index and the embedded binary grid.
void for_each_4x4_pattern(const std::function<void(unsigned, const Grid&)>& visit,
                          unsigned step = 1);

} // namespace dalescope
