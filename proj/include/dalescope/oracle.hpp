#pragma once

#include <vector>

#include "dalescope/components.hpp"
#include "dalescope/engine.hpp"
#include "dalescope/grid.hpp"

namespace dalescope {

/// Which path metric the closure uses. Distances come from per-source
/// breadth-first search; clarity beats speed here on purpose.
struct ClosureSpec {
    Connectivity connectivity = Connectivity::Four; // Four or Eight
};

/// Brute-force distance-figure closure over a binary grid. Repeatedly, for
/// every pair of set cells lying in the same 8-connected component of the
/// current set, every cell on any shortest path between them (per the spec
/// metric) joins the set; components are relabeled between rounds, so growth
/// that merges components keeps feeding the closure. Pairing is restricted
/// per component because a distance figure is defined among the tiles of one
/// connected component; unrestricted pairing fills straight gaps between
/// separate components that no propagation rule touches.
Grid df_closure(const Grid& binary, ClosureSpec spec);

/// Threshold-decomposition reference for gray grids: the closure runs on
/// every level set and the stack is re-summed as a max. Agrees with flat
/// (guard-free) kernels by construction.
Grid gray_flat_oracle(const Grid& g, ClosureSpec spec);

/// Independent waterfall reference: breadth-first reachability from the
/// seeds along 4-paths with non-increasing reference values.
Grid waterfall_reference(const Grid& ref, const std::vector<Cell>& seeds);

} // namespace dalescope
