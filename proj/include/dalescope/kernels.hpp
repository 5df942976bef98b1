#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dalescope/grid.hpp"

namespace dalescope {

/// EXPAND: new center = max(e5, max over windows of min over window).
/// CONTRACT: new center = min(e5, min over windows of max over window).
enum class Mode { Expand, Contract };

/// None: always apply. RefGe: only where center >= reference (allowance
/// style, non-strict). RefGt: only where center > reference (constraint
/// style, strict). Guarded kernels need a reference grid at run time.
enum class Guard { None, RefGe, RefGt };

using Window = std::vector<int>; // neighbor indices from {1,2,3,4,6,7,8,9}

/// One local rule. Every rule in the catalog fits this schema; the two
/// stateful exceptions (waterfall, slope ray) live in the engine.
struct KernelSchema {
    std::string name;
    Mode mode = Mode::Expand;
    Guard guard = Guard::None;
    std::vector<Window> windows;

    bool needs_reference() const { return guard != Guard::None; }
};

/// The full registry, in catalog order.
const std::vector<KernelSchema>& kernel_catalog();

/// Catalog access by name. Accepts the paper's aliases and spellings with
/// a leading underscore. Throws UsageError listing known names on a miss.
const KernelSchema& lookup_kernel(std::string_view name);

bool is_known_kernel(std::string_view name);

/// One cell step. Guarded kernels require ref_center. The result never
/// leaves [0, levels-1] because min/max cannot invent new values.
Level eval_kernel(const KernelSchema& schema, const Neighborhood& n,
                  std::optional<Level> ref_center = std::nullopt);

/// Transcription of the paper's guarded if/assign code shape, kept separate
/// so tests can assert it agrees with the closed form cell by cell.
Level eval_kernel_literal(const KernelSchema& schema, const Neighborhood& n,
                          std::optional<Level> ref_center = std::nullopt);

/// Registry sanity: no window empty, no window mentions e5, indices valid.
/// Returns an error description or empty string.
std::string validate_catalog(const std::vector<KernelSchema>& catalog);

} // namespace dalescope
