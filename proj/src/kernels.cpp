#include "dalescope/kernels.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dalescope {

namespace {

KernelSchema make(std::string name, Mode mode, Guard guard,
                  std::vector<Window> windows) {
    return KernelSchema{std::move(name), mode, guard, std::move(windows)};
}

std::vector<KernelSchema> build_catalog() {
    using W = std::vector<Window>;
    const W hull4{{2, 4}, {2, 6}, {6, 8}, {4, 8}};
    const W quad{{1, 2, 3}, {3, 6, 9}, {7, 8, 9}, {1, 4, 7}};
    // 16 cases of the 8-on-8 hull; {6,7,8} is the corrected d36 window
    // (the published listing reads min(e5,e6,e7), which can never fire).
    const W hull8{{1, 2, 3}, {3, 6, 9}, {7, 8, 9}, {1, 4, 7},
                  {2, 6, 8}, {2, 4, 6}, {4, 6, 8}, {2, 4, 8},
                  {2, 6, 9}, {3, 6, 8}, {2, 3, 4}, {1, 2, 6},
                  {6, 7, 8}, {4, 8, 9}, {2, 4, 7}, {1, 4, 8}};
    // 8 runs of 4 consecutive ring neighbors.
    const W oct{{4, 1, 2, 3}, {1, 2, 3, 6}, {2, 3, 6, 9}, {3, 6, 9, 8},
                {6, 9, 8, 7}, {9, 8, 7, 4}, {8, 7, 4, 1}, {7, 4, 1, 2}};
    // All eight neighbors as singleton windows: the contraction digs any
    // cell above its lowest neighbor, so everything reachable from the
    // background sea returns to the reference while enclosed plateaus
    // (lakes) survive. A single 8-neighbor window would only dig strict
    // local maxima and stalls on flat fills.
    const W all8{{1}, {2}, {3}, {4}, {6}, {7}, {8}, {9}};

    std::vector<KernelSchema> cat;
    cat.push_back(make("convex_hull4", Mode::Expand, Guard::None, hull4));
    cat.push_back(make("convex_hull8on8", Mode::Expand, Guard::None, hull8));
    cat.push_back(make("expand_123_369_789_147", Mode::Expand, Guard::None, quad));
    cat.push_back(make("convex_hull_oct", Mode::Expand, Guard::None, oct));

    cat.push_back(make("minconvex_hull4", Mode::Contract, Guard::RefGt, hull4));
    cat.push_back(make("minconvex_123_369_789_147", Mode::Contract, Guard::RefGt, quad));
    cat.push_back(make("minconvex_hull_oct", Mode::Contract, Guard::RefGt, oct));
    cat.push_back(make("minconvex_hull8on8", Mode::Contract, Guard::RefGt, hull8));

    cat.push_back(make("expand_1234_1236", Mode::Expand, Guard::None,
                       {{1, 2, 3, 4}, {1, 2, 3, 6}})); // dales opened down
    cat.push_back(make("expand_4789_6789", Mode::Expand, Guard::None,
                       {{4, 7, 8, 9}, {6, 7, 8, 9}})); // dales opened up
    cat.push_back(make("expand_1247_1478", Mode::Expand, Guard::None,
                       {{1, 2, 4, 7}, {1, 4, 7, 8}})); // dales opened right
    cat.push_back(make("expand_2369_3689", Mode::Expand, Guard::None,
                       {{2, 3, 6, 9}, {3, 6, 8, 9}})); // dales opened left

    cat.push_back(make("expand_369", Mode::Expand, Guard::None, {{3, 6, 9}}));
    cat.push_back(make("expand_689", Mode::Expand, Guard::None, {{6, 8, 9}}));
    cat.push_back(make("expand_147", Mode::Expand, Guard::None, {{1, 4, 7}}));
    cat.push_back(make("expand_247_148", Mode::Expand, Guard::None,
                       {{2, 4, 7}, {1, 4, 8}}));

    cat.push_back(make("clean_48_68", Mode::Contract, Guard::RefGt,
                       {{4, 8}, {6, 8}}));
    cat.push_back(make("clean_46", Mode::Contract, Guard::RefGt, {{4, 6}}));
    cat.push_back(make("clean_28", Mode::Contract, Guard::RefGt, {{2, 8}}));
    cat.push_back(make("clean_all8", Mode::Contract, Guard::RefGt, all8));

    cat.push_back(make("ray_2", Mode::Expand, Guard::None, {{2}}));
    cat.push_back(make("ray_12", Mode::Expand, Guard::None, {{1}, {2}}));
    cat.push_back(make("ray_half", Mode::Expand, Guard::None,
                       {{4}, {1}, {2}, {3}, {6}}));
    cat.push_back(make("ray2_2", Mode::Expand, Guard::RefGe, {{2}}));
    cat.push_back(make("ray_268", Mode::Expand, Guard::RefGe, {{2}, {6}, {8}}));
    cat.push_back(make("ray_468", Mode::Expand, Guard::RefGe, {{4}, {6}, {8}}));
    cat.push_back(make("rayanti_8", Mode::Contract, Guard::RefGt, {{8}}));
    return cat;
}

const std::map<std::string, std::string, std::less<>>& alias_map() {
    static const std::map<std::string, std::string, std::less<>> aliases = {
        {"convex_hull", "convex_hull_oct"},
        {"convex_hullB", "convex_hull_oct"},
        {"minconvex_hull", "minconvex_hull_oct"},
        {"clean_123456789", "clean_all8"},
        {"clean_12346789", "clean_all8"},
        {"waterfall_min", "waterfall"}, // resolved by the CLI, kept for messages
    };
    return aliases;
}

} // namespace

const std::vector<KernelSchema>& kernel_catalog() {
    static const std::vector<KernelSchema> cat = build_catalog();
    return cat;
}

const KernelSchema& lookup_kernel(std::string_view name) {
    std::string key{name};
    if (!key.empty() && key.front() == '_')
        key.erase(0, 1); // the paper spells many ops with a leading underscore
    if (auto it = alias_map().find(key); it != alias_map().end())
        key = it->second;
    for (const auto& schema : kernel_catalog())
        if (schema.name == key)
            return schema;
    std::ostringstream msg;
    msg << "unknown kernel '" << name << "'; known kernels:";
    for (const auto& schema : kernel_catalog())
        msg << ' ' << schema.name;
    throw UsageError(msg.str());
}

bool is_known_kernel(std::string_view name) {
    try {
        lookup_kernel(name);
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

Level eval_kernel(const KernelSchema& schema, const Neighborhood& n,
                  std::optional<Level> ref_center) {
    if (schema.needs_reference() && !ref_center)
        throw UsageError(schema.name + " requires a reference value");
    const Level e5 = n[5];
    if (schema.guard == Guard::RefGe && !(e5 >= *ref_center))
        return e5;
    if (schema.guard == Guard::RefGt && !(e5 > *ref_center))
        return e5;
    Level best = e5;
    if (schema.mode == Mode::Expand) {
        for (const auto& w : schema.windows) {
            Level m = n[w.front()];
            for (std::size_t i = 1; i < w.size(); ++i)
                m = std::min(m, n[w[i]]);
            best = std::max(best, m);
        }
    } else {
        for (const auto& w : schema.windows) {
            Level m = n[w.front()];
            for (std::size_t i = 1; i < w.size(); ++i)
                m = std::max(m, n[w[i]]);
            best = std::min(best, m);
        }
    }
    return best;
}

Level eval_kernel_literal(const KernelSchema& schema, const Neighborhood& n,
                          std::optional<Level> ref_center) {
    if (schema.needs_reference() && !ref_center)
        throw UsageError(schema.name + " requires a reference value");
    const Level e5 = n[5];
    if (schema.guard == Guard::RefGe && !(e5 >= *ref_center))
        return e5;
    if (schema.guard == Guard::RefGt && !(e5 > *ref_center))
        return e5;
    std::vector<Level> d;
    d.reserve(schema.windows.size());
    for (const auto& w : schema.windows) {
        Level m = n[w.front()];
        for (std::size_t i = 1; i < w.size(); ++i)
            m = schema.mode == Mode::Expand ? std::min(m, n[w[i]])
                                            : std::max(m, n[w[i]]);
        d.push_back(m);
    }
    if (schema.mode == Mode::Expand) {
        bool fire = std::any_of(d.begin(), d.end(), [&](Level v) { return e5 < v; });
        return fire ? *std::max_element(d.begin(), d.end()) : e5;
    }
    bool fire = std::any_of(d.begin(), d.end(), [&](Level v) { return e5 > v; });
    return fire ? *std::min_element(d.begin(), d.end()) : e5;
}

std::string validate_catalog(const std::vector<KernelSchema>& catalog) {
    for (const auto& schema : catalog) {
        if (schema.windows.empty())
            return schema.name + ": no windows";
        for (const auto& w : schema.windows) {
            if (w.empty())
                return schema.name + ": empty window";
            for (int i : w) {
                if (i == 5)
                    return schema.name + ": window includes the center e5";
                if (i < 1 || i > 9)
                    return schema.name + ": window index out of range";
            }
        }
    }
    return {};
}

} // namespace dalescope
