#include "dalescope/features.hpp"

#include <algorithm>

namespace dalescope {

namespace {

Grid fix(const Grid& g, const KernelSchema& k, const Grid* ref = nullptr) {
    return run_fixpoint(g, k, ref).grid;
}

Grid support_mask(const Grid& g) {
    Grid out(g.width(), g.height(), g.levels(), 0);
    for (std::size_t i = 0; i < g.cells().size(); ++i)
        if (g.cells()[i] != 0)
            out.cells()[i] = 1;
    return out;
}

bool intersects(const Grid& a, const Grid& b) {
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] != 0 && b.cells()[i] != 0)
            return true;
    return false;
}

bool support_subset(const Grid& inner, const Grid& outer) {
    for (std::size_t i = 0; i < inner.cells().size(); ++i)
        if (inner.cells()[i] != 0 && outer.cells()[i] == 0)
            return false;
    return true;
}

void subtract_support(Grid& g, const Grid& mask) {
    for (std::size_t i = 0; i < g.cells().size(); ++i)
        if (mask.cells()[i] != 0)
            g.cells()[i] = 0;
}

} // namespace

std::string to_string(Direction d) {
    switch (d) {
    case Direction::Down: return "down";
    case Direction::Up: return "up";
    case Direction::Left: return "left";
    default: return "right";
    }
}

Direction direction_from_string(std::string_view s) {
    if (s == "down") return Direction::Down;
    if (s == "up") return Direction::Up;
    if (s == "left") return Direction::Left;
    if (s == "right") return Direction::Right;
    throw UsageError("unknown direction '" + std::string(s) + "'");
}

const KernelSchema& dale_expand_kernel(Direction d) {
    switch (d) {
    case Direction::Down: return lookup_kernel("expand_1234_1236");
    case Direction::Up: return lookup_kernel("expand_4789_6789");
    case Direction::Right: return lookup_kernel("expand_1247_1478");
    default: return lookup_kernel("expand_2369_3689");
    }
}

const KernelSchema& dale_clean_kernel(Direction d) {
    switch (d) {
    case Direction::Down:
    case Direction::Up: return lookup_kernel("clean_46");
    default: return lookup_kernel("clean_28");
    }
}

Grid lakes(const Grid& g, int margin) {
    Grid base = pad(g, margin);
    Grid hull = fix(base, lookup_kernel("convex_hull_oct"));
    Grid cleaned = fix(hull, lookup_kernel("clean_all8"), &base);
    Grid diff = minus_sat(cleaned, base);
    return crop(diff, margin, margin, g.width(), g.height());
}

Grid dales(const Grid& g, Direction dir, bool cleaned, int margin) {
    Grid base = pad(g, margin);
    Grid filled = fix(base, dale_expand_kernel(dir));
    if (cleaned)
        filled = fix(filled, dale_clean_kernel(dir), &base);
    Grid diff = minus_sat(filled, base);
    return crop(diff, margin, margin, g.width(), g.height());
}

int DepthMap::max_depth() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

DepthResult concavity_depth(const Grid& g, int margin) {
    Grid base = pad(g, margin);
    Grid current = fix(base, lookup_kernel("convex_hull_oct"));
    const KernelSchema& mc4 = lookup_kernel("minconvex_hull4");
    const KernelSchema& mc8 = lookup_kernel("minconvex_123_369_789_147");

    DepthMap depth;
    depth.width = base.width();
    depth.height = base.height();
    depth.values.assign(base.cells().size(), 0);

    int rounds = 0;
    for (;;) {
        ++rounds;
        bool changed = false;
        for (const KernelSchema* k : {&mc4, &mc8}) {
            Grid next = fix(current, *k, &base);
            if (next != current) {
                changed = true;
                for (std::size_t i = 0; i < next.cells().size(); ++i)
                    if (next.cells()[i] != current.cells()[i])
                        depth.values[i] = rounds;
                current = std::move(next);
            }
        }
        if (!changed)
            break;
    }

    DepthMap cropped;
    cropped.width = g.width();
    cropped.height = g.height();
    cropped.values.reserve(g.cells().size());
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c)
            cropped.values.push_back(depth.at(r + margin, c + margin));
    return {std::move(cropped), rounds};
}

Grid ridges(const Grid& g, RidgeMethod method, int margin) {
    Grid base = pad(g, margin);
    Grid out(base.width(), base.height(), base.levels());
    if (method == RidgeMethod::A) {
        Grid dale = fix(base, dale_expand_kernel(Direction::Down));
        dale = fix(dale, dale_clean_kernel(Direction::Down), &base);
        Grid d = minus_sat(dale, base);
        Grid rays = fix(d, lookup_kernel("ray_268"), &base);
        Grid up = fix(rays, lookup_kernel("expand_4789_6789"));
        up = fix(up, lookup_kernel("clean_46"), &rays);
        out = minus_sat(up, rays);
    } else {
        Grid d = fix(base, lookup_kernel("expand_369"));
        Grid rays = fix(d, lookup_kernel("ray_468"), &base);
        Grid s = fix(rays, lookup_kernel("expand_147"));
        out = minus_sat(s, base);
    }
    return crop(out, margin, margin, g.width(), g.height());
}

std::vector<Relation> relation_matrix(
    const std::vector<std::pair<std::string, Grid>>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].second.width() != parts[0].second.width() ||
            parts[i].second.height() != parts[0].second.height())
            throw UsageError("relation_matrix parts must share dimensions");

    std::vector<Grid> shadows, hulls;
    shadows.reserve(parts.size());
    hulls.reserve(parts.size());
    for (const auto& [name, img] : parts) {
        shadows.push_back(fix(support_mask(img), lookup_kernel("ray_2")));
        hulls.push_back(fix(img, lookup_kernel("convex_hull_oct")));
    }

    std::vector<Relation> out;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t q = 0; q < parts.size(); ++q) {
            if (p == q)
                continue;
            if (intersects(shadows[p], parts[q].second))
                out.push_back({parts[p].first, "above", parts[q].first});
            if (support_subset(parts[q].second, hulls[p])) {
                out.push_back({parts[p].first, "contains", parts[q].first});
                out.push_back({parts[q].first, "within", parts[p].first});
            }
        }
    }
    return out;
}

FeatureDescriptor glyph_descriptor(const Grid& g, int min_dale_area, int margin) {
    FeatureDescriptor desc;
    desc.component_id = 1;
    for (Direction d : kAllDirections)
        desc.dale_counts[d] = 0;

    bool any_fg = std::any_of(g.cells().begin(), g.cells().end(),
                              [](Level v) { return v != 0; });
    if (!any_fg)
        return desc;

    Grid lake_img = lakes(g, margin);
    ComponentMap lake_comps = label_components(lake_img, Connectivity::Eight, 0);
    desc.lake_count = lake_comps.count;

    std::map<Direction, Grid> raw_fill;
    for (Direction d : kAllDirections)
        raw_fill.emplace(d, dales(g, d, /*cleaned=*/false, margin));

    std::vector<std::pair<std::string, Grid>> parts;
    for (int id = 1; id <= lake_comps.count; ++id)
        parts.emplace_back("lake-" + std::to_string(id),
                           extract_component(lake_img, lake_comps, id));

    for (Direction d : kAllDirections) {
        Grid img = dales(g, d, /*cleaned=*/true, margin);
        subtract_support(img, lake_img);
        for (Direction other : kAllDirections)
            if (other != d)
                subtract_support(img, raw_fill.at(other));
        ComponentMap comps = label_components(img, Connectivity::Eight, 0);
        int kept = 0;
        for (int id = 1; id <= comps.count; ++id) {
            long area = std::count(comps.labels.begin(), comps.labels.end(), id);
            if (area >= min_dale_area) {
                ++kept;
                parts.emplace_back("dale-" + to_string(d) + "-" + std::to_string(kept),
                                   extract_component(img, comps, id));
            }
        }
        desc.dale_counts[d] = kept;
    }

    desc.relations = relation_matrix(parts);
    return desc;
}

} // namespace dalescope
