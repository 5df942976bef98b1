#include "dalescope/components.hpp"

#include <array>
#include <deque>
#include <span>

namespace dalescope {

namespace {

std::span<const std::pair<int, int>> steps_for(Connectivity c) {
    static constexpr std::array<std::pair<int, int>, 4> four = {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
    static constexpr std::array<std::pair<int, int>, 4> diag = {{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
    static constexpr std::array<std::pair<int, int>, 8> eight = {{{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};
    switch (c) {
    case Connectivity::Four: return four;
    case Connectivity::X: return diag;
    default: return eight;
    }
}

} // namespace

std::string to_string(Connectivity c) {
    switch (c) {
    case Connectivity::Four: return "4";
    case Connectivity::X: return "x";
    default: return "8";
    }
}

ComponentMap label_components(const Grid& g, Connectivity connectivity,
                              Level background) {
    ComponentMap m;
    m.width = g.width();
    m.height = g.height();
    m.connectivity = connectivity;
    m.background = background;
    m.labels.assign(static_cast<std::size_t>(g.width()) * g.height(), 0);
    auto steps = steps_for(connectivity);

    for (int r = 0; r < g.height(); ++r) {
        for (int c = 0; c < g.width(); ++c) {
            auto idx = static_cast<std::size_t>(r) * g.width() + c;
            if (g.at(r, c) == background || m.labels[idx] != 0)
                continue;
            int id = ++m.count;
            std::deque<std::pair<int, int>> queue{{r, c}};
            m.labels[idx] = id;
            while (!queue.empty()) {
                auto [cr, cc] = queue.front();
                queue.pop_front();
                for (auto [dr, dc] : steps) {
                    int rr = cr + dr, cl = cc + dc;
                    if (!g.in_bounds(rr, cl) || g.at(rr, cl) == background)
                        continue;
                    auto nidx = static_cast<std::size_t>(rr) * g.width() + cl;
                    if (m.labels[nidx] == 0) {
                        m.labels[nidx] = id;
                        queue.push_back({rr, cl});
                    }
                }
            }
        }
    }
    return m;
}

Grid extract_component(const Grid& g, const ComponentMap& m, int id) {
    if (g.width() != m.width || g.height() != m.height)
        throw UsageError("component map does not match grid");
    if (id < 1 || id > m.count)
        throw UsageError("component id out of range");
    Grid out(g.width(), g.height(), g.levels(), m.background);
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c)
            if (m.label(r, c) == id)
                out.set(r, c, g.at(r, c));
    return out;
}

} // namespace dalescope
