#include "dalescope/oracle.hpp"

#include <deque>
#include <limits>
#include <map>
#include <mutex>

namespace dalescope {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

// BFS distance map from one source over the whole (bounded) grid.
std::vector<int> bfs_distances(int h, int w, int sr, int sc, Connectivity conn) {
    std::vector<int> dist(static_cast<std::size_t>(h) * w, kUnreached);
    std::deque<std::pair<int, int>> queue{{sr, sc}};
    dist[static_cast<std::size_t>(sr) * w + sc] = 0;
    const bool diag = conn == Connectivity::Eight;
    while (!queue.empty()) {
        auto [r, c] = queue.front();
        queue.pop_front();
        int d = dist[static_cast<std::size_t>(r) * w + c];
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                if (!diag && dr != 0 && dc != 0) continue;
                int rr = r + dr, cc = c + dc;
                if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                auto idx = static_cast<std::size_t>(rr) * w + cc;
                if (dist[idx] > d + 1) {
                    dist[idx] = d + 1;
                    queue.push_back({rr, cc});
                }
            }
        }
    }
    return dist;
}

// Exhaustive sweeps hit the same geometry tens of thousands of times.
const std::vector<std::vector<int>>& all_pairs_distances(int h, int w,
                                                         Connectivity conn) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, Connectivity>,
                    std::vector<std::vector<int>>> cache;
    std::scoped_lock lock(mutex);
    auto key = std::make_tuple(h, w, conn);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<std::vector<int>> dist(static_cast<std::size_t>(h) * w);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c)
                dist[static_cast<std::size_t>(r) * w + c] =
                    bfs_distances(h, w, r, c, conn);
        it = cache.emplace(key, std::move(dist)).first;
    }
    return it->second;
}

} // namespace

Grid df_closure(const Grid& binary, ClosureSpec spec) {
    if (spec.connectivity == Connectivity::X)
        throw UsageError("df_closure supports connectivity 4 or 8");
    for (Level v : binary.cells())
        if (v > 1)
            throw UsageError("df_closure expects a binary grid");

    const int h = binary.height(), w = binary.width();
    const auto n = static_cast<std::size_t>(h) * w;
    const auto& dist = all_pairs_distances(h, w, spec.connectivity);

    Grid current = binary;
    for (;;) {
        ComponentMap comps = label_components(current, Connectivity::Eight, 0);
        std::vector<std::vector<std::size_t>> members(
            static_cast<std::size_t>(comps.count) + 1);
        for (std::size_t i = 0; i < n; ++i)
            if (comps.labels[i] != 0)
                members[static_cast<std::size_t>(comps.labels[i])].push_back(i);

        Grid next = current;
        for (int id = 1; id <= comps.count; ++id) {
            const auto& cells = members[static_cast<std::size_t>(id)];
            for (std::size_t ui = 0; ui < cells.size(); ++ui) {
                for (std::size_t vi = ui + 1; vi < cells.size(); ++vi) {
                    std::size_t u = cells[ui], v = cells[vi];
                    int duv = dist[u][v];
                    for (std::size_t x = 0; x < n; ++x)
                        if (dist[u][x] + dist[v][x] == duv)
                            next.cells()[x] = 1;
                }
            }
        }
        if (next == current)
            return current;
        current = std::move(next);
    }
}

Grid gray_flat_oracle(const Grid& g, ClosureSpec spec) {
    Grid out(g.width(), g.height(), g.levels(), 0);
    for (Level t = 1; t < g.levels(); ++t) {
        Grid layer = df_closure(binarize(g, t), spec);
        for (std::size_t i = 0; i < out.cells().size(); ++i)
            if (layer.cells()[i])
                out.cells()[i] = t; // levels ascend, so this is the stack max
    }
    return out;
}

Grid waterfall_reference(const Grid& ref, const std::vector<Cell>& seeds) {
    const int h = ref.height(), w = ref.width();
    Grid out(w, h, ref.levels(), 0);
    std::vector<char> seen(static_cast<std::size_t>(h) * w, 0);
    std::deque<Cell> queue;
    for (const Cell& s : seeds) {
        auto idx = static_cast<std::size_t>(s.row) * w + s.col;
        if (!seen[idx]) {
            seen[idx] = 1;
            out.set(s.row, s.col, ref.at(s.row, s.col));
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Cell cur = queue.front();
        queue.pop_front();
        Level dv = ref.at(cur.row, cur.col);
        constexpr std::array<std::pair<int, int>, 4> plus = {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
        for (auto [dr, dc] : plus) {
            int rr = cur.row + dr, cc = cur.col + dc;
            if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
            auto idx = static_cast<std::size_t>(rr) * w + cc;
            if (seen[idx]) continue;
            if (ref.at(rr, cc) <= dv) {
                seen[idx] = 1;
                out.set(rr, cc, ref.at(rr, cc));
                queue.push_back({rr, cc});
            }
        }
    }
    return out;
}

} // namespace dalescope
