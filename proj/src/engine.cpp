#include "dalescope/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace dalescope {

namespace {

struct Runner {
    const Grid* ref;
    const KernelSchema& schema;
    BorderPolicy policy;
    Grid work;
    RunStats stats;

    Runner(const Grid& g, const KernelSchema& s, const Grid* r, BorderPolicy p)
        : ref(r), schema(s), policy(p), work(g) {}

    // Applies the kernel at one cell in place; returns true on change.
    bool step(int row, int col) {
        Neighborhood n = neighborhood_at(work, row, col, policy);
        std::optional<Level> rc;
        if (ref)
            rc = ref->at(row, col);
        Level nv = eval_kernel(schema, n, rc);
        if (nv == n[5])
            return false;
        if (schema.mode == Mode::Contract && ref && nv < ref->at(row, col))
            ++stats.undershoots;
        work.set(row, col, nv);
        ++stats.cell_updates;
        return true;
    }
};

} // namespace

FixpointResult run_fixpoint(const Grid& g, const KernelSchema& schema,
                            const Grid* ref, Schedule schedule,
                            std::optional<long> max_passes, BorderPolicy policy) {
    if (schema.needs_reference()) {
        if (!ref)
            throw UsageError(schema.name + " requires a reference grid");
        if (ref->width() != g.width() || ref->height() != g.height() ||
            ref->levels() != g.levels())
            throw UsageError("reference grid shape differs from working grid");
    } else if (ref) {
        throw UsageError(schema.name + " takes no reference grid");
    }

    Runner run(g, schema, ref, policy);
    const int h = g.height(), w = g.width();

    auto sweep = [&](auto&& order) -> bool {
        bool changed = false;
        for (const auto& [r, c] : order)
            changed |= run.step(r, c);
        return changed;
    };

    if (schedule.kind == Schedule::Kind::Worklist) {
        // Wave-front iteration: seed with all cells; a change re-enqueues the
        // 8 neighbors into the next wave. passes counts waves.
        std::vector<Cell> wave(static_cast<std::size_t>(h) * w);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c)
                wave[static_cast<std::size_t>(r) * w + c] = {r, c};
        std::vector<char> queued(static_cast<std::size_t>(h) * w, 0);
        while (!wave.empty()) {
            ++run.stats.passes;
            if (max_passes && run.stats.passes > *max_passes) {
                run.stats.converged = false;
                break;
            }
            std::vector<Cell> next;
            std::fill(queued.begin(), queued.end(), 0);
            for (const Cell& cell : wave) {
                if (!run.step(cell.row, cell.col))
                    continue;
                for (int i = 1; i <= 9; ++i) {
                    if (i == 5) continue;
                    auto [dr, dc] = kNeighborOffset[static_cast<std::size_t>(i - 1)];
                    int rr = cell.row + dr, cc = cell.col + dc;
                    if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                    auto idx = static_cast<std::size_t>(rr) * w + cc;
                    if (!queued[idx]) {
                        queued[idx] = 1;
                        next.push_back({rr, cc});
                    }
                }
            }
            wave = std::move(next);
        }
        return {std::move(run.work), run.stats};
    }

    std::vector<Cell> order(static_cast<std::size_t>(h) * w);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            order[static_cast<std::size_t>(r) * w + c] = {r, c};
    if (schedule.kind == Schedule::Kind::ReverseSweep)
        std::reverse(order.begin(), order.end());
    std::mt19937 rng(schedule.seed);

    for (;;) {
        ++run.stats.passes;
        if (max_passes && run.stats.passes > *max_passes) {
            --run.stats.passes;
            run.stats.converged = false;
            break;
        }
        if (schedule.kind == Schedule::Kind::RandomFair)
            std::shuffle(order.begin(), order.end(), rng);
        if (!sweep(order))
            break;
    }
    return {std::move(run.work), run.stats};
}

std::vector<Cell> border_cells(const Grid& g) {
    std::vector<Cell> cells;
    for (int c = 0; c < g.width(); ++c) {
        cells.push_back({0, c});
        if (g.height() > 1)
            cells.push_back({g.height() - 1, c});
    }
    for (int r = 1; r + 1 < g.height(); ++r) {
        cells.push_back({r, 0});
        if (g.width() > 1)
            cells.push_back({r, g.width() - 1});
    }
    return cells;
}

FixpointResult run_waterfall(const Grid& ref, const std::vector<Cell>& seeds) {
    if (ref.width() < 1 || ref.height() < 1)
        throw UsageError("waterfall needs a nonempty grid");
    const int h = ref.height(), w = ref.width();
    Grid out(w, h, ref.levels(), 0);
    std::vector<char> filled(static_cast<std::size_t>(h) * w, 0);
    RunStats stats;

    std::deque<Cell> frontier;
    for (const Cell& s : seeds) {
        if (!ref.in_bounds(s.row, s.col))
            throw UsageError("waterfall seed outside grid");
        auto idx = static_cast<std::size_t>(s.row) * w + s.col;
        if (filled[idx])
            continue;
        filled[idx] = 1;
        Level v = ref.at(s.row, s.col);
        if (v != 0) {
            out.set(s.row, s.col, v);
            ++stats.cell_updates;
        }
        frontier.push_back(s);
    }

    // Breadth-first allowance fill. "t5 <= e" with e = max of the filled
    // 4-neighbors reduces to: fill c from a filled neighbor d when
    // ref(c) <= ref(d). Cells with ref 0 also satisfy the rule against an
    // empty neighborhood, but filling them with 0 cannot change the output
    // or enable any nonzero fill, so the frontier tracks seeds only.
    while (!frontier.empty()) {
        ++stats.passes;
        std::deque<Cell> next;
        for (const Cell& cur : frontier) {
            Level dv = ref.at(cur.row, cur.col);
            constexpr std::array<std::pair<int, int>, 4> plus = {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
            for (auto [dr, dc] : plus) {
                int rr = cur.row + dr, cc = cur.col + dc;
                if (rr < 0 || rr >= h || cc < 0 || cc >= w)
                    continue;
                auto idx = static_cast<std::size_t>(rr) * w + cc;
                if (filled[idx])
                    continue;
                Level tv = ref.at(rr, cc);
                if (tv <= dv) {
                    filled[idx] = 1;
                    if (tv != 0) {
                        out.set(rr, cc, tv);
                        ++stats.cell_updates;
                    }
                    next.push_back({rr, cc});
                }
            }
        }
        frontier = std::move(next);
    }
    return {std::move(out), stats};
}

Grid run_slope_ray(const Grid& g, Level peak) {
    if (peak >= g.levels())
        throw UsageError("slope ray peak outside [0, levels-1]");
    Grid work = g;
    const int h = g.height(), w = g.width();
    // Not a lattice-monotone rule, so termination is not guaranteed in
    // general; the cap covers the seeded-ray use the rule was written for.
    const long cap = static_cast<long>(std::max(h, w)) * g.levels() + 16;
    for (long pass = 0; pass < cap; ++pass) {
        bool changed = false;
        for (int r = 0; r < h; ++r) {
            for (int c = 0; c < w; ++c) {
                Level e4 = work.sample(r, c - 1);
                Level e8 = work.sample(r + 1, c);
                Level nv = work.at(r, c);
                if (e4 > 1)
                    nv = static_cast<Level>(e4 - 1);
                if (e8 == 1)
                    nv = peak;
                if (nv != work.at(r, c)) {
                    work.set(r, c, nv);
                    changed = true;
                }
            }
        }
        if (!changed)
            break;
    }
    return work;
}

} // namespace dalescope
