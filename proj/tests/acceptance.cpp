// Acceptance suite: each criterion runs standalone (--criterion N) and
// prints one [PASS]/[FAIL] line; the process exits nonzero on FAIL.
//
// Criterion 3 is asserted for every catalog kernel as specified. The
// strict-guard (REF_GT) contraction kernels are known to be order-sensitive
// on gray inputs — an undershoot freezes a cell at a schedule-dependent
// value — so that criterion reports the divergence honestly instead of
// weakening the check; the per-guard-class detail lines show exactly which
// classes hold.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dalescope/engine.hpp"
#include "dalescope/features.hpp"
#include "dalescope/oracle.hpp"
#include "dalescope/pgm.hpp"
#include "dalescope/pipelines.hpp"
#include "dalescope/selftest.hpp"

using namespace dalescope;
using Clock = std::chrono::steady_clock;

namespace {

Grid fixture(const std::string& name) {
    return read_pgm(std::string(FIXTURES_DIR) + "/" + name);
}

Grid random_grid(std::mt19937& rng, int w, int h, int levels) {
    Grid g(w, h, levels);
    for (auto& v : g.cells())
        v = static_cast<Level>(rng() % levels);
    return g;
}

bool subset_of(const Grid& a, const Grid& b) {
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] && !b.cells()[i])
            return false;
    return true;
}

bool pointwise_geq(const Grid& a, const Grid& b) {
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] < b.cells()[i])
            return false;
    return true;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// 1. Exhaustive DF4 theorem: hull4 fixpoint == distance-figure closure.
Outcome criterion1() {
    auto t0 = Clock::now();
    const auto& hull4 = lookup_kernel("convex_hull4");
    unsigned total = 0, equal = 0;
    for_each_4x4_pattern([&](unsigned, const Grid& g) {
        ++total;
        equal += run_fixpoint(g, hull4).grid == df_closure(g, {Connectivity::Four});
    });
    auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream d;
    d << equal << "/" << total << " patterns equal in " << secs << "s";
    return {equal == total && secs < 120.0, d.str()};
}

// 2. Exhaustive DF8 soundness; equality rate reported; octagonal rule
// subset-only with its equality rate as a report.
Outcome criterion2() {
    const auto& hull8 = lookup_kernel("convex_hull8on8");
    const auto& oct = lookup_kernel("convex_hull_oct");
    unsigned total = 0, sub8 = 0, eq8 = 0, suboct = 0, eqoct = 0;
    for_each_4x4_pattern([&](unsigned, const Grid& g) {
        ++total;
        Grid cl = df_closure(g, {Connectivity::Eight});
        Grid fp8 = run_fixpoint(g, hull8).grid;
        Grid fpo = run_fixpoint(g, oct).grid;
        sub8 += subset_of(fp8, cl);
        eq8 += fp8 == cl;
        suboct += subset_of(fpo, cl);
        eqoct += fpo == cl;
    });
    std::ostringstream d;
    d << "hull8on8 subset " << sub8 << "/" << total << ", equality " << eq8 << "/"
      << total << "; oct subset " << suboct << "/" << total << ", equality "
      << eqoct << "/" << total << " (report-only)";
    return {sub8 == total && suboct == total, d.str()};
}

// 3. Schedule confluence across every catalog kernel.
Outcome criterion3() {
    auto t0 = Clock::now();
    std::mt19937 rng(2024);
    std::map<Guard, std::pair<int, int>> per_guard; // guard -> {diverged, runs}
    std::string first_diverged;
    for (int trial = 0; trial < 100; ++trial) {
        Grid base = random_grid(rng, 16, 16, 8);
        for (const auto& schema : kernel_catalog()) {
            Grid work = base;
            Grid ref;
            const Grid* rp = nullptr;
            if (schema.needs_reference()) {
                // paper pairing: the working grid is an expand fixpoint of
                // the reference (constraint ops run on hulls of the ref)
                ref = base;
                const char* paired =
                    schema.mode == Mode::Contract ? "convex_hull_oct" : "expand_1234_1236";
                work = run_fixpoint(ref, lookup_kernel(paired)).grid;
                rp = &ref;
            }
            Grid a = run_fixpoint(work, schema, rp, Schedule::raster()).grid;
            bool same = a == run_fixpoint(work, schema, rp, Schedule::reverse()).grid &&
                        a == run_fixpoint(work, schema, rp, Schedule::worklist()).grid;
            for (std::uint32_t seed : {1u, 2u, 3u})
                same = same &&
                       a == run_fixpoint(work, schema, rp, Schedule::random_fair(seed)).grid;
            auto& [diverged, runs] = per_guard[schema.guard];
            ++runs;
            if (!same) {
                ++diverged;
                if (first_diverged.empty())
                    first_diverged = schema.name;
            }
        }
    }
    auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
    auto fmt = [&](Guard g, const char* name) {
        auto [diverged, runs] = per_guard[g];
        std::ostringstream s;
        s << name << " " << (runs - diverged) << "/" << runs;
        return s.str();
    };
    bool pass = true;
    for (auto& [guard, counts] : per_guard)
        pass = pass && counts.first == 0;
    std::ostringstream d;
    d << fmt(Guard::None, "unguarded") << ", " << fmt(Guard::RefGe, "allowance(>=)")
      << ", " << fmt(Guard::RefGt, "constraint(>)") << " identical; " << secs << "s";
    if (!first_diverged.empty())
        d << "; first divergence: " << first_diverged
          << " (strict-guard undershoot freeze is schedule-dependent)";
    return {pass && secs < 60.0, d.str()};
}

// 4. Threshold commutation for guard-NONE kernels.
Outcome criterion4() {
    std::mt19937 rng(4096);
    long checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Grid g = random_grid(rng, 16, 16, 8);
        for (const auto& schema : kernel_catalog()) {
            if (schema.guard != Guard::None)
                continue;
            Grid fp = run_fixpoint(g, schema).grid;
            for (Level t = 1; t < 8; ++t) {
                ++checked;
                if (binarize(fp, t) != run_fixpoint(binarize(g, t), schema).grid) {
                    std::ostringstream d;
                    d << schema.name << " fails at t=" << t << " on trial " << trial;
                    return {false, d.str()};
                }
            }
        }
    }
    std::ostringstream d;
    d << checked << " kernel/threshold combinations commute";
    return {true, d.str()};
}

// 5. Disconnected difference on the cross fixture.
Outcome criterion5() {
    Grid g = fixture("cross.pgm");
    Grid hull = run_fixpoint(g, lookup_kernel("convex_hull4")).grid;
    Grid diff = minus_sat(hull, g);
    int comps = label_components(diff, Connectivity::Eight, 0).count;
    std::ostringstream d;
    d << "hull4 difference has " << comps << " 8-components (expected 4)";
    return {comps == 4, d.str()};
}

// 6. The glyph feature table.
Outcome criterion6() {
    struct Want {
        const char* file;
        int lakes, up, down, left, right;
    };
    const Want table[] = {
        {"glyph_o.pgm", 1, 0, 0, 0, 0},
        {"glyph_c.pgm", 0, 0, 0, 0, 1},
        {"glyph_e.pgm", 0, 0, 0, 0, 2},
        {"glyph_h.pgm", 0, 1, 1, 0, 0},
        {"glyph_u.pgm", 0, 1, 0, 0, 0},
        {"glyph_a.pgm", 1, 0, 1, 0, 0},
    };
    std::ostringstream d;
    bool pass = true;
    for (const Want& want : table) {
        FeatureDescriptor desc = glyph_descriptor(fixture(want.file));
        bool ok = desc.lake_count == want.lakes &&
                  desc.dale_counts.at(Direction::Up) == want.up &&
                  desc.dale_counts.at(Direction::Down) == want.down &&
                  desc.dale_counts.at(Direction::Left) == want.left &&
                  desc.dale_counts.at(Direction::Right) == want.right;
        if (std::strcmp(want.file, "glyph_a.pgm") == 0) {
            bool rel = false;
            for (const auto& r : desc.relations)
                rel |= r.subject == "lake-1" && r.relation == "above" &&
                       r.object == "dale-down-1";
            ok = ok && rel;
        }
        pass = pass && ok;
        d << want.file[6] << (ok ? " ok " : " MISMATCH ");
    }
    return {pass, d.str()};
}

// 7. Waterfall against the breadth-first oracle.
Outcome criterion7() {
    std::mt19937 rng(7777);
    for (int trial = 0; trial < 100; ++trial) {
        Grid ref = random_grid(rng, 32, 32, 8);
        auto seeds = border_cells(ref);
        if (run_waterfall(ref, seeds).grid != waterfall_reference(ref, seeds)) {
            std::ostringstream d;
            d << "divergence on trial " << trial;
            return {false, d.str()};
        }
    }
    return {true, "100 random 32x32 references, border seeds, exact"};
}

// 8. Termination bound and idempotence over the criterion-3/4 regime.
Outcome criterion8() {
    std::mt19937 rng(8888);
    const long bound = 16L * 16 * 7;
    for (int trial = 0; trial < 100; ++trial) {
        Grid base = random_grid(rng, 16, 16, 8);
        for (const auto& schema : kernel_catalog()) {
            Grid work = base;
            Grid ref;
            const Grid* rp = nullptr;
            if (schema.needs_reference()) {
                ref = base;
                work = run_fixpoint(ref, lookup_kernel("convex_hull_oct")).grid;
                rp = &ref;
            }
            auto first = run_fixpoint(work, schema, rp);
            if (first.stats.cell_updates > bound)
                return {false, schema.name + " exceeded the monotone update bound"};
            auto second = run_fixpoint(first.grid, schema, rp);
            if (second.stats.cell_updates != 0)
                return {false, schema.name + " is not idempotent at its fixpoint"};
        }
    }
    return {true, "updates within w*h*(L-1); re-runs make 0 updates"};
}

// 9. Non-composability of the merged minconvex kernel.
Outcome criterion9() {
    Grid g = fixture("cross.pgm");
    Grid hull = run_fixpoint(g, lookup_kernel("convex_hull_oct")).grid;
    KernelSchema merged;
    merged.name = "minconvex_merged";
    merged.mode = Mode::Contract;
    merged.guard = Guard::RefGt;
    merged.windows = lookup_kernel("minconvex_hull4").windows;
    for (const auto& w : lookup_kernel("minconvex_123_369_789_147").windows)
        merged.windows.push_back(w);
    Grid combined = run_fixpoint(hull, merged, &g).grid;
    Grid seq = run_fixpoint(hull, lookup_kernel("minconvex_hull4"), &g).grid;
    seq = run_fixpoint(seq, lookup_kernel("minconvex_123_369_789_147"), &g).grid;
    std::ostringstream d;
    long cs = 0, ss = 0;
    for (Level v : combined.cells()) cs += v != 0;
    for (Level v : seq.cells()) ss += v != 0;
    d << "merged support " << cs << " vs sequential " << ss;
    return {combined != seq, d.str()};
}

// 10. All four pipelines end to end with stage-local invariants.
Outcome criterion10() {
    auto t0 = Clock::now();
    struct Run {
        const char* pipeline;
        const char* input;
    };
    const Run runs[] = {
        {"hieroglyph", "hieroglyph.pgm"},
        {"alphabet", "glyph_sheet.pgm"},
        {"face", "face.pgm"},
        {"waterfall-border", "gradient.pgm"},
    };
    std::ostringstream d;
    for (const Run& r : runs) {
        Grid input = fixture(r.input);
        auto stages = run_pipeline(r.pipeline, input);
        for (const auto& s : stages)
            if (!s.stats.converged)
                return {false, std::string(r.pipeline) + "/" + s.tag + " did not converge"};
        // hull stages dominate the pipeline input pointwise
        for (const auto& s : stages)
            if (s.tag.find("convex_hull") != std::string::npos &&
                s.tag.find("of") == std::string::npos)
                if (!pointwise_geq(s.image, input) &&
                    std::string(r.pipeline) != "face") // face hulls run on a later stage
                    return {false, std::string(r.pipeline) + "/" + s.tag + " not extensive"};
        d << r.pipeline << ":" << stages.size() << " stages ok; ";
    }
    auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
    d << secs << "s";
    return {secs < 60.0, d.str()};
}

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            which = std::atoi(argv[i + 1]);
    }
    using Fn = Outcome (*)();
    const std::pair<int, Fn> all[] = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
        {9, criterion9}, {10, criterion10},
    };
    bool all_pass = true;
    bool ran_any = false;
    for (const auto& [num, fn] : all) {
        if (which != 0 && num != which)
            continue;
        ran_any = true;
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << num << ": "
                  << out.detail << '\n';
        all_pass = all_pass && out.pass;
    }
    if (!ran_any) {
        std::cerr << "--criterion must be 1..10 (or omit for all)\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
