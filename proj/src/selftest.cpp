#include "dalescope/selftest.hpp"

#include <random>
#include <sstream>

#include "dalescope/engine.hpp"
#include "dalescope/kernels.hpp"
#include "dalescope/oracle.hpp"

namespace dalescope {

namespace {

Grid random_grid(std::mt19937& rng, int w, int h, int levels) {
    Grid g(w, h, levels);
    std::uniform_int_distribution<int> dist(0, levels - 1);
    for (auto& v : g.cells())
        v = static_cast<Level>(dist(rng));
    return g;
}

Neighborhood random_neighborhood(std::mt19937& rng, int levels) {
    Neighborhood n;
    std::uniform_int_distribution<int> dist(0, levels - 1);
    for (int i = 1; i <= 9; ++i)
        n[i] = static_cast<Level>(dist(rng));
    return n;
}

bool subset_of(const Grid& a, const Grid& b) {
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] && !b.cells()[i])
            return false;
    return true;
}

} // namespace

bool SelftestReport::all_pass() const {
    for (const auto& line : lines)
        if (!line.informational && !line.pass)
            return false;
    return true;
}

void for_each_4x4_pattern(const std::function<void(unsigned, const Grid&)>& visit,
                          unsigned step) {
    for (unsigned bits = 0; bits < (1u << 16); bits += step) {
        Grid g(8, 8, 2, 0);
        for (int i = 0; i < 16; ++i)
            if (bits >> i & 1u)
                g.set(2 + i / 4, 2 + i % 4, 1);
        visit(bits, g);
    }
}

SelftestReport run_selftest(bool quick) {
    SelftestReport report;
    auto add = [&](std::string name, bool pass, std::string detail,
                   bool informational = false) {
        report.lines.push_back({std::move(name), pass, informational, std::move(detail)});
    };
    const unsigned step = quick ? 251 : 1; // prime step still covers the space

    // Registry invariants.
    add("registry-valid", validate_catalog(kernel_catalog()).empty(),
        validate_catalog(kernel_catalog()));

    // Closed form vs the paper's guarded if/assign shape, every kernel.
    {
        std::mt19937 rng(7);
        bool ok = true;
        std::string bad;
        for (const auto& schema : kernel_catalog()) {
            for (int i = 0; i < 2000 && ok; ++i) {
                Neighborhood n = random_neighborhood(rng, 8);
                std::optional<Level> ref;
                if (schema.needs_reference())
                    ref = static_cast<Level>(rng() % 8);
                if (eval_kernel(schema, n, ref) != eval_kernel_literal(schema, n, ref)) {
                    ok = false;
                    bad = schema.name;
                }
            }
        }
        add("literal-equivalence", ok, ok ? "all kernels" : "diverged: " + bad);
    }

    // DF4 theorem: Rule 1 fixpoint equals the per-component closure.
    {
        unsigned total = 0, equal = 0;
        unsigned firstfail = 0;
        bool anyfail = false;
        const auto& hull4 = lookup_kernel("convex_hull4");
        for_each_4x4_pattern([&](unsigned bits, const Grid& g) {
            ++total;
            Grid fp = run_fixpoint(g, hull4).grid;
            Grid cl = df_closure(g, {Connectivity::Four});
            if (fp == cl) {
                ++equal;
            } else if (!anyfail) {
                anyfail = true;
                firstfail = bits;
            }
        }, step);
        std::ostringstream det;
        det << equal << "/" << total << " patterns equal";
        if (anyfail)
            det << ", first failure pattern " << firstfail;
        add("df4-exhaustive", equal == total, det.str());
    }

    // DF8 soundness and completeness for the 16-case rule; octagonal rule is
    // subset-only with the equality rate reported.
    {
        unsigned total = 0, sub8 = 0, eq8 = 0, suboct = 0, eqoct = 0, lit_same = 0;
        const auto& hull8 = lookup_kernel("convex_hull8on8");
        const auto& oct = lookup_kernel("convex_hull_oct");
        KernelSchema literal = hull8;
        literal.name = "convex_hull8on8_literal_d36";
        for (auto& w : literal.windows)
            if (w == Window{6, 7, 8})
                w = Window{5, 6, 7}; // published listing, includes the center
        for_each_4x4_pattern([&](unsigned, const Grid& g) {
            ++total;
            Grid cl = df_closure(g, {Connectivity::Eight});
            Grid fp8 = run_fixpoint(g, hull8).grid;
            Grid fpo = run_fixpoint(g, oct).grid;
            sub8 += subset_of(fp8, cl);
            eq8 += fp8 == cl;
            suboct += subset_of(fpo, cl);
            eqoct += fpo == cl;
            lit_same += run_fixpoint(g, literal).grid == fp8;
        }, step);
        std::ostringstream d1;
        d1 << "subset " << sub8 << "/" << total << ", equality " << eq8 << "/" << total;
        add("df8-soundness", sub8 == total, d1.str());
        add("df8-completeness", eq8 == total, d1.str());
        std::ostringstream d2;
        d2 << "subset " << suboct << "/" << total << ", equality " << eqoct << "/"
           << total << " (rule completeness is an open question in the source)";
        add("oct-soundness", suboct == total, d2.str());
        add("oct-equality-rate", true, d2.str(), /*informational=*/true);
        std::ostringstream d3;
        d3 << "literal d36 listing matches corrected registry on " << lit_same << "/"
           << total << " fixpoints (the swap removes the {6,7,8} case)";
        add("d36-literal-variant", true, d3.str(), /*informational=*/true);
    }

    // The published d36 window min(e5,e6,e7) can never raise the center:
    // appending it to the corrected registry must change nothing.
    {
        const auto& hull8 = lookup_kernel("convex_hull8on8");
        KernelSchema widened = hull8;
        widened.windows.push_back({5, 6, 7});
        // windows may not contain e5 by construction, so eval through the
        // raw formula instead of the validated registry
        std::mt19937 rng(11);
        bool ok = true;
        for (int i = 0; i < 20000 && ok; ++i) {
            Neighborhood n = random_neighborhood(rng, 8);
            ok = eval_kernel(hull8, n) == eval_kernel(widened, n);
        }
        add("d36-inert-window", ok, "max(e5, ..., min(e5,e6,e7)) never fires");
    }

    // Schedule confluence where it is a theorem: unguarded and non-strict
    // allowance kernels.
    {
        std::mt19937 rng(23);
        bool ok = true;
        std::string bad;
        int trials = quick ? 3 : 10;
        for (const auto& schema : kernel_catalog()) {
            if (schema.guard == Guard::RefGt)
                continue;
            for (int t = 0; t < trials && ok; ++t) {
                Grid g = random_grid(rng, 10, 10, 8);
                Grid ref = random_grid(rng, 10, 10, 8);
                const Grid* rp = schema.needs_reference() ? &ref : nullptr;
                Grid a = run_fixpoint(g, schema, rp, Schedule::raster()).grid;
                Grid b = run_fixpoint(g, schema, rp, Schedule::reverse()).grid;
                Grid c = run_fixpoint(g, schema, rp, Schedule::worklist()).grid;
                Grid d = run_fixpoint(g, schema, rp, Schedule::random_fair(t + 1)).grid;
                ok = a == b && a == c && a == d;
                if (!ok)
                    bad = schema.name;
            }
        }
        add("confluence-unguarded-and-allowance", ok,
            ok ? "raster/reverse/worklist/random identical" : "diverged: " + bad);
    }

    // Waterfall against the independent breadth-first reference.
    {
        std::mt19937 rng(31);
        bool ok = true;
        int trials = quick ? 5 : 25;
        for (int t = 0; t < trials && ok; ++t) {
            Grid ref = random_grid(rng, 16, 16, 8);
            auto seeds = border_cells(ref);
            ok = run_waterfall(ref, seeds).grid == waterfall_reference(ref, seeds);
        }
        add("waterfall-oracle", ok, "border seeds, random references");
    }

    // Threshold commutation: flat kernels commute with binarization.
    {
        std::mt19937 rng(41);
        bool ok = true;
        std::string bad;
        int trials = quick ? 2 : 8;
        for (const auto& schema : kernel_catalog()) {
            if (schema.guard != Guard::None)
                continue;
            for (int t = 0; t < trials && ok; ++t) {
                Grid g = random_grid(rng, 10, 10, 8);
                Grid fp = run_fixpoint(g, schema).grid;
                for (Level th = 1; th < 8 && ok; ++th) {
                    Grid lhs = binarize(fp, th);
                    Grid rhs = run_fixpoint(binarize(g, th), schema).grid;
                    ok = lhs == rhs;
                    if (!ok)
                        bad = schema.name;
                }
            }
        }
        add("threshold-commutation", ok, ok ? "all unguarded kernels" : "diverged: " + bad);
    }

    return report;
}

} // namespace dalescope
