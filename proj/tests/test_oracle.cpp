#include <doctest.h>

#include <random>

#include "dalescope/engine.hpp"
#include "dalescope/oracle.hpp"
#include "dalescope/selftest.hpp"
#include "test_support.hpp"

using namespace dalescope;
using testsupport::art;
using testsupport::subset_of;

TEST_CASE("df_closure on the worked pairs") {
    Grid xpair = art("#.\n.#", 1, 2, 2);
    Grid square = art("##\n##", 1, 2, 2);
    CHECK(df_closure(xpair, {Connectivity::Four}) == square);
    CHECK(df_closure(xpair, {Connectivity::Eight}) == xpair);

    Grid single = art("#", 1, 2, 2);
    CHECK(df_closure(single, {Connectivity::Four}) == single);

    CHECK_THROWS_AS(df_closure(Grid(3, 3, 8, 2), ClosureSpec{Connectivity::Four}),
                    UsageError);
    CHECK_THROWS_AS(df_closure(xpair, ClosureSpec{Connectivity::X}), UsageError);
}

TEST_CASE("df_closure is extensive, monotone and idempotent") {
    std::mt19937 rng(101);
    for (int t = 0; t < 40; ++t) {
        Grid a(8, 8, 2);
        Grid b(8, 8, 2);
        for (int i = 0; i < 8; ++i) {
            int r = 2 + static_cast<int>(rng() % 4), c = 2 + static_cast<int>(rng() % 4);
            a.set(r, c, 1);
        }
        b = a;
        for (int i = 0; i < 3; ++i)
            b.set(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 4), 1);
        for (Connectivity conn : {Connectivity::Four, Connectivity::Eight}) {
            Grid ca = df_closure(a, {conn});
            CHECK(subset_of(a, ca));                        // extensive
            CHECK(subset_of(ca, df_closure(b, {conn})));    // monotone
            CHECK(df_closure(ca, {conn}) == ca);            // idempotent
        }
    }
}

TEST_CASE("gray_flat_oracle matches df_closure on binary and constants") {
    Grid xpair = art("#.\n.#", 1, 2, 2);
    CHECK(gray_flat_oracle(xpair, {Connectivity::Four}) ==
          df_closure(xpair, {Connectivity::Four}));

    Grid constant(5, 4, 8, 5);
    CHECK(gray_flat_oracle(constant, {Connectivity::Four}) == constant);

    Grid pair7(6, 6, 8);
    pair7.set(2, 2, 7);
    pair7.set(3, 3, 7);
    Grid out = gray_flat_oracle(pair7, {Connectivity::Four});
    CHECK(out.at(2, 3) == 7);
    CHECK(out.at(3, 2) == 7);
    CHECK(testsupport::support_size(out) == 4);
}

TEST_CASE("sampled 4x4 sweep: fixpoints against the closure") {
    const auto& hull4 = lookup_kernel("convex_hull4");
    const auto& hull8 = lookup_kernel("convex_hull8on8");
    const auto& oct = lookup_kernel("convex_hull_oct");
    unsigned total = 0;
    // step 11 samples ~6k of the 65,536 patterns; the acceptance suite and
    // the CLI selftest run the full space
    for_each_4x4_pattern(
        [&](unsigned, const Grid& g) {
            ++total;
            Grid cl4 = df_closure(g, {Connectivity::Four});
            Grid cl8 = df_closure(g, {Connectivity::Eight});
            REQUIRE(run_fixpoint(g, hull4).grid == cl4);
            REQUIRE(run_fixpoint(g, hull8).grid == cl8);
            REQUIRE(subset_of(run_fixpoint(g, oct).grid, cl8));
        },
        11);
    CHECK(total > 5000);
}

TEST_CASE("pinned d36 divergence: the literal listing misses a case") {
    // Foreground shaped so only the {6,7,8} window can fill the gap cell.
    Grid g(8, 8, 2);
    g.set(2, 4, 1); // e6 of (2,3)
    g.set(3, 2, 1); // e7 of (2,3)
    g.set(3, 3, 1); // e8 of (2,3)
    const auto& hull8 = lookup_kernel("convex_hull8on8");
    KernelSchema literal = hull8;
    for (auto& w : literal.windows)
        if (w == Window{6, 7, 8})
            w = Window{5, 6, 7};
    Grid fixed = run_fixpoint(g, hull8).grid;
    Grid lit = run_fixpoint(g, literal).grid;
    CHECK(fixed.at(2, 3) == 1);
    CHECK(lit.at(2, 3) == 0);
    CHECK(fixed != lit);
    // and the corrected rule still matches the closure here
    CHECK(fixed == df_closure(g, {Connectivity::Eight}));
}

TEST_CASE("waterfall_reference basics") {
    Grid ref(3, 3, 8);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            ref.set(r, c, static_cast<Level>(6 - r - c));
    Grid out = waterfall_reference(ref, {{0, 0}});
    CHECK(out == ref); // strictly decreasing away from the seed fills all
    Grid none = waterfall_reference(ref, {});
    CHECK(none == Grid(3, 3, 8));
}
