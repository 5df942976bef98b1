#include <doctest.h>

#include "dalescope/pipelines.hpp"
#include "dalescope/kernels.hpp"
#include "dalescope/oracle.hpp"
#include "test_support.hpp"

using namespace dalescope;
using testsupport::fixture;
using testsupport::subset_of;

namespace {

const StageResult& stage(const std::vector<StageResult>& stages,
                         const std::string& tag) {
    for (const auto& s : stages)
        if (s.tag == tag)
            return s;
    FAIL("missing stage ", tag);
    return stages.front();
}

void check_all_converged(const std::vector<StageResult>& stages) {
    for (const auto& s : stages) {
        CAPTURE(s.tag);
        CHECK(s.stats.converged);
    }
}

bool pointwise_geq(const Grid& a, const Grid& b) {
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] < b.cells()[i])
            return false;
    return true;
}

} // namespace

TEST_CASE("pipeline names and unknown-name error") {
    CHECK(pipeline_names().size() == 4);
    CHECK_THROWS_AS(run_pipeline("bogus", Grid(4, 4, 8)), UsageError);
}

TEST_CASE("hieroglyph pipeline emits 11 tagged figure stages") {
    Grid in = fixture("hieroglyph.pgm");
    auto stages = run_pipeline("hieroglyph", in);
    int figure_stages = 0;
    for (const auto& s : stages)
        figure_stages += s.tag.find("16_2_") == 0;
    CHECK(figure_stages == 11);
    check_all_converged(stages);

    // stage-local invariants: hull extensivity, clean anti-extensivity,
    // nonnegative differences (by construction of minus_sat, check support)
    const Grid& orig = stage(stages, "16_2_1_original").image;
    const Grid& hull = stage(stages, "16_2_2_convex_hull").image;
    const Grid& minhull = stage(stages, "16_2_3_minconvex_hull").image;
    CHECK(pointwise_geq(hull, orig));
    CHECK(pointwise_geq(hull, minhull));
    const Grid& lakes = stage(stages, "16_2_7_lakes").image;
    CHECK(label_components(lakes, Connectivity::Eight, 0).count == 2);
}

TEST_CASE("alphabet pipeline emits the section 15 cascade") {
    Grid in = fixture("glyph_sheet.pgm");
    auto stages = run_pipeline("alphabet", in);
    check_all_converged(stages);
    const Grid& hull = stage(stages, "15_2_convex_hull").image;
    CHECK(pointwise_geq(hull, in));
    const Grid& cleaned = stage(stages, "15_3_lakes_filled").image;
    CHECK(pointwise_geq(hull, cleaned));
    // dales-down fill dominates its cleaned version
    CHECK(pointwise_geq(stage(stages, "15_4_dales_down_filled").image,
                        stage(stages, "15_5_dales_down_cleaned").image));
}

TEST_CASE("waterfall-border removes the border-connected monotone area") {
    Grid in = fixture("gradient.pgm");
    auto stages = run_pipeline("waterfall-border", in);
    check_all_converged(stages);
    const Grid& diff = stage(stages, "12_3_3_difference").image;
    // the reference oracle says which cells drain to the border
    Grid padded = pad(in, 2);
    Grid reach = waterfall_reference(padded, border_cells(padded));
    for (int r = 0; r < in.height(); ++r)
        for (int c = 0; c < in.width(); ++c)
            if (reach.at(r + 2, c + 2) == padded.at(r + 2, c + 2))
                CHECK(diff.at(r, c) == 0);
    // the central bump survives
    CHECK(testsupport::support_size(diff) > 0);
}

TEST_CASE("face pipeline runs end to end on the synthetic portrait") {
    Grid in = fixture("face.pgm");
    auto stages = run_pipeline("face", in);
    CHECK(stages.size() >= 19);
    check_all_converged(stages);
    const Grid& body = stage(stages, "17_2_3_difference").image;
    const Grid& hull = stage(stages, "17_2_4_convex_hull").image;
    const Grid& cleaned = stage(stages, "17_2_5_cleaned").image;
    CHECK(pointwise_geq(hull, body));
    CHECK(pointwise_geq(hull, cleaned));
    // xor stages are zero exactly where their operands agree
    const Grid& x = stage(stages, "17_2_7_xor").image;
    for (int r = 0; r < x.height(); ++r)
        for (int c = 0; c < x.width(); ++c)
            CHECK((x.at(r, c) == 0) == (cleaned.at(r, c) == hull.at(r, c)));
}
