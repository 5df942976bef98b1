#include "dalescope/pipelines.hpp"

#include <algorithm>

#include "dalescope/kernels.hpp"

namespace dalescope {

namespace {

class StageList {
public:
    StageList(const Grid& input, int margin)
        : margin_(margin), width_(input.width()), height_(input.height()),
          base_(pad(input, margin)) {}

    const Grid& base() const { return base_; }

    const Grid& emit(const std::string& tag, Grid image, RunStats stats = {}) {
        stages_.push_back({tag, std::move(image), stats});
        return stages_.back().image;
    }

    const Grid& fixpoint(const std::string& tag, const Grid& in,
                         const std::string& kernel, const Grid* ref = nullptr) {
        FixpointResult res = run_fixpoint(in, lookup_kernel(kernel), ref);
        return emit(tag, std::move(res.grid), res.stats);
    }

    std::vector<StageResult> finish() {
        for (auto& s : stages_)
            s.image = crop(s.image, margin_, margin_, width_, height_);
        return std::move(stages_);
    }

private:
    int margin_, width_, height_;
    Grid base_;
    std::vector<StageResult> stages_;
};

// §15: hull, lakes-filled, then per-direction cleaned dale images.
std::vector<StageResult> alphabet(const Grid& input, int margin) {
    StageList s(input, margin);
    const Grid& g = s.base();
    const Grid& hull = s.fixpoint("15_2_convex_hull", g, "convex_hull_oct");
    s.fixpoint("15_3_lakes_filled", hull, "clean_all8", &g);
    const Grid& down = s.fixpoint("15_4_dales_down_filled", g, "expand_1234_1236");
    s.fixpoint("15_5_dales_down_cleaned", down, "clean_46", &g);
    const Grid& right = s.fixpoint("15_6a_dales_right_filled", g, "expand_1247_1478");
    s.fixpoint("15_6_dales_right_cleaned", right, "clean_28", &g);
    const Grid& left = s.fixpoint("15_7a_dales_left_filled", g, "expand_2369_3689");
    s.fixpoint("15_7_dales_left_cleaned", left, "clean_28", &g);
    return s.finish();
}

// §16.2: lakes of the minimal-hull difference plus the four dale fills.
std::vector<StageResult> hieroglyph(const Grid& input, int margin) {
    StageList s(input, margin);
    const Grid& g = s.emit("16_2_1_original", s.base());
    const Grid& hull = s.fixpoint("16_2_2_convex_hull", g, "convex_hull_oct");
    const Grid& minhull = s.fixpoint("16_2_3_minconvex_hull", hull, "minconvex_hull_oct", &g);
    const Grid& diff = s.emit("16_2_4_difference", minus_sat(minhull, g));
    Grid h5 = run_fixpoint(diff, lookup_kernel("convex_hull_oct")).grid;
    const Grid& hulled = s.emit("16_2_5_hull_of_difference",
                                run_fixpoint(h5, lookup_kernel("minconvex_hull_oct"), &diff).grid);
    const Grid& cleaned = s.fixpoint("16_2_6_cleaned", hulled, "clean_all8", &diff);
    s.emit("16_2_7_lakes", minus_sat(cleaned, diff));
    s.fixpoint("16_2_8_dales_down", g, "expand_1234_1236");
    s.fixpoint("16_2_9_dales_right", g, "expand_1247_1478");
    s.fixpoint("16_2_10_dales_left", g, "expand_2369_3689");
    s.fixpoint("16_2_11_dales_up", g, "expand_4789_6789");
    return s.finish();
}

// §17.2: waterfall border removal, lakes, then dale passes with differences
// and change masks. The published caption for the first difference stage
// subtracts the hull, which is identically zero (clean is anti-extensive);
// following the §16.2.7 pattern it subtracts the hull's input instead.
std::vector<StageResult> face(const Grid& input, int margin) {
    StageList s(input, margin);
    const Grid& g = s.emit("17_2_1_original", s.base());
    FixpointResult wf = run_waterfall(g, border_cells(g));
    const Grid& filled = s.emit("17_2_2_waterfall", std::move(wf.grid), wf.stats);
    const Grid& body = s.emit("17_2_3_difference", minus_sat(g, filled));
    const Grid& hull = s.fixpoint("17_2_4_convex_hull", body, "convex_hull_oct");
    const Grid& cleaned = s.fixpoint("17_2_5_cleaned", hull, "clean_all8", &body);
    const Grid& lakes = s.emit("17_2_6_lakes_amplified",
                               amplify(minus_sat(cleaned, body), 2));
    s.emit("17_2_7_xor", xor_mask(cleaned, hull));
    const Grid& lakehull = s.fixpoint("17_2_8_hull_of_lakes", lakes, "convex_hull_oct");
    s.emit("17_2_9_difference_amplified", amplify(minus_sat(lakehull, lakes), 2));
    s.emit("17_2_10_xor", xor_mask(lakes, lakehull));

    const Grid& down = s.fixpoint("17_2_11a_dales_down", body, "expand_1234_1236");
    const Grid& downc = s.fixpoint("17_2_11_dales_down_cleaned", down, "clean_46", &body);
    s.emit("17_2_12_difference_amplified", amplify(minus_sat(downc, body), 2));
    s.emit("17_2_13_xor", xor_mask(downc, body));

    const Grid& right = s.fixpoint("17_2_14a_dales_right", body, "expand_1247_1478");
    const Grid& rightc = s.fixpoint("17_2_14_dales_right_cleaned", right, "clean_28", &body);
    const Grid& rdiff = s.emit("17_2_15_difference", minus_sat(rightc, body));
    s.emit("17_2_16_xor", xor_mask(rdiff, body));

    const Grid& left = s.fixpoint("17_2_17a_dales_left", body, "expand_2369_3689");
    const Grid& leftc = s.fixpoint("17_2_17_dales_left_cleaned", left, "clean_28", &body);
    const Grid& ldiff = s.emit("17_2_18_difference", minus_sat(leftc, body));
    s.emit("17_2_19_xor", xor_mask(ldiff, body));
    return s.finish();
}

// §12.3: remove the monotone areas adjacent to the border.
std::vector<StageResult> waterfall_border(const Grid& input, int margin) {
    StageList s(input, margin);
    const Grid& g = s.emit("12_3_1_original", s.base());
    FixpointResult wf = run_waterfall(g, border_cells(g));
    const Grid& filled = s.emit("12_3_2_waterfall", std::move(wf.grid), wf.stats);
    s.emit("12_3_3_difference", minus_sat(g, filled));
    return s.finish();
}

} // namespace

std::vector<std::string> pipeline_names() {
    return {"alphabet", "hieroglyph", "face", "waterfall-border"};
}

std::vector<StageResult> run_pipeline(const std::string& name, const Grid& input,
                                      int margin) {
    if (name == "alphabet")
        return alphabet(input, margin);
    if (name == "hieroglyph")
        return hieroglyph(input, margin);
    if (name == "face")
        return face(input, margin);
    if (name == "waterfall-border")
        return waterfall_border(input, margin);
    std::string known;
    for (const auto& n : pipeline_names())
        known += ' ' + n;
    throw UsageError("unknown pipeline '" + name + "'; known:" + known);
}

} // namespace dalescope
