#include "dalescope/grid.hpp"

#include <algorithm>

namespace dalescope {

namespace {

void require_same_shape(const Grid& a, const Grid& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw UsageError("grid dimensions differ");
    if (a.levels() != b.levels())
        throw UsageError("grid levels differ");
}

} // namespace

Neighborhood neighborhood_at(const Grid& g, int row, int col, BorderPolicy policy) {
    if (!g.in_bounds(row, col))
        throw UsageError("neighborhood_at: coordinates out of range");
    Neighborhood n;
    for (int i = 1; i <= 9; ++i) {
        auto [dr, dc] = kNeighborOffset[static_cast<std::size_t>(i - 1)];
        n[i] = g.sample(row + dr, col + dc, policy);
    }
    return n;
}

Grid minus_sat(const Grid& a, const Grid& b) {
    require_same_shape(a, b);
    Grid out = a;
    for (std::size_t i = 0; i < out.cells().size(); ++i) {
        Level x = a.cells()[i], y = b.cells()[i];
        out.cells()[i] = x > y ? static_cast<Level>(x - y) : 0;
    }
    return out;
}

Grid xor_mask(const Grid& a, const Grid& b) {
    require_same_shape(a, b);
    Grid out = a;
    // Bitwise xor of the level codes; the contract is only "0 iff equal",
    // so values are clamped when levels is not a power of two.
    for (std::size_t i = 0; i < out.cells().size(); ++i) {
        Level v = static_cast<Level>(a.cells()[i] ^ b.cells()[i]);
        out.cells()[i] = std::min<Level>(v, out.max_level());
    }
    return out;
}

Grid threshold(const Grid& g, Level t) {
    if (t >= g.levels())
        throw UsageError("threshold outside [0, levels-1]");
    Grid out = g;
    for (auto& v : out.cells())
        if (v < t) v = 0;
    return out;
}

Grid amplify(const Grid& g, int k) {
    if (k <= 0)
        throw UsageError("amplify factor must be positive");
    Grid out = g;
    for (auto& v : out.cells()) {
        long x = static_cast<long>(v) * k;
        v = static_cast<Level>(std::min<long>(x, out.max_level()));
    }
    return out;
}

Grid box_blur(const Grid& g, int radius, BorderPolicy policy) {
    if (radius < 0)
        throw UsageError("box_blur radius must be nonnegative");
    Grid out = g;
    const long n = static_cast<long>(2 * radius + 1) * (2 * radius + 1);
    for (int r = 0; r < g.height(); ++r) {
        for (int c = 0; c < g.width(); ++c) {
            long sum = 0;
            for (int dr = -radius; dr <= radius; ++dr)
                for (int dc = -radius; dc <= radius; ++dc)
                    sum += g.sample(r + dr, c + dc, policy);
            out.set(r, c, static_cast<Level>(sum / n));
        }
    }
    return out;
}

Grid diff_directional(const Grid& g, int dir, BorderPolicy policy) {
    if (dir < 1 || dir > 9 || dir == 5)
        throw UsageError("diff direction must be one of e1..e9 excluding e5");
    auto [dr, dc] = kNeighborOffset[static_cast<std::size_t>(dir - 1)];
    Grid out(g.width(), g.height(), g.levels());
    for (int r = 0; r < g.height(); ++r) {
        for (int c = 0; c < g.width(); ++c) {
            Level self = g.at(r, c);
            Level nb = g.sample(r + dr, c + dc, policy);
            out.set(r, c, self < nb ? static_cast<Level>(nb - self) : 0);
        }
    }
    return out;
}

Grid binarize(const Grid& g, Level t) {
    Grid out = g;
    for (auto& v : out.cells())
        v = v >= t ? 1 : 0;
    return out;
}

Grid pad(const Grid& g, int margin, Level value) {
    if (margin < 0)
        throw UsageError("pad margin must be nonnegative");
    Grid out(g.width() + 2 * margin, g.height() + 2 * margin, g.levels(), value);
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c)
            out.set(r + margin, c + margin, g.at(r, c));
    return out;
}

Grid crop(const Grid& g, int row0, int col0, int width, int height) {
    if (width < 1 || height < 1 || row0 < 0 || col0 < 0 ||
        row0 + height > g.height() || col0 + width > g.width())
        throw UsageError("crop window outside grid");
    Grid out(width, height, g.levels());
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            out.set(r, c, g.at(row0 + r, col0 + c));
    return out;
}

Grid rotate90_cw(const Grid& g) {
    Grid out(g.height(), g.width(), g.levels());
    for (int r = 0; r < g.height(); ++r)
        for (int c = 0; c < g.width(); ++c)
            out.set(c, g.height() - 1 - r, g.at(r, c));
    return out;
}

} // namespace dalescope
