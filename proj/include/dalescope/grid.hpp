#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "dalescope/errors.hpp"

namespace dalescope {

/// One cell value of the ordered level set [0, levels-1].
using Level = std::uint16_t;

/// Out-of-bounds neighbor reads return a constant (the background sea).
struct BorderPolicy {
    Level constant = 0;
};

/// Rectangular tiling of ordered levels, row-major, rows increase downward.
/// Immutable in spirit: operations return fresh grids.
class Grid {
public:
    Grid() = default;

    Grid(int width, int height, int levels = 256, Level fill = 0)
        : width_(width), height_(height), levels_(levels),
          cells_(static_cast<std::size_t>(width) * height, fill) {
        if (width < 1 || height < 1)
            throw UsageError("grid dimensions must be at least 1x1");
        if (levels < 2 || levels > 256)
            throw UsageError("levels must be in [2, 256]");
        if (fill >= levels)
            throw UsageError("fill value outside [0, levels-1]");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int levels() const { return levels_; }
    Level max_level() const { return static_cast<Level>(levels_ - 1); }

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height_ && col >= 0 && col < width_;
    }

    Level at(int row, int col) const {
        assert(in_bounds(row, col));
        return cells_[static_cast<std::size_t>(row) * width_ + col];
    }

    void set(int row, int col, Level v) {
        assert(in_bounds(row, col));
        assert(v < levels_);
        cells_[static_cast<std::size_t>(row) * width_ + col] = v;
    }

    /// Border-filled read; the only sanctioned way to look outside the grid.
    Level sample(int row, int col, BorderPolicy policy = {}) const {
        return in_bounds(row, col) ? at(row, col) : policy.constant;
    }

    const std::vector<Level>& cells() const { return cells_; }
    std::vector<Level>& cells() { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    int levels_ = 2;
    std::vector<Level> cells_;
};

/// The e1..e9 stencil. e5 is the center; e2,e4,e6,e8 are the "+"-connected
/// neighbors, e1,e3,e7,e9 the "x"-connected ones. Layout:
///   e1 e2 e3
///   e4 e5 e6
///   e7 e8 e9
struct Neighborhood {
    std::array<Level, 9> e{};

    Level operator[](int index) const {
        assert(index >= 1 && index <= 9);
        return e[static_cast<std::size_t>(index - 1)];
    }
    Level& operator[](int index) {
        assert(index >= 1 && index <= 9);
        return e[static_cast<std::size_t>(index - 1)];
    }
};

/// Row/col offset of neighbor e<index> relative to the center.
constexpr std::array<std::pair<int, int>, 9> kNeighborOffset = {{
    {-1, -1}, {-1, 0}, {-1, 1},
    {0, -1},  {0, 0},  {0, 1},
    {1, -1},  {1, 0},  {1, 1},
}};

Neighborhood neighborhood_at(const Grid& g, int row, int col, BorderPolicy policy = {});

// Pointwise image arithmetic. Binary ops require equal dimensions and levels.
Grid minus_sat(const Grid& a, const Grid& b);
Grid xor_mask(const Grid& a, const Grid& b);
Grid threshold(const Grid& g, Level t);
Grid amplify(const Grid& g, int k);
Grid box_blur(const Grid& g, int radius, BorderPolicy policy = {});

/// out[c] = neighbor(c,dir) - g[c] where g[c] < neighbor, else 0. dir in 1..9, not 5.
Grid diff_directional(const Grid& g, int dir, BorderPolicy policy = {});

/// 1 where value >= t, else 0; keeps the levels parameter.
Grid binarize(const Grid& g, Level t);

Grid pad(const Grid& g, int margin, Level value = 0);
Grid crop(const Grid& g, int row0, int col0, int width, int height);
Grid rotate90_cw(const Grid& g);

} // namespace dalescope
