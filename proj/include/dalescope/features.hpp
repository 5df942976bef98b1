#pragma once

#include <map>
#include <string>
#include <vector>

#include "dalescope/components.hpp"
#include "dalescope/engine.hpp"
#include "dalescope/grid.hpp"
#include "dalescope/kernels.hpp"

namespace dalescope {

/// Opening direction of a dale. The four (expand, clean) kernel pairs map
/// onto each other under 90-degree grid rotation.
enum class Direction { Down, Up, Left, Right };

constexpr std::array<Direction, 4> kAllDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

std::string to_string(Direction d);
Direction direction_from_string(std::string_view s);

/// down -> expand_1234_1236, up -> expand_4789_6789,
/// right -> expand_1247_1478, left -> expand_2369_3689.
const KernelSchema& dale_expand_kernel(Direction d);

/// down/up -> clean_46, right/left -> clean_28.
const KernelSchema& dale_clean_kernel(Direction d);

/// Lakes of g: octagonal hull, cleaned back toward g with clean_all8, minus
/// g. Zero outside lakes; each nonzero 8-component is one lake. The input
/// is padded by `margin` background cells and cropped back, standing in for
/// the infinite background sea.
Grid lakes(const Grid& g, int margin = 2);

/// Directional concavity image: one-sided expand fixpoint (optionally
/// cleaned against g) minus g. Lakes appear here too; descriptor-level
/// counting subtracts them.
Grid dales(const Grid& g, Direction dir, bool cleaned = true, int margin = 2);

/// Per-cell last-change round of the alternating 4-/8-connected minconvex
/// excavation of the octagonal hull. 0 = never changed.
struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<int> values;
    int at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
    int max_depth() const;
};

struct DepthResult {
    DepthMap map;
    int rounds = 0; // alternation rounds executed, including the quiet one
};

DepthResult concavity_depth(const Grid& g, int margin = 2);

enum class RidgeMethod { A, B };

/// Stroke recovery via dale/ray cascades. Method A: cleaned dale-down, angle
/// expansion with ray_268, dale-up fill, difference. Method B: expand_369,
/// ray_468, expand_147, minus g.
Grid ridges(const Grid& g, RidgeMethod method, int margin = 2);

struct Relation {
    std::string subject;
    std::string relation; // "above" | "within" | "contains"
    std::string object;
    bool operator==(const Relation&) const = default;
};

/// Pairwise relations over part images sharing one geometry.
/// (P, above, Q): the downward ray_2 shadow of P's support meets Q's support.
/// (P, contains, Q) and (Q, within, P): Q's support lies inside the support
/// of P's octagonal hull.
std::vector<Relation> relation_matrix(
    const std::vector<std::pair<std::string, Grid>>& parts);

struct FeatureDescriptor {
    int component_id = 0;
    int lake_count = 0;
    std::map<Direction, int> dale_counts;
    std::vector<Relation> relations;
};

/// Topographic descriptor of one glyph component. Dale components are
/// counted per direction from the cleaned fill after subtracting lake
/// support and the raw fill supports of the other three directions (a
/// region open toward d gives the other fills no boundary to grow from,
/// so only the true opening survives the subtraction); components smaller
/// than min_dale_area are artifacts and dropped.
FeatureDescriptor glyph_descriptor(const Grid& g, int min_dale_area = 2,
                                   int margin = 2);

} // namespace dalescope
