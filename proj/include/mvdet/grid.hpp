#pragma once

#include <optional>

#include <nlohmann/json_fwd.hpp>

#include "mvdet/geometry.hpp"
#include "mvdet/tensor.hpp"

namespace mvdet {

/// Quantized ground plane. origin is the world position of cell (0,0)'s
/// center; x runs along columns, y along rows; cells are square.
struct GroundGrid {
    Vec2 origin{0.0, 0.0};
    double cell_size = 0.1;
    int rows = 1;
    int cols = 1;
};

struct CellIndex {
    int row = 0;
    int col = 0;
    bool operator==(const CellIndex&) const = default;
};

void validate(const GroundGrid& g);

/// Center of cell (i, j) in world meters. Throws std::out_of_range.
Vec2 cell_to_world(const GroundGrid& g, int i, int j);

/// Nearest-cell-center quantization (round half away from zero on the
/// cell-unit offset); nullopt outside [-0.5, rows-0.5) x [-0.5, cols-0.5).
std::optional<CellIndex> world_to_cell(const GroundGrid& g, Vec2 p);

/// 2 x rows x cols map: channel 0 = x position normalized to [-1,1]
/// across columns, channel 1 = y across rows. A 1-wide axis maps to 0.
FeatureTensor coordinate_map(const GroundGrid& g);

nlohmann::json grid_to_json(const GroundGrid& g);
GroundGrid grid_from_json(const nlohmann::json& j);

} // namespace mvdet
