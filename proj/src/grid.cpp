#include "mvdet/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mvdet {

void validate(const GroundGrid& g) {
    if (!(g.cell_size > 0.0)) throw ValidationError("grid cell_size must be positive");
    if (g.rows < 1 || g.cols < 1) throw ValidationError("grid must have at least one cell");
}

Vec2 cell_to_world(const GroundGrid& g, int i, int j) {
    if (i < 0 || i >= g.rows || j < 0 || j >= g.cols)
        throw std::out_of_range("grid cell (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range");
    return {g.origin.x + j * g.cell_size, g.origin.y + i * g.cell_size};
}

std::optional<CellIndex> world_to_cell(const GroundGrid& g, Vec2 p) {
    const double fj = (p.x - g.origin.x) / g.cell_size;
    const double fi = (p.y - g.origin.y) / g.cell_size;
    if (fi < -0.5 || fi >= g.rows - 0.5 || fj < -0.5 || fj >= g.cols - 0.5)
        return std::nullopt;
    const int i = std::clamp(static_cast<int>(std::round(fi)), 0, g.rows - 1);
    const int j = std::clamp(static_cast<int>(std::round(fj)), 0, g.cols - 1);
    return CellIndex{i, j};
}

FeatureTensor coordinate_map(const GroundGrid& g) {
    FeatureTensor t(2, g.rows, g.cols);
    for (int j = 0; j < g.cols; ++j) {
        const float x = g.cols == 1 ? 0.0f
                                    : static_cast<float>(-1.0 + 2.0 * j / (g.cols - 1));
        for (int i = 0; i < g.rows; ++i) t.at(0, i, j) = x;
    }
    for (int i = 0; i < g.rows; ++i) {
        const float y = g.rows == 1 ? 0.0f
                                    : static_cast<float>(-1.0 + 2.0 * i / (g.rows - 1));
        for (int j = 0; j < g.cols; ++j) t.at(1, i, j) = y;
    }
    return t;
}

nlohmann::json grid_to_json(const GroundGrid& g) {
    return {{"origin", {g.origin.x, g.origin.y}},
            {"cell_size", g.cell_size},
            {"rows", g.rows},
            {"cols", g.cols}};
}

GroundGrid grid_from_json(const nlohmann::json& j) {
    GroundGrid g;
    if (j.contains("origin")) {
        g.origin.x = j["origin"][0].get<double>();
        g.origin.y = j["origin"][1].get<double>();
    }
    g.cell_size = j.value("cell_size", g.cell_size);
    g.rows = j.value("rows", g.rows);
    g.cols = j.value("cols", g.cols);
    validate(g);
    return g;
}

} // namespace mvdet
