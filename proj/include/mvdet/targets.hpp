#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "mvdet/grid.hpp"
#include "mvdet/tensor.hpp"

namespace mvdet {

enum class MapRole { prediction, soft_target, binary_truth };

/// 1 x rows x cols ground-plane score map.
struct OccupancyMap {
    FeatureTensor map;
    MapRole role = MapRole::prediction;
};

struct Detection {
    double x = 0.0;
    double y = 0.0;
    double score = 0.0;
};

using DetectionSet = std::vector<Detection>;

/// Soft occupancy target: per cell, the max over points of
/// exp(-d^2 / (2 sigma^2)) with d the cell-center distance in cell units.
OccupancyMap gaussian_target(const GroundGrid& g, const std::vector<Vec2>& points,
                             double sigma_cells);

/// Greedy suppression, descending score (stable: ties keep input order).
/// A candidate is kept iff no already-kept detection lies strictly closer
/// than radius.
DetectionSet nms(const DetectionSet& candidates, double radius);

/// Thresholds the map at `threshold`, places candidates at cell centers
/// scored by the (clamped to [0,1]) cell value in row-major order, then
/// applies nms.
DetectionSet decode(const OccupancyMap& pom, const GroundGrid& g, double threshold = 0.4,
                    double nms_radius = 0.5);

/// CSV lines "frame,x_m,y_m,score".
void save_detections_csv(const std::filesystem::path& path,
                         const std::map<int, DetectionSet>& by_frame);
std::map<int, DetectionSet> load_detections_csv(const std::filesystem::path& path);

/// CSV lines "frame,x_m,y_m".
void save_gt_csv(const std::filesystem::path& path,
                 const std::map<int, std::vector<Vec2>>& by_frame);
std::map<int, std::vector<Vec2>> load_gt_csv(const std::filesystem::path& path);

} // namespace mvdet
