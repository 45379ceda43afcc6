#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mvdet/calib.hpp"
#include "mvdet/grid.hpp"
#include "mvdet/tensor.hpp"

namespace mvdet {

/// Per-ground-cell source coordinates in feature-map pixel units, plus a
/// validity bit. Built once per rig and immutable afterwards. The packed
/// taps (four neighbor indices and bilinear weights per cell, zero weight
/// for neighbors outside the map and for invalid cells) feed the gather
/// kernel directly.
struct SamplingGrid {
    int rows = 0, cols = 0;
    int feat_h = 0, feat_w = 0;
    std::vector<double> u, v;      // row-major per cell; meaningful when valid
    std::vector<uint8_t> valid;
    std::array<std::vector<int32_t>, 4> tap_idx;
    std::array<std::vector<float>, 4> tap_w;

    size_t cell_count() const { return static_cast<size_t>(rows) * cols; }
};

/// Projects every cell center through h, keeps it when the image point has
/// positive depth and lies inside [0, W_i) x [0, H_i), and scales pixel
/// coordinates by (feat_w / image_w, feat_h / image_h) into feature units.
SamplingGrid build_sampling_grid(const Homography& h, const GroundGrid& g, int image_h,
                                 int image_w, int feat_h, int feat_w);

/// Bilinear sample of f at each valid cell; neighbors outside the feature
/// map contribute zero, invalid cells are exactly zero in all channels.
FeatureTensor warp_features(const FeatureTensor& f, const SamplingGrid& s);

/// Channel concatenation in camera order with the coordinate map last.
FeatureTensor aggregate(const std::vector<FeatureTensor>& warped,
                        const FeatureTensor& coord);

/// What gets warped onto the ground plane: raw image channels, provider
/// feature channels, or the single-view foot score map.
enum class ProjectionMode { images, features, results };

ProjectionMode projection_mode_from_string(const std::string& s);
const char* to_string(ProjectionMode m);

} // namespace mvdet
