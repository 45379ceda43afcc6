#include "mvdet/warp.hpp"

#include <cmath>
#include <cstring>

#include "mvdet/kernels.hpp"

namespace mvdet {

SamplingGrid build_sampling_grid(const Homography& h, const GroundGrid& g, int image_h,
                                 int image_w, int feat_h, int feat_w) {
    validate(g);
    if (image_h <= 0 || image_w <= 0 || feat_h <= 0 || feat_w <= 0)
        throw ValidationError("sampling grid sizes must be positive");

    SamplingGrid s;
    s.rows = g.rows;
    s.cols = g.cols;
    s.feat_h = feat_h;
    s.feat_w = feat_w;
    const size_t n = s.cell_count();
    s.u.assign(n, 0.0);
    s.v.assign(n, 0.0);
    s.valid.assign(n, 0);
    for (auto& t : s.tap_idx) t.assign(n, 0);
    for (auto& t : s.tap_w) t.assign(n, 0.0f);

    const double su = static_cast<double>(feat_w) / image_w;
    const double sv = static_cast<double>(feat_h) / image_h;

    for (int i = 0; i < g.rows; ++i) {
        for (int j = 0; j < g.cols; ++j) {
            const size_t cell = static_cast<size_t>(i) * g.cols + j;
            const auto uv = ground_to_image(h, cell_to_world(g, i, j));
            if (!uv) continue;
            // Validity is decided in image-pixel space so borderline cells
            // behave the same at any feature resolution.
            if (uv->x < 0.0 || uv->x >= image_w || uv->y < 0.0 || uv->y >= image_h)
                continue;
            const double uf = uv->x * su;
            const double vf = uv->y * sv;
            s.u[cell] = uf;
            s.v[cell] = vf;
            s.valid[cell] = 1;

            const int x0 = static_cast<int>(std::floor(uf));
            const int y0 = static_cast<int>(std::floor(vf));
            const float fx = static_cast<float>(uf - x0);
            const float fy = static_cast<float>(vf - y0);
            const int xs[4] = {x0, x0 + 1, x0, x0 + 1};
            const int ys[4] = {y0, y0, y0 + 1, y0 + 1};
            const float ws[4] = {(1.0f - fx) * (1.0f - fy), fx * (1.0f - fy),
                                 (1.0f - fx) * fy, fx * fy};
            for (int k = 0; k < 4; ++k) {
                if (xs[k] < 0 || xs[k] >= feat_w || ys[k] < 0 || ys[k] >= feat_h)
                    continue; // outside neighbors contribute zero
                s.tap_idx[k][cell] = ys[k] * feat_w + xs[k];
                s.tap_w[k][cell] = ws[k];
            }
        }
    }
    return s;
}

FeatureTensor warp_features(const FeatureTensor& f, const SamplingGrid& s) {
    if (f.height != s.feat_h || f.width != s.feat_w)
        throw ShapeError("warp_features: feature map " + f.shape_str() +
                         " does not match sampling grid " + std::to_string(s.feat_h) +
                         "x" + std::to_string(s.feat_w));
    FeatureTensor out(f.channels, s.rows, s.cols);
    const int32_t* idx[4] = {s.tap_idx[0].data(), s.tap_idx[1].data(),
                             s.tap_idx[2].data(), s.tap_idx[3].data()};
    const float* w[4] = {s.tap_w[0].data(), s.tap_w[1].data(), s.tap_w[2].data(),
                         s.tap_w[3].data()};
    for (int c = 0; c < f.channels; ++c)
        kernels::gather4(out.plane(c), f.plane(c), idx, w, s.cell_count());
    return out;
}

FeatureTensor aggregate(const std::vector<FeatureTensor>& warped,
                        const FeatureTensor& coord) {
    if (coord.channels != 2) throw ShapeError("aggregate: coordinate map must have 2 channels");
    int total = 2;
    for (const auto& t : warped) {
        if (t.height != coord.height || t.width != coord.width)
            throw ShapeError("aggregate: spatial size mismatch " + t.shape_str() + " vs " +
                             coord.shape_str());
        if (t.channels != warped.front().channels)
            throw ShapeError("aggregate: camera channel counts differ");
        total += t.channels;
    }
    FeatureTensor out(total, coord.height, coord.width);
    const size_t plane = coord.plane_size();
    float* dst = out.data.data();
    for (const auto& t : warped) {
        std::memcpy(dst, t.data.data(), t.size() * sizeof(float));
        dst += t.size();
    }
    std::memcpy(dst, coord.data.data(), 2 * plane * sizeof(float));
    return out;
}

ProjectionMode projection_mode_from_string(const std::string& s) {
    if (s == "images") return ProjectionMode::images;
    if (s == "features") return ProjectionMode::features;
    if (s == "results") return ProjectionMode::results;
    throw ConfigError("unknown projection mode: " + s);
}

const char* to_string(ProjectionMode m) {
    switch (m) {
        case ProjectionMode::images: return "images";
        case ProjectionMode::features: return "features";
        case ProjectionMode::results: return "results";
    }
    return "?";
}

} // namespace mvdet
