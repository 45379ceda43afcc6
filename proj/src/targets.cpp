#include "mvdet/targets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "mvdet/io_util.hpp"

namespace mvdet {

OccupancyMap gaussian_target(const GroundGrid& g, const std::vector<Vec2>& points,
                             double sigma_cells) {
    validate(g);
    if (!(sigma_cells > 0.0)) throw ValidationError("gaussian sigma must be positive");
    OccupancyMap om{FeatureTensor(1, g.rows, g.cols), MapRole::soft_target};
    float* m = om.map.plane(0);
    const double inv = 1.0 / (2.0 * sigma_cells * sigma_cells);
    // Kernels are max-combined; beyond 6 sigma the contribution is under
    // 2e-8, below the f32 resolution of any competing value.
    const int reach = static_cast<int>(std::ceil(6.0 * sigma_cells));
    for (const Vec2& p : points) {
        const double fj = (p.x - g.origin.x) / g.cell_size;
        const double fi = (p.y - g.origin.y) / g.cell_size;
        const int i0 = std::max(0, static_cast<int>(std::floor(fi)) - reach);
        const int i1 = std::min(g.rows - 1, static_cast<int>(std::ceil(fi)) + reach);
        const int j0 = std::max(0, static_cast<int>(std::floor(fj)) - reach);
        const int j1 = std::min(g.cols - 1, static_cast<int>(std::ceil(fj)) + reach);
        for (int i = i0; i <= i1; ++i) {
            for (int j = j0; j <= j1; ++j) {
                const double di = i - fi;
                const double dj = j - fj;
                const float v = static_cast<float>(std::exp(-(di * di + dj * dj) * inv));
                float& cell = m[static_cast<size_t>(i) * g.cols + j];
                if (v > cell) cell = v;
            }
        }
    }
    return om;
}

DetectionSet nms(const DetectionSet& candidates, double radius) {
    if (!(radius > 0.0)) throw ValidationError("nms radius must be positive");
    std::vector<size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return candidates[a].score > candidates[b].score;
    });
    DetectionSet kept;
    for (size_t oi : order) {
        const Detection& c = candidates[oi];
        bool suppressed = false;
        for (const Detection& k : kept) {
            const double dx = c.x - k.x;
            const double dy = c.y - k.y;
            if (dx * dx + dy * dy < radius * radius) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(c);
    }
    return kept;
}

DetectionSet decode(const OccupancyMap& pom, const GroundGrid& g, double threshold,
                    double nms_radius) {
    validate(g);
    if (pom.map.channels != 1 || pom.map.height != g.rows || pom.map.width != g.cols)
        throw ShapeError("decode: map " + pom.map.shape_str() + " does not match grid");
    DetectionSet candidates;
    const float* m = pom.map.plane(0);
    for (int i = 0; i < g.rows; ++i) {
        for (int j = 0; j < g.cols; ++j) {
            const float v = m[static_cast<size_t>(i) * g.cols + j];
            if (v >= threshold) {
                const Vec2 w = cell_to_world(g, i, j);
                candidates.push_back({w.x, w.y, std::clamp(static_cast<double>(v), 0.0, 1.0)});
            }
        }
    }
    return nms(candidates, nms_radius);
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

int parse_frame(const std::string& field, const std::filesystem::path& path) {
    try {
        return std::stoi(field);
    } catch (...) {
        throw ParseError("bad frame index '" + field + "' in " + path.string());
    }
}

double parse_num(const std::string& field, const std::filesystem::path& path) {
    try {
        return std::stod(field);
    } catch (...) {
        throw ParseError("bad number '" + field + "' in " + path.string());
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
}

} // namespace

void save_detections_csv(const std::filesystem::path& path,
                         const std::map<int, DetectionSet>& by_frame) {
    std::string out = "frame,x_m,y_m,score\n";
    for (const auto& [frame, dets] : by_frame) {
        for (const Detection& d : dets) {
            out += std::to_string(frame) + "," + format_double(d.x) + "," +
                   format_double(d.y) + "," + format_double(d.score) + "\n";
        }
    }
    atomic_write_file(path, out);
}

std::map<int, DetectionSet> load_detections_csv(const std::filesystem::path& path) {
    std::istringstream in(read_file_bytes(path));
    std::map<int, DetectionSet> by_frame;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("frame", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        const auto f = split_csv_line(line);
        if (f.size() != 4) throw ParseError("expected 4 fields per line in " + path.string());
        by_frame[parse_frame(f[0], path)].push_back(
            {parse_num(f[1], path), parse_num(f[2], path), parse_num(f[3], path)});
    }
    return by_frame;
}

void save_gt_csv(const std::filesystem::path& path,
                 const std::map<int, std::vector<Vec2>>& by_frame) {
    std::string out = "frame,x_m,y_m\n";
    for (const auto& [frame, pts] : by_frame) {
        for (const Vec2& p : pts)
            out += std::to_string(frame) + "," + format_double(p.x) + "," +
                   format_double(p.y) + "\n";
    }
    atomic_write_file(path, out);
}

std::map<int, std::vector<Vec2>> load_gt_csv(const std::filesystem::path& path) {
    std::istringstream in(read_file_bytes(path));
    std::map<int, std::vector<Vec2>> by_frame;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("frame", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        const auto f = split_csv_line(line);
        if (f.size() != 3) throw ParseError("expected 3 fields per line in " + path.string());
        by_frame[parse_frame(f[0], path)].push_back(
            {parse_num(f[1], path), parse_num(f[2], path)});
    }
    return by_frame;
}

} // namespace mvdet
