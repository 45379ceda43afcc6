#include "mvdet/calib.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mvdet/io_util.hpp"

namespace mvdet {

namespace {

using nlohmann::json;

json mat3_to_json(const Mat3& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

Mat3 mat3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + ": expected 3 rows");
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != 3)
            throw ParseError(std::string(what) + ": expected 3 columns");
        for (int c = 0; c < 3; ++c) {
            if (!row[c].is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
            m(r, c) = row[c].get<double>();
        }
    }
    return m;
}

} // namespace

void validate(const CameraCalibration& c) {
    const Mat3& a = c.intrinsic;
    if (!(a(0, 0) > 0.0) || !(a(1, 1) > 0.0))
        throw ValidationError("intrinsic focal entries must be positive");
    if (a(1, 0) != 0.0 || a(2, 0) != 0.0)
        throw ValidationError("intrinsic below-diagonal first column must be zero");
    for (double v : a.m)
        if (!std::isfinite(v)) throw ValidationError("intrinsic has non-finite entries");

    const Mat3 rtr = transpose(c.rotation) * c.rotation;
    if (max_abs_diff(rtr, Mat3::identity()) >= 1e-9)
        throw ValidationError("rotation is not orthonormal");
    if (std::abs(det(c.rotation) - 1.0) >= 1e-9)
        throw ValidationError("rotation determinant is not +1");

    if (!std::isfinite(c.translation.x) || !std::isfinite(c.translation.y) ||
        !std::isfinite(c.translation.z))
        throw ValidationError("translation has non-finite entries");
    if (c.image_h <= 0 || c.image_w <= 0)
        throw ValidationError("image size must be positive");
}

json calibration_to_json(const CameraCalibration& c) {
    json j;
    j["intrinsic"] = mat3_to_json(c.intrinsic);
    j["rotation"] = mat3_to_json(c.rotation);
    j["translation"] = {c.translation.x, c.translation.y, c.translation.z};
    j["image_size"] = {c.image_h, c.image_w};
    return j;
}

CameraCalibration calibration_from_json(const json& j) {
    CameraCalibration c;
    if (!j.is_object()) throw ParseError("calibration: expected object");
    c.intrinsic = mat3_from_json(j.at("intrinsic"), "intrinsic");
    c.rotation = mat3_from_json(j.at("rotation"), "rotation");
    const json& t = j.at("translation");
    if (!t.is_array() || t.size() != 3) throw ParseError("translation: expected 3 entries");
    c.translation = {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()};
    const json& s = j.at("image_size");
    if (!s.is_array() || s.size() != 2) throw ParseError("image_size: expected [H, W]");
    c.image_h = s[0].get<int>();
    c.image_w = s[1].get<int>();
    validate(c);
    return c;
}

namespace {
json parse_json_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path.string());
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}
} // namespace

CameraCalibration load_calibration(const std::filesystem::path& path) {
    return calibration_from_json(parse_json_file(path));
}

void save_calibration(const std::filesystem::path& path, const CameraCalibration& c) {
    atomic_write_file(path, calibration_to_json(c).dump(2) + "\n");
}

std::vector<CameraCalibration> load_rig(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    if (!j.is_array()) throw ParseError("rig file: expected JSON array");
    std::vector<CameraCalibration> rig;
    rig.reserve(j.size());
    for (const auto& e : j) rig.push_back(calibration_from_json(e));
    return rig;
}

void save_rig(const std::filesystem::path& path,
              const std::vector<CameraCalibration>& rig) {
    json j = json::array();
    for (const auto& c : rig) j.push_back(calibration_to_json(c));
    atomic_write_file(path, j.dump(2) + "\n");
}

ProjectionMatrix projection_matrix(const CameraCalibration& c) {
    ProjectionMatrix pm;
    const Mat3& a = c.intrinsic;
    const Mat3& r = c.rotation;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            pm.p(i, j) = a(i, 0) * r(0, j) + a(i, 1) * r(1, j) + a(i, 2) * r(2, j);
        pm.p(i, 3) = a(i, 0) * c.translation.x + a(i, 1) * c.translation.y +
                     a(i, 2) * c.translation.z;
    }
    return pm;
}

Homography ground_homography(const ProjectionMatrix& pm) {
    Homography h;
    for (int i = 0; i < 3; ++i) {
        h.h(i, 0) = pm.p(i, 0);
        h.h(i, 1) = pm.p(i, 1);
        h.h(i, 2) = pm.p(i, 3);
    }
    const double d = det(h.h);
    if (std::abs(d) <= 1e-12)
        throw SingularError("ground homography is singular (degenerate view of z=0)");
    h.h_inv = inverse(h.h, d);
    if (max_abs_diff(h.h * h.h_inv, Mat3::identity()) >= 1e-9)
        throw SingularError("ground homography too ill-conditioned to invert");
    return h;
}

std::optional<Vec2> world_to_image(const ProjectionMatrix& pm, Vec3 x) {
    const Vec3 q = apply_homogeneous(pm.p, x);
    if (!(q.z > kDepthEpsilon)) return std::nullopt;
    return Vec2{q.x / q.z, q.y / q.z};
}

std::optional<Vec2> ground_to_image(const Homography& h, Vec2 x) {
    const Vec3 q = apply_homogeneous(h.h, x);
    if (!(q.z > kDepthEpsilon)) return std::nullopt;
    return Vec2{q.x / q.z, q.y / q.z};
}

std::optional<Vec2> image_to_ground(const Homography& h, Vec2 uv) {
    const Vec3 q = apply_homogeneous(h.h_inv, uv);
    if (!(std::abs(q.z) > kDepthEpsilon)) return std::nullopt;
    return Vec2{q.x / q.z, q.y / q.z};
}

} // namespace mvdet
