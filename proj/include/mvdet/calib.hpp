#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mvdet/errors.hpp"
#include "mvdet/geometry.hpp"

namespace mvdet {

/// Homogeneous scale below this counts as behind the camera.
inline constexpr double kDepthEpsilon = 1e-9;

/// Pinhole camera: pixel = A [R|t] world. All geometry double precision.
struct CameraCalibration {
    Mat3 intrinsic;   // A, pixels
    Mat3 rotation;    // R, world -> camera
    Vec3 translation; // t, meters
    int image_h = 0;
    int image_w = 0;
};

/// Full 3x4 projection P = A [R|t].
struct ProjectionMatrix {
    Mat34 p;
};

/// Ground-plane (z = 0) map: h = columns 1, 2, 4 of the projection.
struct Homography {
    Mat3 h;
    Mat3 h_inv;
};

/// Throws ValidationError unless R is a proper rotation (orthonormal,
/// det +1 within 1e-9), focal entries are positive, the below-diagonal
/// first-column entries of A are zero, and the image size is positive.
void validate(const CameraCalibration& c);

nlohmann::json calibration_to_json(const CameraCalibration& c);
CameraCalibration calibration_from_json(const nlohmann::json& j);

CameraCalibration load_calibration(const std::filesystem::path& path);
void save_calibration(const std::filesystem::path& path, const CameraCalibration& c);

/// Rig file: JSON array of calibrations; camera index = array position.
std::vector<CameraCalibration> load_rig(const std::filesystem::path& path);
void save_rig(const std::filesystem::path& path,
              const std::vector<CameraCalibration>& rig);

ProjectionMatrix projection_matrix(const CameraCalibration& c);

/// Drops the z column of the projection and inverts the result.
/// Throws SingularError for a degenerate ground-plane view.
Homography ground_homography(const ProjectionMatrix& pm);

/// Returns pixel coordinates, or nullopt when the point is behind the
/// camera (homogeneous scale <= kDepthEpsilon).
std::optional<Vec2> world_to_image(const ProjectionMatrix& pm, Vec3 x);
std::optional<Vec2> ground_to_image(const Homography& h, Vec2 x);
std::optional<Vec2> image_to_ground(const Homography& h, Vec2 uv);

} // namespace mvdet
