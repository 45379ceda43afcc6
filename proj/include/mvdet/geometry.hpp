#pragma once

#include <array>
#include <cmath>

namespace mvdet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Vec3 normalized(Vec3 a) {
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

/// 3x3 row-major matrix, double precision.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(r) * 3 + c]; }
    double operator()(int r, int c) const { return m[static_cast<size_t>(r) * 3 + c]; }

    static Mat3 identity() {
        Mat3 i;
        i(0, 0) = i(1, 1) = i(2, 2) = 1.0;
        return i;
    }
};

/// 3x4 row-major matrix, double precision.
struct Mat34 {
    std::array<double, 12> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(r) * 4 + c]; }
    double operator()(int r, int c) const { return m[static_cast<size_t>(r) * 4 + c]; }
};

inline Vec3 operator*(const Mat3& a, Vec3 v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(j, i);
    return r;
}

inline double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Inverse via adjugate; caller checks det(a) is usable beforehand.
inline Mat3 inverse(const Mat3& a, double d) {
    Mat3 r;
    r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return r;
}

/// Max absolute entry of a - b.
inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

/// p * (x, y, z, 1), homogeneous result.
inline Vec3 apply_homogeneous(const Mat34& p, Vec3 v) {
    return {p(0, 0) * v.x + p(0, 1) * v.y + p(0, 2) * v.z + p(0, 3),
            p(1, 0) * v.x + p(1, 1) * v.y + p(1, 2) * v.z + p(1, 3),
            p(2, 0) * v.x + p(2, 1) * v.y + p(2, 2) * v.z + p(2, 3)};
}

/// h * (x, y, 1), homogeneous result.
inline Vec3 apply_homogeneous(const Mat3& h, Vec2 v) {
    return {h(0, 0) * v.x + h(0, 1) * v.y + h(0, 2),
            h(1, 0) * v.x + h(1, 1) * v.y + h(1, 2),
            h(2, 0) * v.x + h(2, 1) * v.y + h(2, 2)};
}

} // namespace mvdet
