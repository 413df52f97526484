#pragma once

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <limits>

namespace avatar {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double xx, double yy, double zz) : x(xx), y(yy), z(zz) {}

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }

    Vec3 operator+(const Vec3& b) const { return {x + b.x, y + b.y, z + b.z}; }
    Vec3 operator-(const Vec3& b) const { return {x - b.x, y - b.y, z - b.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& b) { x += b.x; y += b.y; z += b.z; return *this; }
    Vec3& operator-=(const Vec3& b) { x -= b.x; y -= b.y; z -= b.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    Vec3 cmul(const Vec3& b) const { return {x * b.x, y * b.y, z * b.z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length_sq(const Vec3& v) { return dot(v, v); }
inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    double len = length(v);
    return len > 0.0 ? v / len : v;
}
inline Vec3 vmin(const Vec3& a, const Vec3& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
inline Vec3 vmax(const Vec3& a, const Vec3& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

// Row-major 3x3.
struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return Mat3{}; }
    static Mat3 zero() {
        Mat3 r;
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) r.m[i][j] = 0.0;
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& b) const {
        Mat3 r = zero();
        for (int i = 0; i < 3; i++)
            for (int k = 0; k < 3; k++)
                for (int j = 0; j < 3; j++) r.m[i][j] += m[i][k] * b.m[k][j];
        return r;
    }
    Mat3 operator+(const Mat3& b) const {
        Mat3 r = zero();
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) r.m[i][j] = m[i][j] + b.m[i][j];
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r = zero();
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) r.m[i][j] = m[i][j] * s;
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) r.m[i][j] = m[j][i];
        return r;
    }
    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    Mat3 inverse() const {
        double d = det();
        Mat3 r;
        double inv = 1.0 / d;
        r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * inv;
        r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv;
        r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv;
        r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * inv;
        r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv;
        r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv;
        r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * inv;
        r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv;
        r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv;
        return r;
    }

    static Mat3 rotation_x(double a) {
        double c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.m[1][1] = c; r.m[1][2] = -s;
        r.m[2][1] = s; r.m[2][2] = c;
        return r;
    }
    static Mat3 rotation_y(double a) {
        double c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.m[0][0] = c; r.m[0][2] = s;
        r.m[2][0] = -s; r.m[2][2] = c;
        return r;
    }
    static Mat3 rotation_z(double a) {
        double c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.m[0][0] = c; r.m[0][1] = -s;
        r.m[1][0] = s; r.m[1][1] = c;
        return r;
    }
    // Rodrigues rotation from an axis-angle vector (angle = |v|).
    static Mat3 rotation_axis_angle(const Vec3& v);
    // Skew-symmetric cross-product matrix [v]x.
    static Mat3 skew(const Vec3& v) {
        Mat3 r = zero();
        r.m[0][1] = -v.z; r.m[0][2] = v.y;
        r.m[1][0] = v.z;  r.m[1][2] = -v.x;
        r.m[2][0] = -v.y; r.m[2][1] = v.x;
        return r;
    }
};

inline Mat3 Mat3::rotation_axis_angle(const Vec3& v) {
    double angle = length(v);
    if (angle < 1e-12) {
        // Second-order series keeps the map smooth through zero.
        Mat3 k = skew(v);
        Mat3 r = identity() + k + (k * k) * 0.5;
        return r;
    }
    Vec3 axis = v / angle;
    double c = std::cos(angle), s = std::sin(angle);
    Mat3 k = skew(axis);
    return identity() + k * s + (k * k) * (1.0 - c);
}

// Rigid (or affine) transform: x -> R*x + t.
struct Transform {
    Mat3 rot;
    Vec3 trans;

    static Transform identity() { return Transform{}; }
    static Transform translate(const Vec3& t) { return {Mat3::identity(), t}; }

    Vec3 apply_point(const Vec3& p) const { return rot * p + trans; }
    Vec3 apply_dir(const Vec3& d) const { return rot * d; }

    Transform operator*(const Transform& b) const {
        // (this ∘ b)(x) = R_a (R_b x + t_b) + t_a
        return {rot * b.rot, rot * b.trans + trans};
    }
    Transform inverse() const {
        Mat3 rt = rot.transposed();  // rigid
        return {rt, -(rt * trans)};
    }
};

struct Aabb {
    Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::max()};
    Vec3 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
            std::numeric_limits<double>::lowest()};

    bool empty() const { return lo.x > hi.x; }
    void grow(const Vec3& p) { lo = vmin(lo, p); hi = vmax(hi, p); }
    void grow(const Aabb& b) { lo = vmin(lo, b.lo); hi = vmax(hi, b.hi); }
    void expand(double r) { lo -= Vec3(r, r, r); hi += Vec3(r, r, r); }
    Vec3 center() const { return (lo + hi) * 0.5; }
    Vec3 extent() const { return hi - lo; }
    bool contains(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z;
    }
    // Slab test; returns false when the ray misses. tmin/tmax clipped to input range.
    bool hit_ray(const Vec3& o, const Vec3& inv_dir, double t0, double t1) const {
        for (int a = 0; a < 3; a++) {
            double ta = (lo[a] - o[a]) * inv_dir[a];
            double tb = (hi[a] - o[a]) * inv_dir[a];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
        }
        return t0 <= t1;
    }
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace avatar
