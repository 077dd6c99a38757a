#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace meshkit {

template <typename T>
struct Vec2 {
    T x = 0, y = 0;

    constexpr Vec2() = default;
    constexpr Vec2(T x_, T y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(T s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    T& operator[](int i) { return (&x)[i]; }
    const T& operator[](int i) const { return (&x)[i]; }
};

template <typename T>
struct Vec3 {
    T x = 0, y = 0, z = 0;

    constexpr Vec3() = default;
    constexpr Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

    template <typename U>
    constexpr explicit Vec3(const Vec3<U>& o) : x(T(o.x)), y(T(o.y)), z(T(o.z)) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(T s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(T s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(T s) { x *= s; y *= s; z *= s; return *this; }
    constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    T& operator[](int i) { return (&x)[i]; }
    const T& operator[](int i) const { return (&x)[i]; }
};

template <typename T>
constexpr Vec3<T> operator*(T s, const Vec3<T>& v) {
    return v * s;
}

template <typename T>
constexpr T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename T>
constexpr Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
T length(const Vec3<T>& v) {
    return std::sqrt(dot(v, v));
}

template <typename T>
constexpr T length_sq(const Vec3<T>& v) {
    return dot(v, v);
}

template <typename T>
Vec3<T> normalized(const Vec3<T>& v) {
    T len = length(v);
    return len > T(0) ? v / len : Vec3<T>{};
}

template <typename T>
constexpr Vec3<T> min3(const Vec3<T>& a, const Vec3<T>& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}

template <typename T>
constexpr Vec3<T> max3(const Vec3<T>& a, const Vec3<T>& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

using Vec2f = Vec2<float>;
using Vec2d = Vec2<double>;
using Vec3f = Vec3<float>;
using Vec3d = Vec3<double>;

// Axis-aligned box. Empty when min > max on any axis.
template <typename T>
struct BBox3 {
    Vec3<T> min{std::numeric_limits<T>::max(), std::numeric_limits<T>::max(),
                std::numeric_limits<T>::max()};
    Vec3<T> max{std::numeric_limits<T>::lowest(), std::numeric_limits<T>::lowest(),
                std::numeric_limits<T>::lowest()};

    BBox3() = default;
    BBox3(const Vec3<T>& mn, const Vec3<T>& mx) : min(mn), max(mx) {}

    bool empty() const { return min.x > max.x || min.y > max.y || min.z > max.z; }
    void expand(const Vec3<T>& p) { min = min3(min, p); max = max3(max, p); }
    void expand(const BBox3& b) { min = min3(min, b.min); max = max3(max, b.max); }
    Vec3<T> center() const { return (min + max) * T(0.5); }
    Vec3<T> extent() const { return max - min; }
    T max_extent() const {
        Vec3<T> e = extent();
        return std::max(e.x, std::max(e.y, e.z));
    }
    bool contains(const Vec3<T>& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
               p.z <= max.z;
    }
    // Squared distance from p to the box (0 when inside).
    T dist_sq(const Vec3<T>& p) const {
        T d = 0;
        for (int i = 0; i < 3; ++i) {
            T v = p[i];
            if (v < min[i]) d += (min[i] - v) * (min[i] - v);
            if (v > max[i]) d += (v - max[i]) * (v - max[i]);
        }
        return d;
    }
};

using BBoxf = BBox3<float>;
using BBoxd = BBox3<double>;

// Row-major 3x3 matrix, just enough for camera poses and orientation passes.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }

    double& operator()(int r, int c) { return m[size_t(r) * 3 + size_t(c)]; }
    double operator()(int r, int c) const { return m[size_t(r) * 3 + size_t(c)]; }

    Vec3d row(int r) const { return {m[size_t(r) * 3], m[size_t(r) * 3 + 1], m[size_t(r) * 3 + 2]}; }
    Vec3d col(int c) const { return {m[size_t(c)], m[size_t(c) + 3], m[size_t(c) + 6]}; }

    Vec3d operator*(const Vec3d& v) const {
        return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
};

inline double deg_to_rad(double deg) {
    return deg * (3.14159265358979323846 / 180.0);
}

inline double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace meshkit
