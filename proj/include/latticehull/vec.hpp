#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lh {

/// Point/vector in R^d for d in {2,3}. A 2D vector keeps z == 0 so that
/// dot products and norms are dimension-agnostic.
struct Vec {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    int dim = 2;

    Vec() = default;
    Vec(double px, double py) : x(px), y(py), z(0.0), dim(2) {}
    Vec(double px, double py, double pz) : x(px), y(py), z(pz), dim(3) {}

    double operator[](int i) const {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
        }
        throw std::out_of_range("Vec index");
    }
    double& operator[](int i) {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
        }
        throw std::out_of_range("Vec index");
    }
};

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    r.x += b.x;
    r.y += b.y;
    r.z += b.z;
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    r.x -= b.x;
    r.y -= b.y;
    r.z -= b.z;
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r = a;
    r.x = -r.x;
    r.y = -r.y;
    r.z = -r.z;
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r = a;
    r.x *= s;
    r.y *= s;
    r.z *= s;
    return r;
}

inline double dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm2(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

/// 2D cross product (z-component of the 3D cross of embedded vectors).
inline double cross2(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

/// Counterclockwise perpendicular of a 2D vector.
inline Vec perp2(const Vec& a) { return Vec(-a.y, a.x); }

}  // namespace lh
