#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace hypermono {

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Small fixed-capacity vector for ambient coordinates.  The toolkit works in
/// H^n and S^n with 2 <= n <= 4, so at most 5 coordinates are ever needed.
struct Vec {
    std::array<double, 5> a{};
    int dim = 0;

    Vec() = default;
    Vec(std::initializer_list<double> xs) {
        if (xs.size() > 5) throw std::invalid_argument("Vec: too many entries");
        dim = static_cast<int>(xs.size());
        int i = 0;
        for (double x : xs) a[i++] = x;
    }
    static Vec zero(int n) {
        Vec v;
        v.dim = n;
        return v;
    }
    static Vec basis(int n, int i) {
        Vec v = zero(n);
        v.a[i] = 1.0;
        return v;
    }

    double operator[](int i) const { return a[i]; }
    double& operator[](int i) { return a[i]; }

    Vec operator+(const Vec& o) const {
        Vec r = *this;
        for (int i = 0; i < dim; ++i) r.a[i] += o.a[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r = *this;
        for (int i = 0; i < dim; ++i) r.a[i] -= o.a[i];
        return r;
    }
    Vec operator*(double c) const {
        Vec r = *this;
        for (int i = 0; i < dim; ++i) r.a[i] *= c;
        return r;
    }
};

inline Vec operator*(double c, const Vec& v) { return v * c; }

/// Euclidean inner product.
inline double dot(const Vec& u, const Vec& v) {
    double s = 0;
    for (int i = 0; i < u.dim; ++i) s += u.a[i] * v.a[i];
    return s;
}

/// Minkowski inner product with signature (-,+,...,+); slot 0 is timelike.
inline double mdot(const Vec& u, const Vec& v) {
    double s = -u.a[0] * v.a[0];
    for (int i = 1; i < u.dim; ++i) s += u.a[i] * v.a[i];
    return s;
}

inline double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

}  // namespace hypermono
