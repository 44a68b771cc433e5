#include "hypermono/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypermono {

bool on_hyperboloid(const HPoint& p, double tol) {
    return std::abs(mdot(p.xi, p.xi) + 1.0) <= tol && p.xi[0] > 0;
}

bool on_sphere(const SPoint& p, double tol) {
    return std::abs(dot(p.x, p.x) - 1.0) <= tol;
}

HPoint ball_to_hyperboloid(const Vec& p) {
    const double r2 = dot(p, p);
    if (r2 >= 1.0) throw std::domain_error("ball_to_hyperboloid: |p| >= 1");
    const double f = 1.0 / (1.0 - r2);
    HPoint x;
    x.xi = Vec::zero(p.dim + 1);
    x.xi[0] = (1.0 + r2) * f;
    for (int i = 0; i < p.dim; ++i) x.xi[i + 1] = 2.0 * p[i] * f;
    return x;
}

Vec hyperboloid_to_ball(const HPoint& x) {
    Vec p = Vec::zero(x.n());
    const double f = 1.0 / (1.0 + x.xi[0]);
    for (int i = 0; i < p.dim; ++i) p[i] = x.xi[i + 1] * f;
    return p;
}

HalfSpacePoint hyperboloid_to_halfspace(const HPoint& p, const Vec& b) {
    // Rotate b to the last spatial axis, then x = 1/(xi_0 - xi_n),
    // y_i = xi_i * x for the remaining axes.  We avoid building the rotation:
    // split the spatial part into the b-component and the orthogonal rest.
    const int n = p.n();
    if (b.dim != n) throw std::invalid_argument("halfspace: b dimension mismatch");
    Vec spatial = Vec::zero(n);
    for (int i = 0; i < n; ++i) spatial[i] = p.xi[i + 1];
    const double along = dot(spatial, b);
    const double denom = p.xi[0] - along;
    if (denom <= 0) throw std::domain_error("halfspace: point at or beyond the ideal point b");
    HalfSpacePoint h;
    h.height = 1.0 / denom;
    Vec rest = spatial - along * b;
    // Orthonormal basis of b-perp, built by Gram-Schmidt over the axes.
    h.horizontal = Vec::zero(n - 1);
    int out = 0;
    Vec used[4];
    for (int i = 0; i < n && out < n - 1; ++i) {
        Vec e = Vec::basis(n, i);
        Vec u = e - dot(e, b) * b;
        for (int j = 0; j < out; ++j) u = u - dot(u, used[j]) * used[j];
        const double nu = norm(u);
        if (nu < 1e-9) continue;
        u = u * (1.0 / nu);
        used[out] = u;
        h.horizontal[out++] = dot(rest, u) * h.height;
    }
    return h;
}

double distance(const HPoint& p, const HPoint& q) {
    if (p.xi.dim != q.xi.dim) throw std::invalid_argument("distance: dimension mismatch");
    const double c = -mdot(p.xi, q.xi);
    return std::acosh(std::max(1.0, c));
}

double distance(const SPoint& p, const SPoint& q) {
    if (p.x.dim != q.x.dim) throw std::invalid_argument("distance: dimension mismatch");
    const double c = dot(p.x, q.x);
    return std::acos(std::min(1.0, std::max(-1.0, c)));
}

CoordFn CoordFn::time_at(const HPoint& center) {
    if (!on_hyperboloid(center, 1e-9))
        throw std::invalid_argument("CoordFn::time_at: center not on the hyperboloid");
    CoordFn f;
    f.kind_ = Kind::Time;
    f.n_ = center.n();
    f.center_ = center;
    return f;
}

CoordFn CoordFn::time_at_ball_origin(int n) {
    HPoint o;
    o.xi = Vec::basis(n + 1, 0);
    return time_at(o);
}

CoordFn CoordFn::space(const Vec& w) {
    CoordFn f;
    f.kind_ = Kind::Space;
    f.n_ = w.dim - 1;
    Vec ww = w;
    const double q = mdot(w, w);
    if (q <= 0) throw std::invalid_argument("CoordFn::space: covector not spacelike");
    if (std::abs(q - 1.0) > 1e-12) ww = ww * (1.0 / std::sqrt(q));
    f.w_ = ww;
    return f;
}

CoordFn CoordFn::space_cap(const Vec& q_hat, double zeta) {
    if (zeta <= 0) throw std::invalid_argument("CoordFn::space_cap: zeta must be positive");
    const int n = q_hat.dim;
    Vec w = Vec::zero(n + 1);
    w[0] = -std::sinh(zeta);
    const double c = std::cosh(zeta) / norm(q_hat);
    for (int i = 0; i < n; ++i) w[i + 1] = -c * q_hat[i];
    return space(w);
}

CoordFn CoordFn::null_at(const Vec& b, double lambda) {
    if (lambda <= 0) throw std::invalid_argument("CoordFn::null_at: lambda must be positive");
    CoordFn f;
    f.kind_ = Kind::Null;
    f.n_ = b.dim;
    f.b_ = b * (1.0 / norm(b));
    f.lambda_ = lambda;
    return f;
}

CoordFn CoordFn::sphere_height(const SPoint& pole) {
    if (!on_sphere(pole, 1e-9))
        throw std::invalid_argument("CoordFn::sphere_height: pole not on the sphere");
    CoordFn f;
    f.kind_ = Kind::SphereHeight;
    f.n_ = pole.n();
    f.pole_ = pole;
    return f;
}

int CoordFn::delta() const {
    switch (kind_) {
        case Kind::Time: return -1;
        case Kind::Space: return +1;
        case Kind::Null: return 0;
        default: throw std::logic_error("delta: not a Minkowskian coordinate");
    }
}

double CoordFn::value(const HPoint& p) const {
    if (kind_ == Kind::SphereHeight)
        throw std::invalid_argument("coord_value: spherical coordinate applied to H^n point");
    if (p.n() != n_) throw std::invalid_argument("coord_value: dimension mismatch");
    switch (kind_) {
        case Kind::Time:
            return -mdot(center_.xi, p.xi);
        case Kind::Space:
            return mdot(w_, p.xi);
        case Kind::Null: {
            double s = p.xi[0];
            for (int i = 0; i < n_; ++i) s -= b_[i] * p.xi[i + 1];
            return lambda_ * s;
        }
        default: return 0;
    }
}

double CoordFn::value(const SPoint& p) const {
    if (kind_ != Kind::SphereHeight)
        throw std::invalid_argument("coord_value: Minkowskian coordinate applied to S^n point");
    if (p.n() != n_) throw std::invalid_argument("coord_value: dimension mismatch");
    return 1.0 - dot(p.x, pole_.x);
}

double CoordFn::U(double h) const {
    check_level(h);
    return kind_ == Kind::SphereHeight ? 1.0 - h : h;
}

double CoordFn::V(double h) const {
    check_level(h);
    switch (kind_) {
        case Kind::Time: return h * h - 1.0;
        case Kind::Space: return h * h + 1.0;
        case Kind::Null: return h * h;
        case Kind::SphereHeight: return 2.0 * h - h * h;
    }
    return 0;
}

void CoordFn::check_level(double h) const {
    switch (kind_) {
        case Kind::Time:
            if (h < 1.0) throw std::domain_error("warp_data: time coordinate has h >= 1");
            break;
        case Kind::Null:
            if (h <= 0.0) throw std::domain_error("warp_data: null coordinate has h > 0");
            break;
        case Kind::SphereHeight:
            if (h < 0.0 || h > 2.0) throw std::domain_error("warp_data: sphere height has h in [0,2]");
            break;
        case Kind::Space:
            break;
    }
}

double CoordFn::level_floor() const {
    switch (kind_) {
        case Kind::Time: return 1.0;
        case Kind::Null: return 0.0;
        case Kind::SphereHeight: return 0.0;
        case Kind::Space: return -std::numeric_limits<double>::infinity();
    }
    return 0;
}

double CoordFn::ideal_boundary_factor(const Vec& nu) const {
    switch (kind_) {
        case Kind::Time: {
            Vec o = hyperboloid_to_ball(center_);
            Vec d = nu - o;
            return 2.0 * dot(d, d) / (1.0 - dot(o, o));
        }
        case Kind::Space: {
            double s = -w_[0];
            for (int i = 0; i < n_; ++i) s += w_[i + 1] * nu[i];
            return 2.0 * s;
        }
        case Kind::Null: {
            Vec d = nu - b_;
            return lambda_ * dot(d, d);
        }
        default:
            throw std::logic_error("ideal_boundary_factor: not defined on S^n");
    }
}

Vec CoordFn::gradient_vec() const {
    switch (kind_) {
        case Kind::Time:
            return center_.xi * -1.0;
        case Kind::Space:
            return w_;
        case Kind::Null: {
            Vec g = Vec::zero(n_ + 1);
            g[0] = -lambda_;
            for (int i = 0; i < n_; ++i) g[i + 1] = -lambda_ * b_[i];
            return g;
        }
        default:
            throw std::logic_error("gradient_vec: not a Minkowskian coordinate");
    }
}

std::string CoordFn::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Time: os << "time"; break;
        case Kind::Space: os << "space"; break;
        case Kind::Null: os << "null"; break;
        case Kind::SphereHeight: os << "sphere"; break;
    }
    return os.str();
}

double unit_sphere_volume(int k) {
    if (k < 0) throw std::invalid_argument("unit_sphere_volume: k >= 0");
    if (k == 0) return 2.0;
    if (k == 1) return 2.0 * pi;
    return 2.0 * pi / (k - 1) * unit_sphere_volume(k - 2);
}

}  // namespace hypermono
