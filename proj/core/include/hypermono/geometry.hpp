#pragma once

#include <optional>
#include <string>

#include "hypermono/vec.hpp"

namespace hypermono {

/// Point on the hyperboloid model of H^n: xi_0^2 - sum xi_i^2 = 1, xi_0 > 0.
/// n+1 Minkowskian coordinates with signature (-,+,...,+).
struct HPoint {
    Vec xi;  // dim = n+1
    int n() const { return xi.dim - 1; }
};

/// Point on the unit sphere S^n in R^{n+1}.
struct SPoint {
    Vec x;  // dim = n+1
    int n() const { return x.dim - 1; }
};

bool on_hyperboloid(const HPoint& p, double tol = 1e-12);
bool on_sphere(const SPoint& p, double tol = 1e-12);

/// Hyperboloid <-> Poincare ball.  Ball points are Euclidean vectors |p| < 1
/// of dimension n.
HPoint ball_to_hyperboloid(const Vec& p);
Vec hyperboloid_to_ball(const HPoint& x);

/// Half-space view with ideal point b mapped to infinity.  Returns the height
/// coordinate x > 0 and the n-1 horizontal coordinates.  b is a unit vector in
/// the ball model.
struct HalfSpacePoint {
    double height;
    Vec horizontal;  // dim = n-1
};
HalfSpacePoint hyperboloid_to_halfspace(const HPoint& p, const Vec& b);

double distance(const HPoint& p, const HPoint& q);
double distance(const SPoint& p, const SPoint& q);

/// A coordinate/warping function h with Hess h = U(h) g and V(h) = |dh|^2.
///
/// The three Minkowskian kinds are linear functionals of the hyperboloid,
/// h(X) = <g_vec, X> (Minkowski pairing), classified by the causal type of
/// their differential: Time (delta = -1), Space (+1), Null (0).  SphereHeight
/// is h = 1 - <x, pole> on S^n.
class CoordFn {
  public:
    enum class Kind { Time, Space, Null, SphereHeight };

    static CoordFn time_at(const HPoint& center);
    static CoordFn time_at_ball_origin(int n);
    /// Unit spacelike covector w; h = <w, X> = sinh(signed distance to the
    /// hyperplane {h = 0}).
    static CoordFn space(const Vec& w);
    /// Hyperplane whose ideal boundary is the sphere of radius sigma,
    /// cos(sigma) = tanh(zeta), around the ideal point q_hat; the ball origin
    /// lies on the positive side at distance zeta.
    static CoordFn space_cap(const Vec& q_hat, double zeta);
    /// Null coordinate of the ideal point b (unit vector, ball model); equals
    /// lambda / height in the associated half-space model.
    static CoordFn null_at(const Vec& b, double lambda = 1.0);
    static CoordFn sphere_height(const SPoint& pole);

    Kind kind() const { return kind_; }
    int ambient_n() const { return n_; }
    bool spherical() const { return kind_ == Kind::SphereHeight; }
    /// Causal type delta in {-1,0,+1}; only defined for Minkowskian kinds.
    int delta() const;

    double value(const HPoint& p) const;
    double value(const SPoint& p) const;

    /// Warp data (U, V) at level h; U = (1/2) dV/dh always.
    double U(double h) const;
    double V(double h) const;
    void check_level(double h) const;  // throws std::domain_error outside range

    /// Smallest admissible level (1 for Time, 0 for Null/SphereHeight,
    /// -inf for Space).
    double level_floor() const;

    /// B(nu) = lim_{p->nu} (1-|p|^2) h(p) along ball radii; the conformal
    /// infinity metric is lim h^{-2} g_H = (2/B)^2 g_E on S_infty.
    double ideal_boundary_factor(const Vec& nu) const;

    /// The constant vector g with h(X) = <g, X> (Minkowski pairing); the
    /// ambient gradient of h at X is g + h(X) X, and gradient flowlines are
    /// X(h) = mu(h) X_0 + nu(h) g.  Minkowskian kinds only.
    Vec gradient_vec() const;

    const Vec& null_direction() const { return b_; }
    double null_scale() const { return lambda_; }
    const HPoint& time_center() const { return center_; }
    const SPoint& pole() const { return pole_; }
    const Vec& space_covector() const { return w_; }

    std::string describe() const;

  private:
    CoordFn() = default;
    Kind kind_ = Kind::Time;
    int n_ = 0;
    HPoint center_;  // Time
    Vec w_;          // Space covector, dim n+1
    Vec b_;          // Null ideal direction, dim n
    double lambda_ = 1.0;
    SPoint pole_;  // SphereHeight
};

/// Volume of the unit k-sphere, omega_0 = 2, omega_1 = 2*pi, via the
/// recurrence omega_k = 2*pi/(k-1) * omega_{k-2}.
double unit_sphere_volume(int k);

}  // namespace hypermono
