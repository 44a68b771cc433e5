#pragma once

#include <vector>

#include "hypermono/ode.hpp"

namespace hypermono {

/// Radially conformally flat ambient g = e^{2 phi(rho)} g_E on the profile
/// plane, rho = r^2: the Poincare ball (hyperbolic), the round sphere via
/// stereographic coordinates, or the plane itself.
enum class ProfileAmbient { Hyperbolic, Spherical, Euclidean };

double conformal_factor(ProfileAmbient amb, double rho);  // e^{2 phi}

/// Rotationally swept minimal-annulus profile: the planar curve satisfying
/// sin(psi) = C e^{-2 phi(rho)} / rho, where psi is the angle between the
/// tangent and the radial direction.  Integrated in arclength as
///   dr/ds = cos(psi),  d(alpha)/ds = sin(psi)/r,  d(psi)/ds = S'(r),
/// which is regular through the waist psi = pi/2.
struct ProfileSample {
    double s, r, alpha, psi;
};

struct ProfileCurve {
    double C = 0;
    ProfileAmbient ambient = ProfileAmbient::Hyperbolic;
    std::vector<ProfileSample> samples;  // ordered by s; waist at s = 0, psi = pi/2 exactly
    double waist_r = 0;

    Trajectory forward;   // s >= 0
    Trajectory backward;  // s <= 0 (empty for Spherical)

    /// Dense state (r, alpha, psi) at arclength s.
    State3 eval(double s) const;
    double s_min() const { return samples.front().s; }
    double s_max() const { return samples.back().s; }
};

struct ProfileOptions {
    double ode_tol = 1e-11;      // local truncation error per unit arclength
    double ball_cap = 1e-6;      // hyperbolic: stop at r = 1 - ball_cap
    double r_max = 8.0;          // euclidean stop radius
};

/// Preconditions: C > 0, and C < 1 in the spherical ambient.  Hyperbolic and
/// Euclidean curves extend from the waist outward in both branches; the
/// spherical curve covers one period, inner waist to outer waist.
ProfileCurve integrate_profile(double C, ProfileAmbient amb, const ProfileOptions& opt = {});

/// Total polar angle swept over one period of a spherical profile; lies in
/// (pi/2, pi/sqrt(2)).
double sweep_angle(const ProfileCurve& p);

/// Waist radius in the planar coordinate (closed form per ambient).
double profile_waist_r(double C, ProfileAmbient amb);

/// xi_0 = (1+rho)/(1-rho) of a hyperbolic-plane point at planar radius r.
double xi0_of_r(double r);

}  // namespace hypermono
