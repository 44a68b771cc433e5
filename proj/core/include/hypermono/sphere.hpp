#pragma once

#include <vector>

#include "hypermono/surfaces.hpp"
#include "hypermono/table.hpp"

namespace hypermono {

/// Antipodalness threshold: the unique solution eps in [0, pi/2) of
///   int_eps^{pi/2} sin^{k-1} t dt + (1-cos^2 eps)^{k/2} / (k cos eps)
///     = omega_{k-1}^{-1} (A/m - omega_k / 2),
/// defined for A/m >= omega_k, solved by bisection to 1e-12.  For k = 2 the
/// equation collapses to cos(eps) + 1/cos(eps) = A/(m pi) - 2.
struct EpsQuery {
    double A;
    int k = 2;
    double m = 1.0;  // multiplicity
};
double epsilon_of_area(const EpsQuery& q);

/// Closed-form k = 2 solution (root of the quadratic in cos eps).
double epsilon_of_area_k2_closed_form(double A, double m = 1.0);

/// Smallest eps such that every point's antipode lies within distance eps of
/// the surface: sup over sampled p of dist(-p, Sigma), two-stage coarse grid
/// plus coordinate-descent refinement.
double antipodal_epsilon(const Surface& s, int coarse_grid = 128);

struct AntipodalCheck {
    double area;
    double eps_measured;
    double eps_bound;
    bool pass;
};
AntipodalCheck check_antipodal_bound(const Surface& s, double m = 1.0);

/// (k-1)-volume of an ideal curve under the round metric g_O of the interior
/// point O, with the hull membership verdict value >= omega_{k-1}.
struct VisualHullValue {
    double value;
    bool in_hull;
};
VisualHullValue visual_hull_value(const std::vector<IdealCurve>& gammas, const HPoint& O, int k);

/// Lower volume bound m * omega_{k-1} int_0^r sin^{k-1} t dt for the ball of
/// radius r (<= pi/2) around a point of multiplicity m.
double cly_bound(double r, int k, double m);

/// Figure-3 style sweep of epsilon(A,2) over [A_lo, A_hi] with the Veronese
/// datum in a comment row.
Table fig3_data(double A_lo, double A_hi, int n);

}  // namespace hypermono
