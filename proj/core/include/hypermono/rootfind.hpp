#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace hypermono {

/// Bisection on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
/// sign (or zero).  Returns the midpoint of the final bracket of width <= tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              int max_iter = 200);

/// All transversal crossings of f(x) = 0 on [x0, x1] found by a uniform scan
/// of nscan points followed by bisection of each sign change.
std::vector<double> scan_roots(const std::function<double(double)>& f, double x0, double x1,
                               int nscan, double tol);

/// Maximal intervals where lo <= f(x) <= hi, endpoints located by bisection.
std::vector<std::pair<double, double>> band_intervals(const std::function<double(double)>& f,
                                                      double x0, double x1, double lo, double hi,
                                                      int nscan, double tol);

/// Golden-section minimisation of a unimodal function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Coordinate descent with shrinking steps from (u0, v0); each accepted move
/// keeps the step, a full round of rejections halves it, stopping at min_step.
/// Returns (u, v, f(u,v)).
struct DescentResult {
    double u, v, value;
};
DescentResult coordinate_descent(const std::function<double(double, double)>& f, double u0,
                                 double v0, double step, double min_step,
                                 double u_lo, double u_hi, double v_lo, double v_hi,
                                 bool v_periodic = false);

}  // namespace hypermono
