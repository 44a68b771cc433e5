#pragma once

#include <functional>

namespace hypermono {

/// Adaptive composite Gauss-Legendre quadrature, 15-point panels refined by
/// bisection.  A panel is accepted when its bisected estimate agrees with the
/// whole-panel estimate to max(abs_tol, rel_tol * |integral estimate|) scaled
/// by the panel's share of the interval.  Integrands are assumed smooth away
/// from at most finitely many integrable kinks.
struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;   // absolute floor, useful when the integral may be 0
    int max_depth = 40;
};

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

/// Integral with an integrable (x-a)^{-1/2}-type singularity at the left
/// endpoint, computed with the substitution x = a + u^2.
double integrate_sqrt_left(const std::function<double(double)>& f, double a, double b,
                           const QuadOptions& opt = {});

/// Non-adaptive n-panel composite Simpson rule (used by oracles and cheap
/// pre-scans, not by the tolerance-bearing paths).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace hypermono
