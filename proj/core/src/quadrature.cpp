#include "hypermono/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hypermono {

namespace {

struct Gl15 {
    std::array<double, 15> x;  // nodes on [-1,1]
    std::array<double, 15> w;
};

// Nodes and weights computed once by Newton iteration on P_15; avoids
// transcribing long decimal tables.
Gl15 make_gl15() {
    Gl15 g;
    const int n = 15;
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton on P_15.
        double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(t) and P'_n(t).
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        // Recompute derivative at the converged node for the weight.
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        g.x[i] = t;
        g.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return g;
}

const Gl15& gl15() {
    static const Gl15 g = make_gl15();
    return g;
}

double gl15_panel(const std::function<double(double)>& f, double a, double b) {
    const Gl15& g = gl15();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < 15; ++i) s += g.w[i] * f(mid + half * g.x[i]);
    return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double rel_tol, double abs_tol, int depth, int max_depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl15_panel(f, a, mid);
    const double right = gl15_panel(f, mid, b);
    const double refined = left + right;
    const double err = std::abs(refined - whole);
    if (err <= std::max(abs_tol, rel_tol * std::abs(refined)) || depth >= max_depth)
        return refined;
    return adapt(f, a, mid, left, rel_tol, abs_tol * 0.5, depth + 1, max_depth) +
           adapt(f, mid, b, right, rel_tol, abs_tol * 0.5, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
    if (a == b) return 0.0;
    const double whole = gl15_panel(f, a, b);
    return adapt(f, a, b, whole, opt.rel_tol, opt.abs_tol, 0, opt.max_depth);
}

double integrate_sqrt_left(const std::function<double(double)>& f, double a, double b,
                           const QuadOptions& opt) {
    if (b < a) throw std::invalid_argument("integrate_sqrt_left: b < a");
    if (a == b) return 0.0;
    const double umax = std::sqrt(b - a);
    return integrate([&](double u) { return 2.0 * u * f(a + u * u); }, 0.0, umax, opt);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace hypermono
