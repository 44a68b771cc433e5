#include "hypermono/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypermono {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (flo * fhi > 0) throw std::invalid_argument("bisect: endpoints do not bracket a root");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if (flo * fm < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double x0, double x1,
                               int nscan, double tol) {
    std::vector<double> roots;
    if (nscan < 2) nscan = 2;
    double xa = x0, fa = f(x0);
    for (int i = 1; i <= nscan; ++i) {
        const double xb = x0 + (x1 - x0) * i / nscan;
        const double fb = f(xb);
        if (fa == 0) {
            roots.push_back(xa);
        } else if (fa * fb < 0) {
            roots.push_back(bisect(f, xa, xb, tol));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0) roots.push_back(xa);
    return roots;
}

std::vector<std::pair<double, double>> band_intervals(const std::function<double(double)>& f,
                                                      double x0, double x1, double lo, double hi,
                                                      int nscan, double tol) {
    // Crossing points of both band edges partition [x0, x1]; keep the cells
    // whose midpoint lies in the band.
    std::vector<double> cuts{x0};
    for (double r : scan_roots([&](double x) { return f(x) - lo; }, x0, x1, nscan, tol))
        cuts.push_back(r);
    for (double r : scan_roots([&](double x) { return f(x) - hi; }, x0, x1, nscan, tol))
        cuts.push_back(r);
    cuts.push_back(x1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b - a <= 0) continue;
        const double fm = f(0.5 * (a + b));
        if (fm >= lo && fm <= hi) {
            if (!out.empty() && out.back().second == a)
                out.back().second = b;  // merge touching cells
            else
                out.emplace_back(a, b);
        }
    }
    return out;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

DescentResult coordinate_descent(const std::function<double(double, double)>& f, double u0,
                                 double v0, double step, double min_step, double u_lo,
                                 double u_hi, double v_lo, double v_hi, bool v_periodic) {
    auto clamp_u = [&](double u) { return std::min(u_hi, std::max(u_lo, u)); };
    auto wrap_v = [&](double v) {
        if (!v_periodic) return std::min(v_hi, std::max(v_lo, v));
        const double span = v_hi - v_lo;
        while (v < v_lo) v += span;
        while (v >= v_hi) v -= span;
        return v;
    };
    double u = clamp_u(u0), v = wrap_v(v0);
    double best = f(u, v);
    while (step > min_step) {
        bool improved = false;
        const double cand_u[2] = {clamp_u(u + step), clamp_u(u - step)};
        for (double cu : cand_u) {
            const double val = f(cu, v);
            if (val < best) {
                best = val;
                u = cu;
                improved = true;
            }
        }
        const double cand_v[2] = {wrap_v(v + step), wrap_v(v - step)};
        for (double cv : cand_v) {
            const double val = f(u, cv);
            if (val < best) {
                best = val;
                v = cv;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return {u, v, best};
}

}  // namespace hypermono
