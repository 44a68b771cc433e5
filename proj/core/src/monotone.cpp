#include "hypermono/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hypermono/parallel.hpp"
#include "hypermono/rootfind.hpp"

namespace hypermono {

std::string MonotonicityVerdict::describe() const {
    std::ostringstream os;
    switch (status) {
        case Status::NonDecreasing: os << "NonDecreasing"; break;
        case Status::NonIncreasing: os << "NonIncreasing"; break;
        case Status::NonMonotone:
            os << "NonMonotone";
            if (witness) os << " witness (" << witness->first << ", " << witness->second << ")";
            break;
    }
    return os.str();
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (lo <= 0 || hi <= lo || n < 2) throw std::invalid_argument("geometric_grid: bad range");
    std::vector<double> g(n);
    const double q = std::log(hi / lo);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(q * i / (n - 1));
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (hi <= lo || n < 2) throw std::invalid_argument("linear_grid: bad range");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    g.back() = hi;
    return g;
}

DensityCurve density_curve(const Surface& s, const CoordFn& f, const Weight& w, int k,
                           const std::vector<double>& t_grid, const SliceOptions& opt) {
    DensityCurve curve{f, w, k, {}, 0};
    const auto qs = tube_volume_grid(w, f, k, t_grid);
    const auto as = slice_volume_grid(s, f, w, t_grid, opt);
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (qs[i] <= 0) {
            ++curve.dropped;
            continue;
        }
        curve.samples.push_back({t_grid[i], as[i], qs[i], as[i] / qs[i]});
    }
    return curve;
}

MonotonicityVerdict verdict(const DensityCurve& curve, double tol) {
    if (curve.samples.size() < 2)
        throw std::invalid_argument("verdict: need at least 2 samples");
    MonotonicityVerdict v;
    double min_inc = 1e300, max_inc = -1e300;
    double worst_drop = -1e300;
    std::pair<double, double> worst{0, 0};
    for (size_t i = 0; i + 1 < curve.samples.size(); ++i) {
        const double inc = curve.samples[i + 1].theta - curve.samples[i].theta;
        min_inc = std::min(min_inc, inc);
        max_inc = std::max(max_inc, inc);
        if (-inc > worst_drop) {
            worst_drop = -inc;
            worst = {curve.samples[i].t, curve.samples[i + 1].t};
        }
    }
    v.slack = min_inc;
    v.non_decreasing = min_inc >= -tol;
    v.non_increasing = max_inc <= tol;
    if (v.non_decreasing) {
        v.status = MonotonicityVerdict::Status::NonDecreasing;
    } else if (v.non_increasing) {
        v.status = MonotonicityVerdict::Status::NonIncreasing;
    } else {
        v.status = MonotonicityVerdict::Status::NonMonotone;
        v.witness = worst;
    }
    return v;
}

double min_coord(const Surface& s, const CoordFn& f) {
    double best = 1e300;
    for (const auto& ch : s.charts) {
        const int G = 256;
        double bu = ch.u0, bv = ch.v0;
        for (int i = 0; i <= G; ++i)
            for (int j = 0; j <= G; ++j) {
                const double u = ch.u0 + (ch.u1 - ch.u0) * i / G;
                const double v = ch.v0 + (ch.v1 - ch.v0) * j / G;
                const double h = chart_coord(s, ch, f, u, v);
                if (h < best) {
                    best = h;
                    bu = u;
                    bv = v;
                }
            }
        const double step = std::max(ch.u1 - ch.u0, ch.v1 - ch.v0) / G;
        const auto res = coordinate_descent(
            [&](double u, double v) { return chart_coord(s, ch, f, u, v); }, bu, bv, step,
            1e-10, ch.u0, ch.u1, ch.v0, ch.v1, ch.v_periodic);
        best = std::min(best, res.value);
    }
    return best;
}

MonotonicityVerdict theorem_1_check(const Surface& s, const CoordFn& f, double a,
                                    const std::vector<double>& t_grid, double tol,
                                    const SliceOptions& opt) {
    if (f.spherical())
        throw std::invalid_argument("theorem_1_check: Minkowskian coordinate required");
    const double m = min_coord(s, f);
    if (a <= 0) a = m;
    const double floor = f.kind() == CoordFn::Kind::Time ? 1.0 : 0.0;
    if (a < floor || a > m + 1e-9) {
        std::ostringstream os;
        os << "theorem_1_check: a = " << a << " outside the admissible interval ["
           << floor << ", " << m << "] (upper end = min of the coordinate on the surface)";
        throw std::domain_error(os.str());
    }
    const Weight w = Weight::uniform(a, 1.0 / a);
    DensityCurve curve = density_curve(s, f, w, s.k, t_grid, opt);
    return verdict(curve, tol);
}

DensityComparison compare_densities(const Surface& s, const CoordFn& f, const Weight& w1,
                                    const Weight& w2, int k, const std::vector<double>& t_grid,
                                    const SliceOptions& opt) {
    DensityComparison cmp{density_curve(s, f, w1, k, t_grid, opt),
                          density_curve(s, f, w2, k, t_grid, opt),
                          {}, {}, 0.0};
    cmp.first_verdict = verdict(cmp.first);
    cmp.second_verdict = verdict(cmp.second);
    const size_t n = std::min(cmp.first.samples.size(), cmp.second.samples.size());
    double excess = -1e300;
    for (size_t i = 0; i < n; ++i)
        excess = std::max(excess,
                          cmp.first.samples[i].theta - cmp.second.samples[i].theta);
    cmp.max_excess = excess;
    return cmp;
}

double tube_bound_check(const Surface& s, const CoordFn& f, const Weight& w, double h1,
                        const SliceOptions& opt) {
    const LevelSlice rim = boundary_slice(s, f, h1, opt);
    if (rim.length_gtilde <= 0)
        throw std::domain_error("tube_bound_check: boundary not found in the level set h1");
    const double tube = rim.length_gtilde / unit_sphere_volume(s.k - 1) *
                        tube_volume(w, f, s.k, h1);
    const double surf = slice_volume(s, f, w, h1, opt);
    return tube - surf;
}

}  // namespace hypermono
