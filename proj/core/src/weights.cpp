#include "hypermono/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "hypermono/quadrature.hpp"

namespace hypermono {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : x_(std::move(xs)), y_(std::move(ys)) {
    const size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("MonotoneCubic: need matching grids of size >= 2");
    std::vector<double> d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        if (x_[i + 1] <= x_[i]) throw std::invalid_argument("MonotoneCubic: grid not increasing");
        d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    }
    m_.assign(n, 0.0);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i)
        m_[i] = (d[i - 1] * d[i] > 0) ? 2.0 / (1.0 / d[i - 1] + 1.0 / d[i]) : 0.0;
    // Fritsch-Carlson limiter.
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0) {
            m_[i] = m_[i + 1] = 0;
            continue;
        }
        const double a = m_[i] / d[i], b = m_[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            m_[i] = tau * a * d[i];
            m_[i + 1] = tau * b * d[i];
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    const size_t n = x_.size();
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    size_t lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (x_[mid] <= x ? lo : hi) = mid;
    }
    const double h = x_[lo + 1] - x_[lo];
    const double t = (x - x_[lo]) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * y_[lo] + h10 * h * m_[lo] + h01 * y_[lo + 1] + h11 * h * m_[lo + 1];
}

Weight Weight::tabulated(std::vector<double> hs, std::vector<double> ps, double h0, double c) {
    Weight w;
    w.kind = Kind::Tabulated;
    w.c = c;
    w.h0 = h0;
    w.table = MonotoneCubic(std::move(hs), std::move(ps));
    return w;
}

double Weight::P(double h, const CoordFn& f, int k) const {
    switch (kind) {
        case Kind::Natural: return f.U(h);
        case Kind::Uniform: return 1.0;
        case Kind::PowOnePlusH: return std::pow(1.0 + h, -k);
        case Kind::PowH: return std::pow(h, -k);
        case Kind::PowHExtra: return std::pow(h, -k - 1);
        case Kind::Tabulated: return table(h);
    }
    return 0;
}

std::string Weight::describe() const {
    switch (kind) {
        case Kind::Natural: return "natural";
        case Kind::Uniform: return "uniform";
        case Kind::PowOnePlusH: return "pow-(1+h)";
        case Kind::PowH: return "pow-h";
        case Kind::PowHExtra: return "pow-h-extra";
        case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

namespace {

// int_{a}^{b} P(h) V(h)^{k/2-1} dh with the integrable endpoint singularity at
// a critical level V(a) = 0 removed by h = a + u^2 when the exponent is
// negative (k = 1).
double weighted_band(const Weight& w, const CoordFn& f, int k, double a, double b) {
    if (b <= a) return 0.0;
    const double expo = 0.5 * k - 1.0;
    auto integrand = [&](double h) { return w.P(h, f, k) * std::pow(f.V(h), expo); };
    QuadOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-300;
    if (expo < 0 && f.V(a) <= 1e-14) {
        const double split = std::min(b, a + 1.0);
        double s = integrate_sqrt_left(integrand, a, split, opt);
        if (split < b) s += integrate(integrand, split, b, opt);
        return s;
    }
    return integrate(integrand, a, b, opt);
}

}  // namespace

double tube_volume(const Weight& w, const CoordFn& f, int k, double t) {
    if (k < 1) throw std::invalid_argument("tube_volume: k >= 1");
    if (t < w.h0) throw std::domain_error("tube_volume: t < h0");
    const double boundary = w.c / k * std::pow(f.V(w.h0), 0.5 * k);
    return unit_sphere_volume(k - 1) * (weighted_band(w, f, k, w.h0, t) + boundary);
}

std::vector<double> tube_volume_grid(const Weight& w, const CoordFn& f, int k,
                                     const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    const double omega = unit_sphere_volume(k - 1);
    const double boundary = w.c / k * std::pow(f.V(w.h0), 0.5 * k);
    double acc = 0.0;
    double prev = w.h0;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < prev) throw std::invalid_argument("tube_volume_grid: grid not increasing");
        acc += weighted_band(w, f, k, prev, ts[i]);
        prev = ts[i];
        out[i] = omega * (acc + boundary);
    }
    return out;
}

double q_delta(double a, double t, int k, int delta) {
    if (delta < -1 || delta > 1) throw std::domain_error("q_delta: delta must be -1, 0 or +1");
    if (a <= 0 || a > t) throw std::domain_error("q_delta: need 0 < a <= t");
    if (delta == -1 && a < 1) throw std::domain_error("q_delta: need a >= 1 when delta = -1");
    const double expo = 0.5 * k - 1.0;
    auto integrand = [&](double s) { return std::pow(s * s + delta, expo); };
    QuadOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-300;
    double integral;
    if (expo < 0 && delta == -1 && a <= 1.0 + 1e-14) {
        integral = integrate_sqrt_left(integrand, a, t, opt);
    } else {
        integral = integrate(integrand, a, t, opt);
    }
    return integral + std::pow(a * a + delta, 0.5 * k) / (k * a);
}

WeakerVerdict is_weaker(const Weight& w1, const Weight& w2, const CoordFn& f, int k,
                        double t_lo, double t_hi, int grid) {
    if (w1.h0 != w2.h0) throw std::invalid_argument("is_weaker: weights must share h0");
    if (grid < 2) grid = 2;
    const auto ts = [&] {
        std::vector<double> v(grid);
        for (int i = 0; i < grid; ++i) v[i] = t_lo + (t_hi - t_lo) * i / (grid - 1);
        return v;
    }();
    const auto q1 = tube_volume_grid(w1, f, k, ts);
    const auto q2 = tube_volume_grid(w2, f, k, ts);
    for (int i = 0; i < grid; ++i) {
        const double t = ts[i];
        if (t == w1.h0) continue;  // both tubes empty, comparison vacuous
        if (q1[i] <= 0 || q2[i] <= 0)
            throw std::domain_error("is_weaker: degenerate interval, tube volume vanishes");
        const double r1 = w1.P(t, f, k) / q1[i];
        const double r2 = w2.P(t, f, k) / q2[i];
        if (r1 > r2 + 1e-12) return {false, t};
    }
    return {true, std::nullopt};
}

std::vector<Weight> chain_weights() {
    return {Weight::natural(1.0), Weight::uniform(1.0), Weight::pow_one_plus_h(1.0),
            Weight::pow_h(1.0), Weight::pow_h_extra(1.0)};
}

std::vector<WeakerVerdict> chain_check(const CoordFn& f, int k, double t_lo, double t_hi,
                                       int grid) {
    if (t_lo <= 1.0) throw std::domain_error("chain_check: interval must lie in (1, inf)");
    const auto ws = chain_weights();
    std::vector<WeakerVerdict> out;
    for (size_t i = 0; i + 1 < ws.size(); ++i)
        out.push_back(is_weaker(ws[i + 1], ws[i], f, k, t_lo, t_hi, grid));
    return out;
}

CompensatedPair compensated_weights(const CoordFn& f, double h0) {
    if (f.spherical()) {
        if (h0 <= 0 || h0 >= 1)
            throw std::domain_error("compensated_weights: sphere needs h0 in (0,1)");
        return {Weight::natural(h0), Weight::uniform(h0, 1.0 / (1.0 - h0)),
                CompensatedOrder::NaturalWeaker};
    }
    if (h0 <= 0) throw std::domain_error("compensated_weights: need h0 > 0");
    return {Weight::natural(h0), Weight::uniform(h0, 1.0 / h0),
            CompensatedOrder::CompensatedWeaker};
}

}  // namespace hypermono
