#include "hypermono/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermono/parallel.hpp"
#include "hypermono/quadrature.hpp"
#include "hypermono/rootfind.hpp"

namespace hypermono {

namespace {

// Left side of the defining equation, strictly increasing on [0, pi/2).
double eps_equation_lhs(double eps, int k) {
    QuadOptions opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 1e-16;
    const double tail = integrate([k](double t) { return std::pow(std::sin(t), k - 1); }, eps,
                                  0.5 * pi, opt);
    const double ce = std::cos(eps), se2 = 1.0 - ce * ce;
    return tail + std::pow(se2, 0.5 * k) / (k * ce);
}

}  // namespace

double epsilon_of_area(const EpsQuery& q) {
    if (q.k < 1) throw std::invalid_argument("epsilon_of_area: k >= 1");
    if (q.m < 1) throw std::invalid_argument("epsilon_of_area: m >= 1");
    const double omega_k = unit_sphere_volume(q.k);
    const double ratio = q.A / q.m;
    if (ratio < omega_k * (1.0 - 1e-14))
        throw std::domain_error("epsilon_of_area: no solution, A/m below the k-sphere volume");
    const double rhs = (ratio - 0.5 * omega_k) / unit_sphere_volume(q.k - 1);
    auto g = [&](double eps) { return eps_equation_lhs(eps, q.k) - rhs; };
    if (g(0.0) >= 0.0) return 0.0;
    // Bracket from the right; the left side diverges as eps -> pi/2.
    double hi = 0.5 * pi - 1e-9;
    while (g(hi) < 0) hi = 0.5 * (hi + 0.5 * pi);
    return bisect(g, 0.0, hi, 1e-12);
}

double epsilon_of_area_k2_closed_form(double A, double m) {
    const double rhs = A / (m * pi) - 2.0;
    if (rhs < 2.0 - 1e-14)
        throw std::domain_error("epsilon_of_area: no solution, A/m below 4 pi");
    // cos(eps) + 1/cos(eps) = rhs, root in (0, 1].
    const double c = 0.5 * (rhs - std::sqrt(std::max(0.0, rhs * rhs - 4.0)));
    return std::acos(std::min(1.0, c));
}

namespace {

struct CloudPoint {
    Vec x;
    const Chart* chart;
    double u, v;
};

std::vector<CloudPoint> sample_cloud(const Surface& s, int grid) {
    std::vector<CloudPoint> cloud;
    for (const auto& ch : s.charts) {
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j < grid; ++j) {
                const double u = ch.u0 + (ch.u1 - ch.u0) * i / grid;
                const double v = ch.v0 + (ch.v1 - ch.v0) * j / grid;
                cloud.push_back({ch.embed(u, v), &ch, u, v});
            }
    }
    return cloud;
}

// dist(q, Sigma): nearest cloud point refined by coordinate descent on the
// owning chart.  Spherical distance = arccos of the (clamped) dot product.
double distance_to_surface(const Surface& s, const Vec& q,
                           const std::vector<CloudPoint>& cloud) {
    double best = -1e300;
    const CloudPoint* bp = &cloud.front();
    for (const auto& cp : cloud) {
        const double d = dot(q, cp.x);
        if (d > best) {
            best = d;
            bp = &cp;
        }
    }
    const Chart& ch = *bp->chart;
    const double step = std::max(ch.u1 - ch.u0, ch.v1 - ch.v0) / 64.0;
    // Periodic embeddings tolerate parameters outside the rectangle, so the
    // descent window is widened rather than clamped at a periodic seam.
    const bool u_closed = std::abs((ch.u1 - ch.u0) - 2.0 * pi) < 1e-12;
    const double margin_u = u_closed ? 0.5 * (ch.u1 - ch.u0) : 0.0;
    const auto res = coordinate_descent(
        [&](double u, double v) { return -dot(q, ch.embed(u, v)); }, bp->u, bp->v, step, 1e-8,
        ch.u0 - margin_u, ch.u1 + margin_u, ch.v0, ch.v1, ch.v_periodic);
    const double c = std::min(1.0, std::max(-1.0, -res.value));
    return std::acos(c);
}

}  // namespace

double antipodal_epsilon(const Surface& s, int coarse_grid) {
    if (s.ambient.kind != Ambient::Kind::Sphere)
        throw std::invalid_argument("antipodal_epsilon: spherical surface required");
    if (!s.boundary.empty() || !s.ideal_boundary.empty())
        throw std::invalid_argument("antipodal_epsilon: closed surface required");
    const auto cloud = sample_cloud(s, coarse_grid);
    std::vector<double> dist(cloud.size());
    parallel_for(cloud.size(), [&](std::size_t i) {
        dist[i] = distance_to_surface(s, cloud[i].x * -1.0, cloud);
    });
    size_t best = 0;
    for (size_t i = 1; i < cloud.size(); ++i)
        if (dist[i] > dist[best]) best = i;

    // Refine the outer sup around the coarse argmax.
    const CloudPoint& seed = cloud[best];
    const Chart& ch = *seed.chart;
    const double step = std::max(ch.u1 - ch.u0, ch.v1 - ch.v0) / coarse_grid;
    const auto res = coordinate_descent(
        [&](double u, double v) {
            return -distance_to_surface(s, ch.embed(u, v) * -1.0, cloud);
        },
        seed.u, seed.v, step, 1e-6, ch.u0, ch.u1, ch.v0, ch.v1, ch.v_periodic);
    return std::max(dist[best], -res.value);
}

AntipodalCheck check_antipodal_bound(const Surface& s, double m) {
    AntipodalCheck c;
    c.area = total_area(s);
    c.eps_measured = antipodal_epsilon(s);
    c.eps_bound = epsilon_of_area({c.area, s.k, m});
    c.pass = c.eps_measured <= c.eps_bound + 1e-9;
    return c;
}

VisualHullValue visual_hull_value(const std::vector<IdealCurve>& gammas, const HPoint& O,
                                  int k) {
    if (gammas.empty()) throw std::invalid_argument("visual_hull_value: empty boundary");
    const CoordFn f = CoordFn::time_at(O);
    double total = 0;
    QuadOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-305;
    const double step = 1e-6;
    for (const auto& g : gammas) {
        total += integrate(
            [&](double t) {
                const Vec nu = g.point(t);
                const Vec d = (g.point(t + step) - g.point(t - step)) * (0.5 / step);
                return 2.0 / f.ideal_boundary_factor(nu) * norm(d);
            },
            g.t0, g.t1, opt);
    }
    return {total, total >= unit_sphere_volume(k - 1) - 1e-8};
}

double cly_bound(double r, int k, double m) {
    if (r <= 0 || r > 0.5 * pi) throw std::domain_error("cly_bound: r in (0, pi/2]");
    if (k < 1) throw std::invalid_argument("cly_bound: k >= 1");
    QuadOptions opt;
    opt.rel_tol = 1e-12;
    const double ball = integrate([k](double t) { return std::pow(std::sin(t), k - 1); }, 0.0,
                                  r, opt);
    return m * unit_sphere_volume(k - 1) * ball;
}

Table fig3_data(double A_lo, double A_hi, int n) {
    Table t;
    t.columns = {"A", "epsilon"};
    t.rows.resize(n);
    parallel_for(n, [&](std::size_t i) {
        const double A = A_lo + (A_hi - A_lo) * static_cast<double>(i) / (n - 1);
        t.rows[i] = {A, epsilon_of_area({A, 2, 1.0})};
    });
    const double vA = 6.0 * pi;
    t.comments.push_back("veronese," + format_double(vA) + "," +
                         format_double(epsilon_of_area({vA, 2, 1.0})));
    return t;
}

}  // namespace hypermono
