#include "hypermono/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermono/parallel.hpp"
#include "hypermono/quadrature.hpp"
#include "hypermono/rootfind.hpp"

namespace hypermono {

double ambient_dot(const Ambient& amb, const Vec& u, const Vec& v) {
    return amb.kind == Ambient::Kind::Hyperbolic ? mdot(u, v) : dot(u, v);
}

Vec chart_point(const Chart& ch, double u, double v) { return ch.embed(u, v); }

double chart_coord(const Surface& s, const Chart& ch, const CoordFn& f, double u, double v) {
    const Vec p = ch.embed(u, v);
    if (s.ambient.kind == Ambient::Kind::Hyperbolic) {
        HPoint hp{p};
        return f.value(hp);
    }
    SPoint sp{p};
    return f.value(sp);
}

namespace {

constexpr double fd_step = 1e-5;

struct FirstFundamental {
    double guu, gvv, guv, det;
};

FirstFundamental chart_metric(const Surface& s, const Chart& ch, double u, double v) {
    const Vec xu = (ch.embed(u + fd_step, v) - ch.embed(u - fd_step, v)) * (0.5 / fd_step);
    const Vec xv = (ch.embed(u, v + fd_step) - ch.embed(u, v - fd_step)) * (0.5 / fd_step);
    FirstFundamental g;
    g.guu = ambient_dot(s.ambient, xu, xu);
    g.gvv = ambient_dot(s.ambient, xv, xv);
    g.guv = ambient_dot(s.ambient, xu, xv);
    g.det = g.guu * g.gvv - g.guv * g.guv;
    return g;
}

// |grad^Sigma h| at a chart point, by finite differences of h and the metric.
double surface_gradient_norm(const Surface& s, const Chart& ch, const CoordFn& f, double u,
                             double v) {
    const FirstFundamental g = chart_metric(s, ch, u, v);
    const double hu = (chart_coord(s, ch, f, u + fd_step, v) -
                       chart_coord(s, ch, f, u - fd_step, v)) * (0.5 / fd_step);
    const double hv = (chart_coord(s, ch, f, u, v + fd_step) -
                       chart_coord(s, ch, f, u, v - fd_step)) * (0.5 / fd_step);
    if (g.det <= 0) return 0;
    const double q = (g.gvv * hu * hu - 2.0 * g.guv * hu * hv + g.guu * hv * hv) / g.det;
    return q > 0 ? std::sqrt(q) : 0.0;
}

bool chart_axisymmetric(const Surface& s, const Chart& ch, const CoordFn& f) {
    for (int i = 0; i < 5; ++i) {
        const double u = ch.u0 + (ch.u1 - ch.u0) * (0.07 + 0.215 * i);
        const double ref = chart_coord(s, ch, f, u, ch.v0 + 0.37 * (ch.v1 - ch.v0));
        for (int j = 0; j < 4; ++j) {
            const double v = ch.v0 + (ch.v1 - ch.v0) * (0.11 + 0.26 * j);
            const double h = chart_coord(s, ch, f, u, v);
            if (std::abs(h - ref) > 1e-11 * (1.0 + std::abs(ref))) return false;
        }
    }
    return true;
}

}  // namespace

double chart_area_density(const Surface& s, const Chart& ch, double u, double v) {
    if (ch.area_density) return ch.area_density(u, v);
    const FirstFundamental g = chart_metric(s, ch, u, v);
    return g.det > 0 ? std::sqrt(g.det) : 0.0;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

Surface geodesic_disc(int n, double dist, double rho_cap) {
    if (n < 3) throw std::invalid_argument("geodesic_disc: need n >= 3");
    Surface s;
    s.ambient = {Ambient::Kind::Hyperbolic, n};
    Vec base = Vec::zero(n + 1);
    base[0] = std::cosh(dist);
    base[n] = std::sinh(dist);
    const Vec e1 = Vec::basis(n + 1, 1), e2 = Vec::basis(n + 1, 2);
    Chart ch;
    ch.u0 = 0.0;
    ch.u1 = rho_cap;
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    ch.embed = [base, e1, e2](double rho, double phi) {
        return std::cosh(rho) * base +
               std::sinh(rho) * (std::cos(phi) * e1 + std::sin(phi) * e2);
    };
    ch.area_density = [](double rho, double) { return std::sinh(rho); };
    s.charts.push_back(ch);

    const double cd = std::cosh(dist), td = std::tanh(dist);
    IdealCurve gamma;
    gamma.t0 = 0;
    gamma.t1 = 2.0 * pi;
    gamma.point = [n, cd, td](double phi) {
        Vec nu = Vec::zero(n);
        nu[0] = std::cos(phi) / cd;
        nu[1] = std::sin(phi) / cd;
        nu[n - 1] += td;
        return nu;
    };
    s.ideal_boundary.push_back(gamma);

    BoundaryCurve rim;
    rim.t0 = 0;
    rim.t1 = 2.0 * pi;
    rim.point = [ch, rho_cap](double phi) { return ch.embed(rho_cap, phi); };
    s.boundary.push_back(rim);
    return s;
}

Surface great_subsphere(int n) {
    if (n < 2) throw std::invalid_argument("great_subsphere: need n >= 2");
    Surface s;
    s.ambient = {Ambient::Kind::Sphere, n};
    Chart ch;
    ch.u0 = 0.0;
    ch.u1 = pi;
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    ch.embed = [n](double u, double v) {
        Vec x = Vec::zero(n + 1);
        x[0] = std::sin(u) * std::cos(v);
        x[1] = std::sin(u) * std::sin(v);
        x[2] = std::cos(u);
        return x;
    };
    ch.area_density = [](double u, double) { return std::sin(u); };
    s.charts.push_back(ch);
    return s;
}

Surface clifford_torus() {
    Surface s;
    s.ambient = {Ambient::Kind::Sphere, 3};
    const double r = 1.0 / std::sqrt(2.0);
    Chart ch;
    ch.u0 = 0.0;
    ch.u1 = 2.0 * pi;
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    ch.embed = [r](double u, double v) {
        return Vec{r * std::cos(u), r * std::sin(u), r * std::cos(v), r * std::sin(v)};
    };
    ch.area_density = [](double, double) { return 0.5; };
    s.charts.push_back(ch);
    return s;
}

Surface veronese_surface() {
    Surface s;
    s.ambient = {Ambient::Kind::Sphere, 4};
    Chart ch;
    ch.u0 = 0.0;
    ch.u1 = 0.5 * pi;  // upper hemisphere of the double cover
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    const double s3 = std::sqrt(3.0);
    ch.embed = [s3](double u, double v) {
        const double x = std::sin(u) * std::cos(v);
        const double y = std::sin(u) * std::sin(v);
        const double z = std::cos(u);
        return Vec{s3 * x * y, s3 * y * z, s3 * z * x, 0.5 * s3 * (x * x - y * y),
                   0.5 * (x * x + y * y - 2.0 * z * z)};
    };
    ch.area_density = [](double u, double) { return 3.0 * std::sin(u); };
    s.charts.push_back(ch);
    return s;
}

Surface mc_annulus(double C, const ProfileOptions& popt) {
    auto prof = std::make_shared<ProfileCurve>(
        integrate_profile(C, ProfileAmbient::Hyperbolic, popt));
    return mc_annulus(prof);
}

Surface mc_annulus(std::shared_ptr<const ProfileCurve> profile) {
    if (!profile || profile->ambient != ProfileAmbient::Hyperbolic)
        throw std::invalid_argument("mc_annulus: hyperbolic profile required");
    Surface s;
    s.ambient = {Ambient::Kind::Hyperbolic, 4};
    s.profile = profile;
    Chart ch;
    ch.u0 = profile->s_min();
    ch.u1 = profile->s_max();
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    const ProfileCurve* p = profile.get();
    ch.embed = [p](double sarc, double theta) {
        const State3 st = p->eval(sarc);
        const double x = st[0] * std::cos(st[1]);
        const double y = st[0] * std::sin(st[1]);
        const Vec ball{x * std::cos(theta), x * std::sin(theta), y * std::cos(theta),
                       -y * std::sin(theta)};
        return ball_to_hyperboloid(ball).xi;
    };
    ch.area_density = [p](double sarc, double) {
        const State3 st = p->eval(sarc);
        const double rho = st[0] * st[0];
        return conformal_factor(ProfileAmbient::Hyperbolic, rho) * st[0];
    };
    s.charts.push_back(ch);

    for (double alpha : {profile->samples.front().alpha, profile->samples.back().alpha}) {
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        IdealCurve gamma;
        gamma.t0 = 0;
        gamma.t1 = 2.0 * pi;
        gamma.point = [ca, sa](double theta) {
            return Vec{ca * std::cos(theta), ca * std::sin(theta), sa * std::cos(theta),
                       -sa * std::sin(theta)};
        };
        s.ideal_boundary.push_back(gamma);
    }
    return s;
}

namespace {

// Gradient tube chart of a Minkowskian coordinate over a circle gamma lying
// in the level h1: X(h, phi) = mu(h) gamma(phi) + nu(h) g, with
// mu = sqrt(V(h)/V(h1)) and nu fixed by <X,X> = -1.
Chart tube_chart(const Surface& base, const CoordFn& f, const BoundaryCurve& gamma, double h1,
                 double h_hi) {
    const Vec g = f.gradient_vec();
    const int delta = f.delta();
    const double V1 = f.V(h1);
    if (V1 <= 0) throw std::invalid_argument("tube chart: starting level must be non-critical");
    auto mu_nu = [V1, h1, delta, &f](double h) {
        const double mu = std::sqrt(f.V(h) / V1);
        const double nu = delta != 0 ? (h - mu * h1) / delta : (mu * mu - 1.0) / (2.0 * mu * h1);
        return std::pair<double, double>{mu, nu};
    };
    Chart ch;
    ch.u0 = h1;
    ch.u1 = h_hi;
    ch.v0 = gamma.t0;
    ch.v1 = gamma.t1;
    ch.v_periodic = true;
    auto gpt = gamma.point;
    ch.embed = [mu_nu, gpt, g](double h, double phi) {
        const auto [mu, nu] = mu_nu(h);
        return mu * gpt(phi) + nu * g;
    };
    const Ambient amb = base.ambient;
    ch.area_density = [gpt, amb, V1](double, double phi) {
        const Vec d = (gpt(phi + fd_step) - gpt(phi - fd_step)) * (0.5 / fd_step);
        return std::sqrt(std::max(0.0, ambient_dot(amb, d, d) / V1));
    };
    return ch;
}

}  // namespace

Surface geodesic_cone(const CoordFn& time_coord, double r1, double beta, double h_hi) {
    if (time_coord.kind() != CoordFn::Kind::Time)
        throw std::invalid_argument("geodesic_cone: time coordinate required");
    const HPoint& O = time_coord.time_center();
    const int n = O.n();
    if (n < 3) throw std::invalid_argument("geodesic_cone: need n >= 3");
    // Minkowski-orthonormal frame of the tangent space at O.
    Vec frame[3];
    int out = 0;
    for (int i = 1; i <= n && out < 3; ++i) {
        Vec e = Vec::basis(n + 1, i);
        Vec u = e + mdot(e, O.xi) * O.xi;
        for (int j = 0; j < out; ++j) u = u - mdot(u, frame[j]) * frame[j];
        const double nn = mdot(u, u);
        if (nn < 1e-12) continue;
        frame[out++] = u * (1.0 / std::sqrt(nn));
    }
    const Vec f1 = frame[0], f2 = frame[1], f3 = frame[2];
    const double cb = std::cos(beta), sb = std::sin(beta);
    const Vec center = O.xi;
    BoundaryCurve gamma;
    gamma.t0 = 0;
    gamma.t1 = 2.0 * pi;
    gamma.point = [center, f1, f2, f3, r1, cb, sb](double phi) {
        const Vec dir = cb * f3 + sb * (std::cos(phi) * f1 + std::sin(phi) * f2);
        return std::cosh(r1) * center + std::sinh(r1) * dir;
    };
    Surface s;
    s.ambient = {Ambient::Kind::Hyperbolic, n};
    s.charts.push_back(tube_chart(s, time_coord, gamma, std::cosh(r1), h_hi));
    s.boundary.push_back(gamma);
    return s;
}

Surface tube_extension(const Surface& base, const CoordFn& f, double h_hi) {
    if (f.spherical())
        throw std::invalid_argument("tube_extension: Minkowskian coordinate required");
    if (base.boundary.empty())
        throw std::invalid_argument("tube_extension: base surface has no boundary circles");
    Surface s = base;
    for (const auto& gamma : base.boundary) {
        HPoint p0{gamma.point(gamma.t0)};
        const double h1 = f.value(p0);
        for (int i = 1; i < 8; ++i) {
            HPoint pi_{gamma.point(gamma.t0 + (gamma.t1 - gamma.t0) * i / 8.0)};
            if (std::abs(f.value(pi_) - h1) > 1e-9 * (1.0 + std::abs(h1)))
                throw std::invalid_argument(
                    "tube_extension: boundary does not lie in a level set of the coordinate");
        }
        s.charts.push_back(tube_chart(base, f, gamma, h1, h_hi));
    }
    s.boundary.clear();
    return s;
}

Surface geodesic_sphere_surface(const HPoint& center, double r0) {
    const int n = center.n();
    if (n != 3) throw std::invalid_argument("geodesic_sphere_surface: implemented for H^3");
    Vec frame[3];
    int out = 0;
    for (int i = 1; i <= n && out < 3; ++i) {
        Vec e = Vec::basis(n + 1, i);
        Vec u = e + mdot(e, center.xi) * center.xi;
        for (int j = 0; j < out; ++j) u = u - mdot(u, frame[j]) * frame[j];
        const double nn = mdot(u, u);
        if (nn < 1e-12) continue;
        frame[out++] = u * (1.0 / std::sqrt(nn));
    }
    const Vec f1 = frame[0], f2 = frame[1], f3 = frame[2];
    const Vec c = center.xi;
    Surface s;
    s.ambient = {Ambient::Kind::Hyperbolic, n};
    Chart ch;
    ch.u0 = 0.0;
    ch.u1 = pi;
    ch.v0 = 0.0;
    ch.v1 = 2.0 * pi;
    ch.v_periodic = true;
    ch.embed = [c, f1, f2, f3, r0](double u, double v) {
        const Vec dir = std::sin(u) * (std::cos(v) * f1 + std::sin(v) * f2) + std::cos(u) * f3;
        return std::cosh(r0) * c + std::sinh(r0) * dir;
    };
    ch.area_density = [r0](double u, double) {
        return std::sinh(r0) * std::sinh(r0) * std::sin(u);
    };
    s.charts.push_back(ch);
    return s;
}

// ---------------------------------------------------------------------------
// integrals
// ---------------------------------------------------------------------------

namespace {

struct ChartSliceCtx {
    const Surface* s;
    const Chart* ch;
    const CoordFn* f;
    const Weight* w;
    int k;
};

// Weighted mass of {lo <= h <= hi} on one chart.
double chart_band_mass(const ChartSliceCtx& c, double lo, double hi, const SliceOptions& opt) {
    const Surface& s = *c.s;
    const Chart& ch = *c.ch;
    auto h = [&](double u, double v) { return chart_coord(s, ch, *c.f, u, v); };
    auto dens = [&](double u, double v) { return chart_area_density(s, ch, u, v); };
    auto P = [&](double hh) { return c.w->P(hh, *c.f, c.k); };

    // Quick reject from a coarse range scan.
    double hmin = 1e300, hmax = -1e300;
    for (int i = 0; i <= 48; ++i)
        for (int j = 0; j <= 48; ++j) {
            const double val = h(ch.u0 + (ch.u1 - ch.u0) * i / 48.0,
                                 ch.v0 + (ch.v1 - ch.v0) * j / 48.0);
            hmin = std::min(hmin, val);
            hmax = std::max(hmax, val);
        }
    const double margin = 0.1 * (hmax - hmin) + 1e-12;
    if (hi < hmin - margin || lo > hmax + margin) return 0.0;

    QuadOptions inner;
    inner.rel_tol = 1e-10;
    inner.abs_tol = 1e-305;
    const double eps_u = 1e-12 * (ch.u1 - ch.u0);

    if (chart_axisymmetric(s, ch, *c.f)) {
        const double vmid = 0.5 * (ch.v0 + ch.v1);
        auto hu = [&](double u) { return h(u, vmid); };
        auto ring = [&](double u) {
            return integrate([&](double v) { return dens(u, v); }, ch.v0, ch.v1, inner);
        };
        double total = 0;
        for (const auto& [a, b] : band_intervals(hu, ch.u0, ch.u1, lo, hi, opt.nscan, eps_u)) {
            QuadOptions outer;
            outer.rel_tol = opt.rel_tol * 0.1;
            outer.abs_tol = 1e-300;
            total += integrate([&](double u) { return P(hu(u)) * ring(u); }, a, b, outer);
        }
        return total;
    }

    auto column = [&](double u) {
        auto hv = [&](double v) { return h(u, v); };
        double colsum = 0;
        const double eps_v = 1e-12 * (ch.v1 - ch.v0);
        for (const auto& [a, b] : band_intervals(hv, ch.v0, ch.v1, lo, hi, opt.nscan, eps_v))
            colsum += integrate([&](double v) { return P(hv(v)) * dens(u, v); }, a, b, inner);
        return colsum;
    };
    // Absolute floor from a coarse estimate keeps kink refinement bounded.
    double coarse = 0;
    for (int i = 0; i < 16; ++i)
        coarse += column(ch.u0 + (ch.u1 - ch.u0) * (i + 0.5) / 16.0) * (ch.u1 - ch.u0) / 16.0;
    QuadOptions outer;
    outer.rel_tol = opt.rel_tol * 0.1;
    outer.abs_tol = std::max(1e-300, 0.02 * opt.rel_tol * std::abs(coarse));
    return integrate(column, ch.u0, ch.u1, outer);
}

}  // namespace

std::pair<double, double> coord_range(const Surface& s, const CoordFn& f, int grid) {
    double lo = 1e300, hi = -1e300;
    for (const auto& ch : s.charts) {
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                const double h = chart_coord(s, ch, f,
                                             ch.u0 + (ch.u1 - ch.u0) * i / grid,
                                             ch.v0 + (ch.v1 - ch.v0) * j / grid);
                lo = std::min(lo, h);
                hi = std::max(hi, h);
            }
    }
    return {lo, hi};
}

namespace {

double slice_boundary_term(const Surface& s, const CoordFn& f, const Weight& w, int k,
                           const SliceOptions& opt) {
    if (w.c == 0) return 0.0;
    const double V0 = f.V(w.h0);
    if (V0 <= 0) return 0.0;
    const auto [hmin, hmax] = coord_range(s, f, 48);
    if (w.h0 < hmin - 1e-9 * (1.0 + std::abs(hmin)) || w.h0 > hmax) return 0.0;
    const LevelSlice ls = boundary_slice(s, f, w.h0, opt);
    return w.c / k * ls.parallel_volume * std::pow(V0, 0.5 * k);
}

}  // namespace

double slice_volume(const Surface& s, const CoordFn& f, const Weight& w, double t,
                    const SliceOptions& opt) {
    if (t < w.h0) throw std::domain_error("slice_volume: t < h0");
    double total = slice_boundary_term(s, f, w, s.k, opt);
    for (const auto& ch : s.charts) {
        ChartSliceCtx c{&s, &ch, &f, &w, s.k};
        total += chart_band_mass(c, w.h0, t, opt);
    }
    return total;
}

std::vector<double> slice_volume_grid(const Surface& s, const CoordFn& f, const Weight& w,
                                      const std::vector<double>& ts, const SliceOptions& opt) {
    for (double t : ts)
        if (t < w.h0) throw std::domain_error("slice_volume_grid: t < h0");
    // The starting-level boundary term is shared by all samples; the band
    // masses are independent and fill per-index slots, so the result does not
    // depend on the worker count.
    const double bterm = slice_boundary_term(s, f, w, s.k, opt);
    std::vector<double> out(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        double total = bterm;
        for (const auto& ch : s.charts) {
            ChartSliceCtx c{&s, &ch, &f, &w, s.k};
            total += chart_band_mass(c, w.h0, ts[i], opt);
        }
        out[i] = total;
    });
    return out;
}

double total_area(const Surface& s, const SliceOptions& opt) {
    QuadOptions inner;
    inner.rel_tol = 0.1 * opt.rel_tol;
    inner.abs_tol = 1e-305;
    double total = 0;
    for (const auto& ch : s.charts) {
        auto row = [&](double u) {
            return integrate([&](double v) { return chart_area_density(s, ch, u, v); },
                             ch.v0, ch.v1, inner);
        };
        total += integrate(row, ch.u0, ch.u1, inner);
    }
    return total;
}

LevelSlice boundary_slice(const Surface& s, const CoordFn& f, double t, const SliceOptions& opt) {
    LevelSlice out;
    const double V = f.V(t);
    if (V <= 0) throw std::domain_error("boundary_slice: V(t) must be positive");
    const double sqrtV = std::sqrt(V);
    QuadOptions inner;
    inner.rel_tol = 1e-10;
    inner.abs_tol = 1e-305;

    for (const auto& ch : s.charts) {
        auto h = [&](double u, double v) { return chart_coord(s, ch, f, u, v); };
        if (chart_axisymmetric(s, ch, f)) {
            const double vmid = 0.5 * (ch.v0 + ch.v1);
            auto hu = [&](double u) { return h(u, vmid) - t; };
            auto roots = scan_roots(hu, ch.u0, ch.u1, opt.nscan, 1e-12 * (ch.u1 - ch.u0));
            if (roots.empty()) {
                // Possible tangency: the level may touch without crossing.
                double best = 1e300, ubest = ch.u0;
                for (int i = 0; i <= 512; ++i) {
                    const double u = ch.u0 + (ch.u1 - ch.u0) * i / 512.0;
                    const double d = std::abs(hu(u));
                    if (d < best) {
                        best = d;
                        ubest = u;
                    }
                }
                if (best < 1e-9 * (1.0 + std::abs(t))) {
                    out.tangency_warning = true;
                    roots.push_back(ubest);
                }
            }
            for (double ur : roots) {
                auto seg_len = integrate(
                    [&](double v) {
                        const Vec xv = (ch.embed(ur, v + fd_step) - ch.embed(ur, v - fd_step)) *
                                       (0.5 / fd_step);
                        return std::sqrt(std::max(0.0, ambient_dot(s.ambient, xv, xv)));
                    },
                    ch.v0, ch.v1, inner);
                auto par = integrate(
                    [&](double v) {
                        const Vec xv = (ch.embed(ur, v + fd_step) - ch.embed(ur, v - fd_step)) *
                                       (0.5 / fd_step);
                        const double dl =
                            std::sqrt(std::max(0.0, ambient_dot(s.ambient, xv, xv)));
                        const double grad = surface_gradient_norm(s, ch, f, ur, v);
                        return dl * std::min(1.0, grad / sqrtV);
                    },
                    ch.v0, ch.v1, inner);
                out.length_gtilde += seg_len / sqrtV;
                out.parallel_volume += par / sqrtV;
            }
            continue;
        }

        // Marching squares over the parameter rectangle.
        const int N = opt.marching_grid;
        std::vector<double> vals((N + 1) * (N + 1));
        const double du = (ch.u1 - ch.u0) / N, dv = (ch.v1 - ch.v0) / N;
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= N; ++j)
                vals[i * (N + 1) + j] = h(ch.u0 + du * i, ch.v0 + dv * j) - t;
        double min_abs = 1e300;
        bool found = false;
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                const double c00 = vals[i * (N + 1) + j], c10 = vals[(i + 1) * (N + 1) + j];
                const double c01 = vals[i * (N + 1) + j + 1],
                             c11 = vals[(i + 1) * (N + 1) + j + 1];
                min_abs = std::min(min_abs, std::abs(c00));
                if ((c00 > 0 && c10 > 0 && c01 > 0 && c11 > 0) ||
                    (c00 < 0 && c10 < 0 && c01 < 0 && c11 < 0))
                    continue;
                // Edge crossings by linear interpolation.
                struct Pt {
                    double u, v;
                };
                Pt pts[4];
                int np = 0;
                auto edge = [&](double a, double b, double ua, double va, double ub, double vb) {
                    if ((a < 0) == (b < 0) || a == b) return;
                    const double w = a / (a - b);
                    pts[np++] = {ua + w * (ub - ua), va + w * (vb - va)};
                };
                const double u_a = ch.u0 + du * i, u_b = u_a + du;
                const double v_a = ch.v0 + dv * j, v_b = v_a + dv;
                edge(c00, c10, u_a, v_a, u_b, v_a);
                edge(c10, c11, u_b, v_a, u_b, v_b);
                edge(c11, c01, u_b, v_b, u_a, v_b);
                edge(c01, c00, u_a, v_b, u_a, v_a);
                if (np < 2) continue;
                found = true;
                // Ambiguous saddles (np == 4) contribute two segments; the
                // pairing choice shifts the curve by O(cell) only.
                for (int seg = 0; seg + 1 < np; seg += 2) {
                    const Pt& p1 = pts[seg];
                    const Pt& p2 = pts[seg + 1];
                    const Vec x1 = ch.embed(p1.u, p1.v), x2 = ch.embed(p2.u, p2.v);
                    const Vec d = x2 - x1;
                    const double len = std::sqrt(std::max(0.0, ambient_dot(s.ambient, d, d)));
                    if (len == 0) continue;
                    const double um = 0.5 * (p1.u + p2.u), vm = 0.5 * (p1.v + p2.v);
                    const double grad = surface_gradient_norm(s, ch, f, um, vm);
                    out.length_gtilde += len / sqrtV;
                    out.parallel_volume += len / sqrtV * std::min(1.0, grad / sqrtV);
                }
            }
        }
        if (!found && min_abs < 1e-9 * (1.0 + std::abs(t))) out.tangency_warning = true;
    }
    return out;
}

}  // namespace hypermono
