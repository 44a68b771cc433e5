#include "hypermono/renorm.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "hypermono/monotone.hpp"
#include "hypermono/parallel.hpp"
#include "hypermono/quadrature.hpp"

namespace hypermono {

double ar_mc(double C) {
    if (C <= 0) throw std::domain_error("ar_mc: C must be positive");
    const double a = std::sqrt(C + 1.0);
    // Truncation point: the integrand decays like C^2 / (2 xi^4).
    const double tail_cut = std::cbrt(C * C * 1e10);
    const double Xi = std::max({10.0 * a, 50.0, tail_cut});
    auto integrand = [C](double xi) {
        const double q = xi * xi - 1.0;
        return q / std::sqrt(q * q - C * C) - 1.0;
    };
    QuadOptions opt;
    opt.rel_tol = 1e-11;
    opt.abs_tol = 1e-13;
    const double integral = integrate_sqrt_left(integrand, a, Xi, opt);
    return 4.0 * pi * (integral - a);
}

GwFit gw_extract(const Surface& s, const CoordFn& f, const std::vector<double>& t_grid,
                 const SliceOptions& opt) {
    const size_t n = t_grid.size();
    if (n < 3) throw std::invalid_argument("gw_extract: need at least 3 grid points");
    const Weight plain = Weight::uniform(f.level_floor() == 1.0 ? 1.0 : 1e-8, 0.0);
    const auto areas = slice_volume_grid(s, f, plain, t_grid, opt);

    Eigen::MatrixXd M(n, 3);
    Eigen::VectorXd b(n);
    for (size_t i = 0; i < n; ++i) {
        M(i, 0) = t_grid[i];
        M(i, 1) = 1.0;
        M(i, 2) = 1.0 / t_grid[i];
        b(i) = areas[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) / svd.singularValues()(2);
    if (!(cond < 1e12)) {
        throw std::runtime_error("gw_extract: ill-conditioned fit, condition number " +
                                 std::to_string(cond) + " (grid too short?)");
    }
    const Eigen::Vector3d x = svd.solve(b);
    GwFit fit;
    fit.boundary_length = x(0);
    fit.A_R = x(1);
    fit.inv_t_coeff = x(2);
    fit.residual = std::sqrt((M * x - b).squaredNorm() / n);
    fit.condition = cond;
    return fit;
}

double boundary_metric_length(const IdealCurve& gamma, const CoordFn& f) {
    QuadOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-305;
    const double step = 1e-6;
    return integrate(
        [&](double t) {
            const Vec nu = gamma.point(t);
            const Vec d = (gamma.point(t + step) - gamma.point(t - step)) * (0.5 / step);
            const double B = f.ideal_boundary_factor(nu);
            if (B <= 0)
                throw std::domain_error(
                    "boundary_metric_length: curve touches the excluded ideal set");
            return 2.0 / B * norm(d);
        },
        gamma.t0, gamma.t1, opt);
}

double boundary_metric_length(const std::vector<IdealCurve>& gammas, const CoordFn& f) {
    double total = 0;
    for (const auto& g : gammas) total += boundary_metric_length(g, f);
    return total;
}

double isoperimetric_slack(double A_R, double boundary_length, double a, int delta) {
    if (a <= 0) throw std::domain_error("isoperimetric_slack: a must be positive");
    return -(A_R + 0.5 * boundary_length * (a - static_cast<double>(delta) / a));
}

RenormReport renorm_report(const Surface& s, const CoordFn& f,
                           const std::vector<double>& t_grid, const SliceOptions& opt) {
    if (s.ideal_boundary.empty())
        throw std::invalid_argument("renorm_report: surface has no ideal boundary");
    std::vector<double> grid = t_grid;
    if (grid.empty()) grid = geometric_grid(20.0, 200.0, 40);
    RenormReport rep;
    rep.coord_kind = f.kind();
    rep.a = min_coord(s, f);
    rep.boundary_length = boundary_metric_length(s.ideal_boundary, f);
    rep.A_R = gw_extract(s, f, grid, opt).A_R;
    rep.slack = isoperimetric_slack(rep.A_R, rep.boundary_length, rep.a, f.delta());
    return rep;
}

Table fig2_data(const std::vector<double>& c_list) {
    for (size_t i = 0; i + 1 < c_list.size(); ++i)
        if (c_list[i] <= 0 || c_list[i] >= c_list[i + 1])
            throw std::invalid_argument("fig2_data: C list must be positive and increasing");
    Table t;
    t.columns = {"C", "area_term", "perimeter_term", "ratio"};
    t.rows.resize(c_list.size());
    const CoordFn origin_time = CoordFn::time_at_ball_origin(4);
    parallel_for(c_list.size(), [&](std::size_t i) {
        const double C = c_list[i];
        const double a = std::sqrt(C + 1.0);
        const double area_term = -ar_mc(C);
        const Surface annulus = mc_annulus(C);
        const double glen = boundary_metric_length(annulus.ideal_boundary, origin_time);
        const double perimeter = 0.5 * (a + 1.0 / a) * glen;
        t.rows[i] = {C, area_term, perimeter, area_term / perimeter};
    });
    return t;
}

}  // namespace hypermono
