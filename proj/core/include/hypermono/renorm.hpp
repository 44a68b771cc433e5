#pragma once

#include <vector>

#include "hypermono/surfaces.hpp"
#include "hypermono/table.hpp"

namespace hypermono {

/// Renormalised area of the rotational minimal annulus M_C (closed form):
///   4 pi int_a^inf [ (xi^2-1)/sqrt((xi^2-1)^2 - C^2) - 1 ] d(xi) - 4 pi a,
/// a = sqrt(C+1).  The (xi-a)^{-1/2} endpoint is removed by xi = a + u^2 and
/// the tail is truncated where its analytic bound ~ C^2/(6 Xi^3) drops below
/// 1e-10; total absolute error <= 1e-8.
double ar_mc(double C);

/// Least-squares fit of the area growth A(t) = L t + A_R + c/t over the tail
/// grid; A(t) comes from the surface's slice machinery.
struct GwFit {
    double boundary_length;  // L
    double A_R;
    double inv_t_coeff;
    double residual;   // rms of the fit residuals
    double condition;  // of the design matrix
};
GwFit gw_extract(const Surface& s, const CoordFn& f, const std::vector<double>& t_grid,
                 const SliceOptions& opt = {});

/// Length of ideal boundary curves under the conformal-infinity metric of the
/// coordinate kind: round (time), flat (null) or doubled hyperbolic (space).
double boundary_metric_length(const IdealCurve& gamma, const CoordFn& f);
double boundary_metric_length(const std::vector<IdealCurve>& gammas, const CoordFn& f);

/// slack = -( A_R + (1/2) |gamma| (a - delta/a) ); nonnegative slack certifies
/// the renormalised isoperimetric inequality.
double isoperimetric_slack(double A_R, double boundary_length, double a, int delta);

struct RenormReport {
    CoordFn::Kind coord_kind;
    double a;                // min of the coordinate over the surface
    double boundary_length;  // |gamma| under the normalised boundary metric
    double A_R;
    double slack;
};
RenormReport renorm_report(const Surface& s, const CoordFn& f,
                           const std::vector<double>& t_grid = {},
                           const SliceOptions& opt = {});

/// Figure-2 style sweep: columns C, area_term = -A_R(M_C), perimeter_term =
/// (1/2)(a + 1/a) |gamma|_{g_O}, ratio = area_term / perimeter_term.
Table fig2_data(const std::vector<double>& c_list);

}  // namespace hypermono
