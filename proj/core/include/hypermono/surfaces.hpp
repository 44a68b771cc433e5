#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hypermono/geometry.hpp"
#include "hypermono/profile.hpp"
#include "hypermono/weights.hpp"

namespace hypermono {

struct Ambient {
    enum class Kind { Hyperbolic, Sphere };
    Kind kind;
    int n;
};

/// Metric pairing of (near-)tangent vectors at a point of the model:
/// Minkowski on the hyperboloid, Euclidean on the sphere.
double ambient_dot(const Ambient& amb, const Vec& u, const Vec& v);

/// One parameter rectangle with an embedding into the ambient model
/// (hyperboloid or unit-sphere coordinates, dim n+1).  area_density is the
/// analytic area element when available; otherwise central finite differences
/// of the embedding with step 1e-5 are used.
struct Chart {
    double u0, u1, v0, v1;
    bool v_periodic = false;
    std::function<Vec(double, double)> embed;
    std::function<double(double, double)> area_density;  // may be null
};

/// Curve on the sphere at infinity, parametrised in the ball closure by unit
/// vectors.
struct IdealCurve {
    std::function<Vec(double)> point;
    double t0, t1;
};

/// Finite boundary circle lying in a level set of some coordinate.
struct BoundaryCurve {
    std::function<Vec(double)> point;  // ambient model coordinates
    double t0, t1;
};

struct Surface {
    Ambient ambient{Ambient::Kind::Hyperbolic, 3};
    int k = 2;
    std::vector<Chart> charts;
    std::vector<IdealCurve> ideal_boundary;
    std::vector<BoundaryCurve> boundary;
    std::shared_ptr<const ProfileCurve> profile;  // set for annuli of revolution
};

Vec chart_point(const Chart& ch, double u, double v);
double chart_coord(const Surface& s, const Chart& ch, const CoordFn& f, double u, double v);
double chart_area_density(const Surface& s, const Chart& ch, double u, double v);

// ---- catalog ----

/// Totally geodesic H^2 in H^n at distance `dist` from the ball origin
/// (offset along the last spatial axis), in geodesic polar coordinates up to
/// radius rho_cap.
Surface geodesic_disc(int n, double dist = 0.0, double rho_cap = 16.0);

/// Totally geodesic S^2 spanned by the first three axes of S^n.
Surface great_subsphere(int n);

/// The flat minimal torus |z| = |w| = 1/sqrt(2) in S^3.
Surface clifford_torus();

/// Minimal embedding of RP^2 in S^4 of area 6*pi; the chart is the closed
/// upper hemisphere of the double cover.
Surface veronese_surface();

/// Annulus of revolution: the profile curve swept by the rotation
/// (z,w) -> (z e^{i theta}, w e^{-i theta}) of C^2 = R^4.
Surface mc_annulus(double C, const ProfileOptions& popt = {});
Surface mc_annulus(std::shared_ptr<const ProfileCurve> profile);

/// Gradient tube (geodesic cone) of a time coordinate over the circle at
/// geodesic radius r1 around the center, tilted by angle beta from the
/// rotation plane, between levels [cosh(r1), h_hi].
Surface geodesic_cone(const CoordFn& time_coord, double r1, double beta, double h_hi);

/// Union of a surface with the forward gradient tube of f built on its
/// boundary circles (which must lie in level sets of f).
Surface tube_extension(const Surface& base, const CoordFn& f, double h_hi);

/// Geodesic sphere of radius r0 around a center (not minimal; used to probe
/// level-set tangency behaviour).
Surface geodesic_sphere_surface(const HPoint& center, double r0);

// ---- integrals ----

struct SliceOptions {
    double rel_tol = 1e-8;
    int nscan = 256;        // level-crossing scan per chart column
    int marching_grid = 2048;
};

/// Weighted sub-level volume
///   int_{Sigma, h0 <= h <= t} P(h) dvol + (c/k) |gamma_0^{T Sigma}| V(h0)^{k/2}.
/// Rotationally symmetric charts (h constant in v) reduce to 1D integrals;
/// otherwise each chart is integrated column-wise with the crossing intervals
/// of {h0 <= h <= t} located by bisection.
double slice_volume(const Surface& s, const CoordFn& f, const Weight& w, double t,
                    const SliceOptions& opt = {});

/// Slice volumes over an increasing grid; the starting-level boundary term is
/// computed once and shared.
std::vector<double> slice_volume_grid(const Surface& s, const CoordFn& f, const Weight& w,
                                      const std::vector<double>& ts,
                                      const SliceOptions& opt = {});

/// Plain area of the whole surface.
double total_area(const Surface& s, const SliceOptions& opt = {});

/// Level-curve data of {h = t} on the surface: length under the normalised
/// metric g~ = V(h)^{-1} g and the parallel volume weighting by
/// cos angle(grad h, T Sigma) = |grad^Sigma h| / V^{1/2}.
struct LevelSlice {
    double length_gtilde = 0;
    double parallel_volume = 0;
    bool tangency_warning = false;
};
LevelSlice boundary_slice(const Surface& s, const CoordFn& f, double t,
                          const SliceOptions& opt = {});

/// Coarse surface range of the coordinate (grid sampling only).
std::pair<double, double> coord_range(const Surface& s, const CoordFn& f, int grid = 96);

}  // namespace hypermono
