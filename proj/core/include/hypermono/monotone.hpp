#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermono/surfaces.hpp"

namespace hypermono {

/// Sampled density curve Theta(t) = A(t)/Q(t): weighted surface volume over
/// the tube volume of the same weight.
struct DensitySample {
    double t, A, Q, theta;
};

struct DensityCurve {
    CoordFn coord;
    Weight weight;
    int k = 2;
    std::vector<DensitySample> samples;
    int dropped = 0;  // grid points discarded because Q <= 0
};

struct MonotonicityVerdict {
    enum class Status { NonDecreasing, NonIncreasing, NonMonotone };
    Status status = Status::NonDecreasing;
    bool non_decreasing = false;
    bool non_increasing = false;
    /// Smallest consecutive increment Theta(t_{i+1}) - Theta(t_i).
    double slack = 0;
    /// For NonMonotone: the adjacent pair (t_i, t_j), t_i < t_j, with the
    /// largest drop Theta(t_i) - Theta(t_j) (the worst violation of the
    /// expected increase).
    std::optional<std::pair<double, double>> witness;

    std::string describe() const;
};

/// Geometric grid between lo and hi (both positive), n samples.
std::vector<double> geometric_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

/// A(t) from slice volumes, Q(t) from tube volumes, Theta = A/Q per sample.
/// Grid points with Q <= 0 are dropped (degenerate normaliser).  Samples are
/// filled in parallel; the result is independent of the worker count.
DensityCurve density_curve(const Surface& s, const CoordFn& f, const Weight& w, int k,
                           const std::vector<double>& t_grid, const SliceOptions& opt = {});

/// NonDecreasing iff every consecutive increment is >= -tol, symmetrically
/// NonIncreasing; otherwise NonMonotone with the maximal-violation witness.
MonotonicityVerdict verdict(const DensityCurve& curve, double tol = 1e-8);

/// Minimum of the coordinate over the surface: chart grid search refined by
/// local descent to 1e-10.
double min_coord(const Surface& s, const CoordFn& f);

/// Unweighted density A(t)/Q_delta(a,t) of the time/space/null monotonicity
/// statements.  `a` must lie in the admissible interval ([1, min h] for the
/// time kind, (0, min h] otherwise, the upper end computed via min_coord);
/// pass a <= 0 to request the optimal choice a = min h.
MonotonicityVerdict theorem_1_check(const Surface& s, const CoordFn& f, double a,
                                    const std::vector<double>& t_grid, double tol = 1e-8,
                                    const SliceOptions& opt = {});

/// Pointwise comparison of two densities of the same surface and coordinate.
struct DensityComparison {
    DensityCurve first, second;
    MonotonicityVerdict first_verdict, second_verdict;
    double max_excess = 0;  // max over the grid of Theta_1 - Theta_2
    bool first_below_second(double tol = 1e-8) const { return max_excess <= tol; }
};
DensityComparison compare_densities(const Surface& s, const CoordFn& f, const Weight& w1,
                                    const Weight& w2, int k, const std::vector<double>& t_grid,
                                    const SliceOptions& opt = {});

/// Volume slack of the tube competitor over a surface whose boundary sits in
/// the level h1: tube volume minus surface volume under the given weight.
double tube_bound_check(const Surface& s, const CoordFn& f, const Weight& w, double h1,
                        const SliceOptions& opt = {});

}  // namespace hypermono
