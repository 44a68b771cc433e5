#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermono/geometry.hpp"

namespace hypermono {

/// Monotone (Fritsch-Carlson) cubic interpolant of tabulated data; preserves
/// positivity of positive monotone samples.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> xs, std::vector<double> ys);
    double operator()(double x) const;

  private:
    std::vector<double> x_, y_, m_;  // nodes, values, node slopes
};

/// A weight pair (P, c) with starting level h0.  P is one of the named weight
/// functions; Natural means P = U(h) of the coordinate in use, and the power
/// weights depend on the submanifold dimension k at evaluation time.
struct Weight {
    enum class Kind { Natural, Uniform, PowOnePlusH, PowH, PowHExtra, Tabulated };

    Kind kind = Kind::Uniform;
    double c = 0.0;
    double h0 = 0.0;
    MonotoneCubic table;  // Tabulated only

    static Weight natural(double h0) { return {Kind::Natural, 1.0, h0, {}}; }
    static Weight uniform(double h0, double c = 0.0) { return {Kind::Uniform, c, h0, {}}; }
    /// P = (1+h)^{-k}
    static Weight pow_one_plus_h(double h0, double c = 0.0) { return {Kind::PowOnePlusH, c, h0, {}}; }
    /// P = h^{-k}
    static Weight pow_h(double h0, double c = 0.0) { return {Kind::PowH, c, h0, {}}; }
    /// P = h^{-k-1}
    static Weight pow_h_extra(double h0, double c = 0.0) { return {Kind::PowHExtra, c, h0, {}}; }
    static Weight tabulated(std::vector<double> hs, std::vector<double> ps, double h0,
                            double c = 0.0);

    double P(double h, const CoordFn& f, int k) const;
    std::string describe() const;
};

/// Q_{(P,c)}(t) = omega_{k-1} [ int_{h0}^t P(h) V(h)^{k/2-1} dh
///                              + (c/k) V(h0)^{k/2} ],
/// the (P,c)-volume of a gradient tube normalised per unit boundary.
/// Quadrature to relative tolerance 1e-10; integrable V^{k/2-1} endpoint
/// singularities (k = 1 at a critical starting level) are removed by a
/// square-root substitution.
double tube_volume(const Weight& w, const CoordFn& f, int k, double t);

/// Incremental tube volumes over an increasing grid (shares the running
/// integral between consecutive grid points).
std::vector<double> tube_volume_grid(const Weight& w, const CoordFn& f, int k,
                                     const std::vector<double>& ts);

/// Evaluator form of the tube volume.
class TubeVolume {
  public:
    TubeVolume(Weight w, CoordFn f, int k) : w_(std::move(w)), f_(std::move(f)), k_(k) {}
    double operator()(double t) const { return tube_volume(w_, f_, k_, t); }
    int k() const { return k_; }

  private:
    Weight w_;
    CoordFn f_;
    int k_;
};

/// Q_delta(a,t) = int_a^t (s^2+delta)^{k/2-1} ds + (1/(k a)) (a^2+delta)^{k/2};
/// omega_{k-1} * q_delta equals the uniform (1, 1/a)-tube volume of the
/// Minkowskian coordinate of type delta started at h0 = a.
double q_delta(double a, double t, int k, int delta);

/// Verdict of the pointwise comparison P1/Q1 <= P2/Q2 on a sampled interval.
struct WeakerVerdict {
    bool weaker = false;
    std::optional<double> witness;  // smallest failing t
};

/// Samples P_i(t)/Q_i(t) on a uniform grid; Weaker iff the first ratio stays
/// below the second plus 1e-12 at every sample.  Samples at t == h0 where both
/// tubes are empty are vacuous; a vanishing Q at t > h0 is a degenerate
/// interval and throws.
WeakerVerdict is_weaker(const Weight& w1, const Weight& w2, const CoordFn& f, int k,
                        double t_lo, double t_hi, int grid = 256);

/// The five-weight chain at the time coordinate of the ball origin, h0 = 1:
/// P1 = h (natural), P2 = 1, P3 = (1+h)^{-k}, P4 = h^{-k}, P5 = h^{-k-1}.
/// Returns the four adjacent comparisons "P_{i+1} weaker than P_i".
std::vector<WeakerVerdict> chain_check(const CoordFn& f, int k, double t_lo, double t_hi,
                                       int grid = 256);
std::vector<Weight> chain_weights();

/// Natural weight against its uniform compensation at starting level h0
/// ((1, 1/h0) for Minkowskian coordinates, (1, 1/(1-h0)) on the sphere),
/// together with the expected order.
enum class CompensatedOrder { CompensatedWeaker, NaturalWeaker };
struct CompensatedPair {
    Weight natural;
    Weight compensated;
    CompensatedOrder expected_order;
};
CompensatedPair compensated_weights(const CoordFn& f, double h0);

}  // namespace hypermono
