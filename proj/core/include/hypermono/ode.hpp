#pragma once

#include <array>
#include <functional>
#include <vector>

namespace hypermono {

using State3 = std::array<double, 3>;
using Field3 = std::function<State3(double, const State3&)>;

/// One accepted step: abscissa, state and derivative (for Hermite dense output).
struct OdeNode {
    double s;
    State3 y;
    State3 dy;
};

/// Accepted-step trajectory of an adaptive Dormand-Prince 5(4) integration.
/// Nodes are ordered by |s - s0| in integration direction.
struct Trajectory {
    std::vector<OdeNode> nodes;
    bool event_hit = false;

    /// Cubic Hermite interpolation between the bracketing nodes.
    State3 eval(double s) const;
    double s_begin() const { return nodes.front().s; }
    double s_end() const { return nodes.back().s; }
};

struct OdeOptions {
    double tol = 1e-11;     // local error per step, mixed abs/rel
    double h_init = 1e-3;
    double h_min = 1e-14;   // throws below this (step-size underflow)
    double s_max_span = 1e4;
};

/// Integrates dy/ds = f(s, y) from (s0, y0) in the given direction (+1/-1)
/// until an event function changes sign (located by bisection on the dense
/// output to |s| tolerance 1e-10) or the stop predicate returns true at an
/// accepted node.  Either callback may be null.
Trajectory integrate_ode(const Field3& f, double s0, const State3& y0, int direction,
                         const std::function<double(double, const State3&)>& event,
                         const std::function<bool(double, const State3&)>& stop,
                         const OdeOptions& opt = {});

}  // namespace hypermono
