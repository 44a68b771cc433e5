#include "hypermono/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypermono {

namespace {

State3 axpy(const State3& y, double h, const State3& d) {
    return {y[0] + h * d[0], y[1] + h * d[1], y[2] + h * d[2]};
}

// Dormand-Prince RK5(4) pair.
struct DpResult {
    State3 y5;
    State3 k_last;  // FSAL derivative at the step end
    double err;
};

DpResult dp_step(const Field3& f, double s, const State3& y, const State3& k1, double h) {
    const State3 k2 = f(s + h / 5, axpy(y, h / 5, k1));
    State3 t{};
    for (int i = 0; i < 3; ++i) t[i] = y[i] + h * (3.0 / 40 * k1[i] + 9.0 / 40 * k2[i]);
    const State3 k3 = f(s + 3.0 / 10 * h, t);
    for (int i = 0; i < 3; ++i)
        t[i] = y[i] + h * (44.0 / 45 * k1[i] - 56.0 / 15 * k2[i] + 32.0 / 9 * k3[i]);
    const State3 k4 = f(s + 4.0 / 5 * h, t);
    for (int i = 0; i < 3; ++i)
        t[i] = y[i] + h * (19372.0 / 6561 * k1[i] - 25360.0 / 2187 * k2[i] +
                           64448.0 / 6561 * k3[i] - 212.0 / 729 * k4[i]);
    const State3 k5 = f(s + 8.0 / 9 * h, t);
    for (int i = 0; i < 3; ++i)
        t[i] = y[i] + h * (9017.0 / 3168 * k1[i] - 355.0 / 33 * k2[i] + 46732.0 / 5247 * k3[i] +
                           49.0 / 176 * k4[i] - 5103.0 / 18656 * k5[i]);
    const State3 k6 = f(s + h, t);
    State3 y5{};
    for (int i = 0; i < 3; ++i)
        y5[i] = y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] + 125.0 / 192 * k4[i] -
                            2187.0 / 6784 * k5[i] + 11.0 / 84 * k6[i]);
    const State3 k7 = f(s + h, y5);
    // Embedded 4th-order solution for the error estimate.
    State3 y4{};
    for (int i = 0; i < 3; ++i)
        y4[i] = y[i] + h * (5179.0 / 57600 * k1[i] + 7571.0 / 16695 * k3[i] +
                            393.0 / 640 * k4[i] - 92097.0 / 339200 * k5[i] +
                            187.0 / 2100 * k6[i] + 1.0 / 40 * k7[i]);
    double err = 0;
    for (int i = 0; i < 3; ++i) {
        const double sc = 1.0 + std::max(std::abs(y[i]), std::abs(y5[i]));
        err = std::max(err, std::abs(y5[i] - y4[i]) / sc);
    }
    return {y5, k7, err};
}

}  // namespace

State3 Trajectory::eval(double s) const {
    const bool fwd = nodes.back().s >= nodes.front().s;
    size_t lo = 0, hi = nodes.size() - 1;
    if (nodes.size() >= 2) {
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            const bool left = fwd ? nodes[mid].s <= s : nodes[mid].s >= s;
            (left ? lo : hi) = mid;
        }
    }
    const OdeNode& a = nodes[lo];
    const OdeNode& b = nodes[hi];
    const double h = b.s - a.s;
    if (h == 0) return a.y;
    const double t = (s - a.s) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    State3 y{};
    for (int i = 0; i < 3; ++i)
        y[i] = h00 * a.y[i] + h10 * h * a.dy[i] + h01 * b.y[i] + h11 * h * b.dy[i];
    return y;
}

Trajectory integrate_ode(const Field3& f, double s0, const State3& y0, int direction,
                         const std::function<double(double, const State3&)>& event,
                         const std::function<bool(double, const State3&)>& stop,
                         const OdeOptions& opt) {
    Trajectory traj;
    double s = s0;
    State3 y = y0;
    State3 k1 = f(s, y);
    traj.nodes.push_back({s, y, k1});
    double h = opt.h_init * direction;
    double ev_prev = event ? event(s, y) : 0.0;

    while (std::abs(s - s0) < opt.s_max_span) {
        const DpResult r = dp_step(f, s, y, k1, h);
        if (r.err > opt.tol) {
            h *= std::max(0.2, 0.9 * std::pow(opt.tol / r.err, 0.2));
            if (std::abs(h) < opt.h_min)
                throw std::runtime_error("integrate_ode: step-size underflow (singular field?)");
            continue;
        }
        const double s_new = s + h;
        traj.nodes.push_back({s_new, r.y5, r.k_last});

        if (event) {
            const double ev_new = event(s_new, r.y5);
            if (ev_prev != 0.0 && ev_new != 0.0 && ev_prev * ev_new < 0) {
                // Locate the crossing on the dense output.
                double lo = s, hi = s_new;
                double flo = ev_prev;
                for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-10; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = event(mid, traj.eval(mid));
                    if (fm == 0) {
                        lo = hi = mid;
                        break;
                    }
                    if (flo * fm < 0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                const double s_ev = 0.5 * (lo + hi);
                const State3 y_ev = traj.eval(s_ev);
                traj.nodes.back() = {s_ev, y_ev, f(s_ev, y_ev)};
                traj.event_hit = true;
                return traj;
            }
            ev_prev = ev_new;
        }
        s = s_new;
        y = r.y5;
        k1 = r.k_last;
        if (stop && stop(s, y)) return traj;
        const double grow = r.err > 0 ? 0.9 * std::pow(opt.tol / r.err, 0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, grow));
        if (std::abs(h) < opt.h_min)
            throw std::runtime_error("integrate_ode: step-size underflow (singular field?)");
    }
    throw std::runtime_error("integrate_ode: exceeded s_max_span without meeting a stop condition");
}

}  // namespace hypermono
