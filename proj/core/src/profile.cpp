#include "hypermono/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermono/vec.hpp"

namespace hypermono {

double conformal_factor(ProfileAmbient amb, double rho) {
    switch (amb) {
        case ProfileAmbient::Hyperbolic: {
            const double d = 1.0 - rho;
            return 4.0 / (d * d);
        }
        case ProfileAmbient::Spherical: {
            const double d = 1.0 + rho;
            return 4.0 / (d * d);
        }
        case ProfileAmbient::Euclidean: return 1.0;
    }
    return 1.0;
}

double profile_waist_r(double C, ProfileAmbient amb) {
    switch (amb) {
        case ProfileAmbient::Hyperbolic: {
            const double a = std::sqrt(C + 1.0);
            return std::sqrt((a - 1.0) / (a + 1.0));
        }
        case ProfileAmbient::Spherical: {
            const double q = 1.0 - std::sqrt(1.0 - C);
            return std::sqrt(q * q / C);
        }
        case ProfileAmbient::Euclidean: return std::sqrt(C);
    }
    return 0;
}

double xi0_of_r(double r) {
    const double rho = r * r;
    return (1.0 + rho) / (1.0 - rho);
}

namespace {

// dS/dr; the same closed form -C r (1 - rho^2) / (2 rho^2) covers the
// hyperbolic and spherical factors, and the Euclidean case is the rho -> 0
// coefficient pattern -2 C r / rho^2.
double dsin_psi_dr(double C, ProfileAmbient amb, double r) {
    const double rho = r * r;
    switch (amb) {
        case ProfileAmbient::Hyperbolic:
        case ProfileAmbient::Spherical:
            return -C * r * (1.0 - rho * rho) / (2.0 * rho * rho);
        case ProfileAmbient::Euclidean:
            return -2.0 * C * r / (rho * rho);
    }
    return 0;
}

}  // namespace

State3 ProfileCurve::eval(double s) const {
    if (s >= 0 || backward.nodes.empty()) return forward.eval(s);
    return backward.eval(s);
}

ProfileCurve integrate_profile(double C, ProfileAmbient amb, const ProfileOptions& opt) {
    if (C <= 0) throw std::domain_error("integrate_profile: C must be positive");
    if (amb == ProfileAmbient::Spherical && C >= 1.0)
        throw std::domain_error("integrate_profile: spherical ambient needs C in (0,1)");

    ProfileCurve curve;
    curve.C = C;
    curve.ambient = amb;
    curve.waist_r = profile_waist_r(C, amb);

    const Field3 field = [C, amb](double, const State3& y) -> State3 {
        const double r = y[0], psi = y[2];
        return {std::cos(psi), std::sin(psi) / r, dsin_psi_dr(C, amb, r)};
    };

    const State3 y0{curve.waist_r, 0.0, 0.5 * pi};
    OdeOptions ode;
    ode.tol = opt.ode_tol;
    ode.h_init = std::min(1e-3, 0.1 * curve.waist_r);

    std::function<double(double, const State3&)> event;
    switch (amb) {
        case ProfileAmbient::Hyperbolic: {
            const double r_stop = 1.0 - opt.ball_cap;
            event = [r_stop](double, const State3& y) { return y[0] - r_stop; };
            break;
        }
        case ProfileAmbient::Euclidean: {
            const double r_stop = std::max(opt.r_max, 2.0 * curve.waist_r);
            event = [r_stop](double, const State3& y) { return y[0] - r_stop; };
            break;
        }
        case ProfileAmbient::Spherical:
            // One period: psi returns to pi/2 at the outer waist.
            event = [](double, const State3& y) { return y[2] - 0.5 * pi; };
            break;
    }

    curve.forward = integrate_ode(field, 0.0, y0, +1, event, nullptr, ode);
    if (!curve.forward.event_hit)
        throw std::runtime_error("integrate_profile: forward branch missed its stop event");
    if (amb == ProfileAmbient::Spherical) {
        // Land exactly on the turning point.
        curve.forward.nodes.back().y[2] = 0.5 * pi;
    }

    if (amb != ProfileAmbient::Spherical) {
        curve.backward = integrate_ode(field, 0.0, y0, -1, event, nullptr, ode);
        if (!curve.backward.event_hit)
            throw std::runtime_error("integrate_profile: backward branch missed its stop event");
        for (auto it = curve.backward.nodes.rbegin(); it != curve.backward.nodes.rend(); ++it)
            curve.samples.push_back({it->s, it->y[0], it->y[1], it->y[2]});
        curve.samples.pop_back();  // drop duplicate waist node
    }
    for (const auto& n : curve.forward.nodes)
        curve.samples.push_back({n.s, n.y[0], n.y[1], n.y[2]});
    return curve;
}

double sweep_angle(const ProfileCurve& p) {
    if (p.ambient != ProfileAmbient::Spherical)
        throw std::invalid_argument("sweep_angle: defined for spherical profiles only");
    return p.samples.back().alpha - p.samples.front().alpha;
}

}  // namespace hypermono
