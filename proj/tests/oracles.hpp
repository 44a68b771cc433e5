#pragma once

// Test-only oracles, kept independent of the library's tolerance-bearing
// integration and root-finding paths.

#include <cmath>
#include <functional>
#include <random>

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double central_diff(const std::function<double(double)>& f, double x, double eps) {
    return (f(x + eps) - f(x - eps)) / (2.0 * eps);
}

inline std::mt19937_64 rng(unsigned seed = 0xC0FFEE) { return std::mt19937_64(seed); }

}  // namespace oracles
