#include "enskog/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace enskog {
namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e
constexpr double kBranchSlack = 1e-15;

// One Halley step for f(w) = w e^w - x.
inline double halley_step(double w, double x) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - 0.5 * (w + 2.0) * f / (w + 1.0);
    return w - f / denom;
}

// Series about the branch point x = -1/e in p = sqrt(2(1 + e x)).
inline double branch_series(double p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

inline double initial_guess(double x) {
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * (1.0 + M_E * x));
        return branch_series(p);
    }
    if (std::abs(x) < 0.3) {
        // Maclaurin series; radius of convergence is 1/e, so only used well inside.
        return x * (1.0 + x * (-1.0 + x * (1.5 - x * 8.0 / 3.0)));
    }
    if (x < M_E) return std::log1p(x);
    const double l = std::log(x);
    return l - std::log(l);
}

}  // namespace

double lambert_w0(double x) {
    if (std::isnan(x)) return x;
    if (x < -kInvE) {
        if (x < -kInvE - kBranchSlack) {
            throw std::domain_error("lambert_w0: argument below -1/e");
        }
        x = -kInvE;
    }
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (x > 1e300) return lambert_w0_exp(std::log(x));  // avoids exp overflow mid-iteration

    double w = initial_guess(x);
    if (w <= -1.0 + 1e-7) {
        // Halley degenerates at w = -1; the branch series is already O(p^6) there.
        return std::max(w, -1.0);
    }
    double best_w = w;
    double best_f = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 40; ++it) {
        const double f = std::abs(w * std::exp(w) - x);
        if (f < best_f) {
            best_f = f;
            best_w = w;
        } else if (it > 0) {
            break;  // at the rounding floor
        }
        if (f <= 8e-16 * std::abs(x)) break;
        w = halley_step(w, x);
    }
    return best_w;
}

double lambert_w0_exp(double s) {
    // w e^w = e^s  <=>  w + log w = s  for w > 0.
    if (s < 700.0) return lambert_w0(std::exp(s));
    double w = s - std::log(s);
    for (int it = 0; it < 30; ++it) {
        // Newton on g(w) = w + log w - s, g' = (w + 1)/w.
        const double g = w + std::log(w) - s;
        const double step = g * w / (w + 1.0);
        w -= step;
        if (std::abs(step) <= 1e-16 * w) break;
    }
    return w;
}

}  // namespace enskog
