#pragma once

#include <utility>

#include "enskog/model.hpp"
#include "enskog/quadrature.hpp"

namespace enskog {

// Pre-collision pair and the contact direction between the two centers.
struct CollisionPair {
    Vec3 xi;
    Vec3 xi_star;
    Vec3 alpha;       // unit vector
    double v_alpha;   // (xi_star - xi) . alpha
};

// Hard-sphere velocity exchange: xi' = xi + V_alpha alpha,
// xi*' = xi* - V_alpha alpha. Applying it twice restores the pair.
std::pair<Vec3, Vec3> collide(const Vec3& xi, const Vec3& xi_star, const Vec3& alpha);

struct ConservationResiduals {
    Vec3 momentum;
    double energy;
    Vec3 angular_momentum;  // about the origin, centers at X and X - alpha
};

ConservationResiduals conservation_residuals(const Vec3& X, const Vec3& alpha, const Vec3& xi,
                                             const Vec3& xi_star);

// log f*'(X-alpha) + log f'(X) - log f*(X-alpha) - log f(X) for the
// rigid-motion Maxwellian. Zero (to rounding) for any positive density field
// at constant temperature; a position-dependent temperature_hook breaks it.
double summational_invariant_residual(const MaxwellianState& state, const Vec3& X,
                                      const Vec3& alpha, const Vec3& xi, const Vec3& xi_star);

// Collision integral of the Maxwellian in its reduced form:
// -(6/pi) f(X,xi) (xi - v(X)) . int alpha eta(X + alpha) chi_D dOmega.
double collision_integral_reduced(const MaxwellianState& state, const Vec3& X, const Vec3& xi,
                                  const QuadratureSpec& spec);

// Quadrature orders for the direct gain-loss evaluation.
struct DirectSpec {
    int gh_order = 24;        // Gauss-Hermite per velocity axis
    int n_alpha_polar = 16;   // on the half-sphere V.alpha >= 0
    int n_alpha_azimuth = 16;
};

// Direct evaluation of (6/pi)[J_gain - J_loss] by tensor Gauss-Hermite over
// xi* and solid-angle quadrature over the half-sphere V.alpha >= 0, with
// post-collision velocities from collide(). Cross-validates the reduced form.
double collision_integral_direct(const MaxwellianState& state, const Vec3& X, const Vec3& xi,
                                 const DirectSpec& spec);

}  // namespace enskog
