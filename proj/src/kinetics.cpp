#include "enskog/kinetics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "enskog/threading.hpp"

namespace enskog {
namespace {

void check_unit(const Vec3& alpha, const char* who) {
    if (std::abs(norm(alpha) - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(who) + ": alpha must be a unit vector");
    }
}

// Orthonormal pair completing the unit vector n.
std::pair<Vec3, Vec3> orthonormal_frame(const Vec3& n) {
    const Vec3 seed = std::abs(n.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
    Vec3 e1 = cross(seed, n);
    e1 = (1.0 / norm(e1)) * e1;
    const Vec3 e2 = cross(n, e1);
    return {e1, e2};
}

}  // namespace

std::pair<Vec3, Vec3> collide(const Vec3& xi, const Vec3& xi_star, const Vec3& alpha) {
    check_unit(alpha, "collide");
    const double v_alpha = dot(xi_star - xi, alpha);
    return {xi + v_alpha * alpha, xi_star - v_alpha * alpha};
}

ConservationResiduals conservation_residuals(const Vec3& X, const Vec3& alpha, const Vec3& xi,
                                             const Vec3& xi_star) {
    check_unit(alpha, "conservation_residuals");
    const auto [xi_p, xi_star_p] = collide(xi, xi_star, alpha);
    const Vec3 Xm = X - alpha;
    ConservationResiduals r;
    r.momentum = (xi + xi_star) - (xi_p + xi_star_p);
    r.energy = (norm2(xi) + norm2(xi_star)) - (norm2(xi_p) + norm2(xi_star_p));
    r.angular_momentum = (cross(X, xi) + cross(Xm, xi_star)) - (cross(X, xi_p) + cross(Xm, xi_star_p));
    return r;
}

double summational_invariant_residual(const MaxwellianState& state, const Vec3& X,
                                      const Vec3& alpha, const Vec3& xi, const Vec3& xi_star) {
    check_unit(alpha, "summational_invariant_residual");
    const auto [xi_p, xi_star_p] = collide(xi, xi_star, alpha);
    const Vec3 Xm = X - alpha;
    return log_maxwellian(state, Xm, xi_star_p) + log_maxwellian(state, X, xi_p) -
           log_maxwellian(state, Xm, xi_star) - log_maxwellian(state, X, xi);
}

double collision_integral_reduced(const MaxwellianState& state, const Vec3& X, const Vec3& xi,
                                  const QuadratureSpec& spec) {
    if (!state.density.radial()) {
        throw std::logic_error("collision_integral_reduced: requires an axisymmetric radial density");
    }
    const auto& eta = state.density.radial_fn();
    Vec3 moment{0.0, 0.0, 0.0};
    if (state.density.kind() == DensityField::Kind::CylindricalRadial) {
        const double P = cylindrical_radius(X);
        const double ip = radial_moment_cylinder(eta, state.domain, P, spec);
        // The azimuthal and axial components vanish by mask/profile symmetry.
        if (P > 0.0) moment = ip * Vec3{X.x / P, X.y / P, 0.0};
    } else {
        const double r = norm(X);
        const double ir = radial_moment_sphere(eta, state.domain, r, spec);
        if (r > 0.0) moment = ir * (1.0 / r) * X;
    }
    const Vec3 c = xi - flow_velocity(state.motion, X);
    return -(6.0 / M_PI) * maxwellian_eval(state, X, xi) * dot(c, moment);
}

double collision_integral_direct(const MaxwellianState& state, const Vec3& X, const Vec3& xi,
                                 const DirectSpec& spec) {
    if (spec.gh_order < 2 || spec.n_alpha_polar < 2 || spec.n_alpha_azimuth < 2) {
        throw std::invalid_argument("collision_integral_direct: quadrature orders too small");
    }
    const GaussRule& gh = cached_gauss_hermite(spec.gh_order);
    const GaussRule& polar = cached_gauss_legendre(spec.n_alpha_polar);
    const Vec3 v_X = flow_velocity(state.motion, X);
    const double log_f_X_xi = log_maxwellian(state, X, xi);

    const int n_psi = spec.n_alpha_azimuth;
    const double w_psi = 2.0 * M_PI / n_psi;
    const std::size_t n = static_cast<std::size_t>(spec.gh_order);

    // Partial sums per outermost Gauss-Hermite slice; summed in index order so
    // the result does not depend on the thread partition.
    std::vector<double> partial(n, 0.0);
    parallel_for(n, [&](std::size_t i1) {
        double acc = 0.0;
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            for (std::size_t i3 = 0; i3 < n; ++i3) {
                const Vec3 t{gh.nodes[i1], gh.nodes[i2], gh.nodes[i3]};
                const double w3 = gh.weights[i1] * gh.weights[i2] * gh.weights[i3];
                const double t2 = norm2(t);
                const Vec3 xi_star = v_X + t;
                const Vec3 V = xi_star - xi;
                const double vn = norm(V);
                if (vn < 1e-14) continue;
                const Vec3 vhat = (1.0 / vn) * V;
                const auto [e1, e2] = orthonormal_frame(vhat);

                double sum_alpha = 0.0;
                for (std::size_t ip = 0; ip < polar.nodes.size(); ++ip) {
                    // mu in [0, 1]: half-sphere V.alpha >= 0.
                    const double mu = 0.5 + 0.5 * polar.nodes[ip];
                    const double w_mu = 0.5 * polar.weights[ip];
                    const double smu = std::sqrt(std::max(0.0, 1.0 - mu * mu));
                    const double v_alpha = vn * mu;
                    for (int ia = 0; ia < n_psi; ++ia) {
                        const double psi = w_psi * (ia + 0.5);
                        const Vec3 alpha = mu * vhat + smu * (std::cos(psi) * e1 + std::sin(psi) * e2);
                        const double w_ang = w_mu * w_psi * v_alpha;

                        const Vec3 Xp = X + alpha;
                        if (state.domain.contains(Xp)) {
                            const Vec3 xi_p = xi + v_alpha * alpha;
                            const Vec3 xi_star_p = xi_star - v_alpha * alpha;
                            const double lg = log_maxwellian(state, Xp, xi_star_p) +
                                              log_maxwellian(state, X, xi_p);
                            sum_alpha += w_ang * std::exp(lg + t2);
                        }
                        const Vec3 Xm = X - alpha;
                        if (state.domain.contains(Xm)) {
                            const double ll = log_maxwellian(state, Xm, xi_star) + log_f_X_xi;
                            sum_alpha -= w_ang * std::exp(ll + t2);
                        }
                    }
                }
                acc += w3 * sum_alpha;
            }
        }
        partial[i1] = acc;
    });

    double total = 0.0;
    for (double p : partial) total += p;
    return 6.0 / M_PI * total;
}

}  // namespace enskog
