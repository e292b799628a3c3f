#pragma once

#include <functional>
#include <vector>

#include "enskog/geometry.hpp"
#include "enskog/profile.hpp"

namespace enskog {

// Node counts for the masked solid-angle integrals. Gauss-Legendre is applied
// in cos(theta) and, per contiguous admissible azimuth interval, in phi.
struct QuadratureSpec {
    int n_theta = 64;
    int n_phi = 64;
};

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1]; nodes ascending and exactly symmetric.
GaussRule gauss_legendre(int n);
// Gauss-Hermite with weight exp(-x^2); nodes ascending and exactly symmetric.
GaussRule gauss_hermite(int n);

// Cached references; rules are immutable once built.
const GaussRule& cached_gauss_legendre(int n);
const GaussRule& cached_gauss_hermite(int n);

using RadialFn = std::function<double(double)>;

// int alpha_P eta(P') dOmega over admissible contact directions at radius P:
// the right-hand-side moment of the cylinder profile equations.
double radial_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                              const QuadratureSpec& spec);

// int alpha_phi eta(P') dOmega; vanishes identically by mask/profile evenness
// in phi. Computed without exploiting that symmetry, as a diagnostic.
double azimuthal_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                                 const QuadratureSpec& spec);

// int alpha_z eta(P') dOmega; vanishes by evenness in cos(theta). Diagnostic.
double axial_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                             const QuadratureSpec& spec);

// 2 pi int cos(theta) eta(r') sin(theta) dtheta over the admissible polar
// range at radius r in a sphere (the azimuthal integral is trivial).
double radial_moment_sphere(const RadialFn& eta, const Domain& domain, double r,
                            const QuadratureSpec& spec);

// -(6/pi) times the radial moment with eta == 1: the residual forced on the
// momentum balance by a uniform density. Strictly positive within one
// diameter of a wall, zero in the interior.
double uniform_infeasibility_indicator(const Domain& domain, double radial_coord,
                                       const QuadratureSpec& spec);

// RadialProfile conveniences.
double radial_moment_cylinder(const RadialProfile& p, const Domain& d, double P, const QuadratureSpec& s);
double azimuthal_moment_cylinder(const RadialProfile& p, const Domain& d, double P, const QuadratureSpec& s);
double axial_moment_cylinder(const RadialProfile& p, const Domain& d, double P, const QuadratureSpec& s);
double radial_moment_sphere(const RadialProfile& p, const Domain& d, double r, const QuadratureSpec& s);

}  // namespace enskog
