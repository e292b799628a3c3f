#pragma once

#include <functional>
#include <memory>

#include "enskog/geometry.hpp"
#include "enskog/profile.hpp"
#include "enskog/vec3.hpp"

namespace enskog {

// Laboratory scales. Everything else in the library works in reduced units
// (lengths in sigma, velocities in sqrt(2RT), densities as volume fraction);
// conversions live here and at the CLI boundary only.
struct PhysicalScales {
    double sigma;  // molecular diameter [m]
    double mass;   // molecular mass [kg]
    double RT;     // specific gas constant times temperature [m^2/s^2]

    PhysicalScales(double sigma_, double mass_, double RT_);

    double velocity_scale() const { return std::sqrt(2.0 * RT); }
    double reduced_omega(double omega_lab) const { return omega_lab * sigma / velocity_scale(); }
    double reduced_speed(double u_lab) const { return u_lab / velocity_scale(); }
    double reduced_length(double x_lab) const { return x_lab / sigma; }
    // eta = (pi/6) (sigma^3/m) rho.
    double volume_fraction(double rho_lab) const { return M_PI / 6.0 * sigma * sigma * sigma / mass * rho_lab; }
    double mass_density(double eta) const { return eta * 6.0 / M_PI * mass / (sigma * sigma * sigma); }
};

// Uniform axial flow plus rigid rotation about the z-axis, reduced units.
struct RigidMotion {
    double u_axial = 0.0;  // units sqrt(2RT)
    double omega = 0.0;    // units sqrt(2RT)/sigma, >= 0 by convention

    RigidMotion(double u, double w);
    RigidMotion() = default;
};

// v(X) = u e_z + X x (omega e_z); the azimuthal component is -P omega.
Vec3 flow_velocity(const RigidMotion& motion, const Vec3& X);

// Flow-velocity jump across one diameter of contact: alpha x (omega e_z).
// Orthogonal to alpha for every contact direction.
Vec3 delta_v(const RigidMotion& motion, const Vec3& alpha);

// Positive density field evaluated at 3-D positions. Axisymmetric fields are
// built from a radial function (or profile) plus the coordinate it depends
// on; those retain a radial view that the reduced collision integral uses.
class DensityField {
  public:
    enum class Kind { CylindricalRadial, SphericalRadial, Generic };

    static DensityField cylindrical(std::function<double(double)> eta);
    static DensityField spherical(std::function<double(double)> eta);
    static DensityField cylindrical(RadialProfile profile);
    static DensityField spherical(RadialProfile profile);
    static DensityField generic(std::function<double(const Vec3&)> eta);

    double operator()(const Vec3& X) const;
    Kind kind() const { return kind_; }
    bool radial() const { return kind_ != Kind::Generic; }
    // Radial evaluator; throws for Generic fields.
    const std::function<double(double)>& radial_fn() const;

  private:
    DensityField() = default;
    Kind kind_ = Kind::Generic;
    std::function<double(double)> radial_;
    std::function<double(const Vec3&)> generic_;
};

// Local Maxwellian data: flow, domain, density field. The reduced temperature
// is fixed (the exponent is |xi - v|^2); temperature_hook exists solely so
// tests can inject a position-dependent temperature and confirm the
// summational-invariant check has power against it.
struct MaxwellianState {
    RigidMotion motion;
    Domain domain = Domain::unbounded();
    DensityField density = DensityField::generic([](const Vec3&) { return 1.0; });
    std::function<double(const Vec3&)> temperature_hook;  // reduced tau(X); empty = 1
};

// f(X, xi) = eta(X) pi^(-3/2) exp(-|xi - v(X)|^2); integrates to eta(X).
double maxwellian_eval(const MaxwellianState& state, const Vec3& X, const Vec3& xi);

// log f, evaluated without forming the exponential.
double log_maxwellian(const MaxwellianState& state, const Vec3& X, const Vec3& xi);

}  // namespace enskog
