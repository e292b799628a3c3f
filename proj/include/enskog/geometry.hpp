#pragma once

#include "enskog/vec3.hpp"

namespace enskog {

enum class DomainKind { Unbounded, Cylinder, Sphere };

// Region accessible to molecular CENTERS, in reduced units (diameter = 1).
// For the bounded variants the radius is the maximal radial coordinate of a
// center; the physical surface sits half a diameter further out.
class Domain {
  public:
    static Domain unbounded() { return Domain(DomainKind::Unbounded, 0.0); }
    static Domain cylinder(double center_radius);
    static Domain sphere(double center_radius);

    DomainKind kind() const { return kind_; }
    bool bounded() const { return kind_ != DomainKind::Unbounded; }

    // Center-accessible radius R_D; throws for the unbounded domain.
    double radius() const;

    // Whether a molecular center at X lies inside D.
    bool contains(const Vec3& X) const;

    // Radial coordinate used by this domain's density fields: cylindrical P
    // for Cylinder, spherical r for Sphere. Unbounded defaults to cylindrical.
    double radial_coordinate(const Vec3& X) const;

  private:
    Domain(DomainKind k, double r) : kind_(k), radius_(r) {}
    DomainKind kind_;
    double radius_;
};

// Center of the collision partner: X + alpha (sigma = 1).
inline Vec3 contact_point(const Vec3& X, const Vec3& alpha) { return X + alpha; }

// Distance of the contact point from the cylinder axis. theta is the polar
// angle of the contact direction measured from e_z, phi its azimuth measured
// from the outward radial direction at X.
double contact_radius_cylinder(double P, double theta, double phi);

// Spherical radius of the contact point; theta measured from e_r at X.
inline double contact_radius_sphere(double r, double cos_theta) {
    return std::sqrt(r * r + 1.0 + 2.0 * r * cos_theta);
}

// Azimuthal admissibility at one polar angle: either the whole circle, none
// of it, or the symmetric band phi in [phi_star, 2*pi - phi_star].
struct AzimuthalMask {
    enum class Kind { Full, Empty, Cut };
    Kind kind = Kind::Full;
    double phi_star = 0.0;  // meaningful for Kind::Cut only
};

// Admissible azimuth range for contact directions at radius P and polar
// angle theta in a cylinder: cos(phi) <= (R^2 - P^2 - sin^2(theta)) / (2 P sin(theta)).
// Degenerate axes (P = 0 or sin(theta) = 0) fall back to testing the contact
// radius directly.
AzimuthalMask phi_cutoff_cylinder(const Domain& domain, double P, double theta);

// Upper cutoff c on cos(theta_alpha) for contact directions at radius r in a
// sphere: admissible directions satisfy cos(theta_alpha) <= c, clamped to
// [-1, 1] (c = 1 means the full sphere of directions).
double cos_theta_cutoff_sphere(const Domain& domain, double r);

}  // namespace enskog
