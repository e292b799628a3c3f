#include "enskog/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace enskog {

Domain Domain::cylinder(double center_radius) {
    if (!(center_radius >= 1.0)) {
        throw std::invalid_argument("Domain::cylinder: center-accessible radius must be >= 1 diameter");
    }
    return Domain(DomainKind::Cylinder, center_radius);
}

Domain Domain::sphere(double center_radius) {
    if (!(center_radius >= 1.0)) {
        throw std::invalid_argument("Domain::sphere: center-accessible radius must be >= 1 diameter");
    }
    return Domain(DomainKind::Sphere, center_radius);
}

double Domain::radius() const {
    if (kind_ == DomainKind::Unbounded) {
        throw std::logic_error("Domain::radius: unbounded domain has no radius");
    }
    return radius_;
}

bool Domain::contains(const Vec3& X) const {
    switch (kind_) {
        case DomainKind::Unbounded:
            return true;
        case DomainKind::Cylinder:
            return cylindrical_radius(X) <= radius_;
        case DomainKind::Sphere:
            return norm(X) <= radius_;
    }
    return false;
}

double Domain::radial_coordinate(const Vec3& X) const {
    return kind_ == DomainKind::Sphere ? norm(X) : cylindrical_radius(X);
}

double contact_radius_cylinder(double P, double theta, double phi) {
    const double s = std::sin(theta);
    const double q = P * P + s * s + 2.0 * P * s * std::cos(phi);
    return std::sqrt(std::max(q, 0.0));
}

AzimuthalMask phi_cutoff_cylinder(const Domain& domain, double P, double theta) {
    if (domain.kind() != DomainKind::Cylinder) {
        throw std::invalid_argument("phi_cutoff_cylinder: domain is not a cylinder");
    }
    const double R = domain.radius();
    if (P < 0.0 || P > R) {
        throw std::domain_error("phi_cutoff_cylinder: P outside [0, R]");
    }
    const double s = std::sin(theta);
    if (P == 0.0 || s == 0.0) {
        // No azimuthal dependence; the contact radius is fixed.
        const double pc = std::sqrt(P * P + s * s);
        return {pc <= R ? AzimuthalMask::Kind::Full : AzimuthalMask::Kind::Empty, 0.0};
    }
    const double c = (R * R - P * P - s * s) / (2.0 * P * s);
    if (c >= 1.0) return {AzimuthalMask::Kind::Full, 0.0};
    if (c <= -1.0) return {AzimuthalMask::Kind::Empty, 0.0};
    return {AzimuthalMask::Kind::Cut, std::acos(c)};
}

double cos_theta_cutoff_sphere(const Domain& domain, double r) {
    if (domain.kind() != DomainKind::Sphere) {
        throw std::invalid_argument("cos_theta_cutoff_sphere: domain is not a sphere");
    }
    const double R = domain.radius();
    if (r < 0.0 || r > R) {
        throw std::domain_error("cos_theta_cutoff_sphere: r outside [0, R]");
    }
    if (r == 0.0) {
        // Contact radius is 1 regardless of direction; R >= 1 guarantees admissibility.
        return 1.0;
    }
    const double c = (R * R - r * r - 1.0) / (2.0 * r);
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace enskog
