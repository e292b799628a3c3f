#include "enskog/model.hpp"

#include <cmath>
#include <stdexcept>

namespace enskog {

PhysicalScales::PhysicalScales(double sigma_, double mass_, double RT_)
    : sigma(sigma_), mass(mass_), RT(RT_) {
    if (!(sigma > 0.0) || !(mass > 0.0) || !(RT > 0.0)) {
        throw std::invalid_argument("PhysicalScales: sigma, mass, RT must be strictly positive");
    }
}

RigidMotion::RigidMotion(double u, double w) : u_axial(u), omega(w) {
    if (!std::isfinite(u) || !std::isfinite(w)) {
        throw std::invalid_argument("RigidMotion: parameters must be finite");
    }
    if (w < 0.0) throw std::invalid_argument("RigidMotion: omega must be >= 0 (sign lives in orientation)");
}

Vec3 flow_velocity(const RigidMotion& motion, const Vec3& X) {
    // X x (omega e_z) = (X.y omega, -X.x omega, 0)
    return {motion.omega * X.y, -motion.omega * X.x, motion.u_axial};
}

Vec3 delta_v(const RigidMotion& motion, const Vec3& alpha) {
    if (std::abs(norm(alpha) - 1.0) > 1e-12) {
        throw std::invalid_argument("delta_v: alpha must be a unit vector");
    }
    return {motion.omega * alpha.y, -motion.omega * alpha.x, 0.0};
}

DensityField DensityField::cylindrical(std::function<double(double)> eta) {
    DensityField f;
    f.kind_ = Kind::CylindricalRadial;
    f.radial_ = std::move(eta);
    return f;
}

DensityField DensityField::spherical(std::function<double(double)> eta) {
    DensityField f;
    f.kind_ = Kind::SphericalRadial;
    f.radial_ = std::move(eta);
    return f;
}

DensityField DensityField::cylindrical(RadialProfile profile) {
    auto shared = std::make_shared<RadialProfile>(std::move(profile));
    return cylindrical([shared](double P) { return shared->eval(P); });
}

DensityField DensityField::spherical(RadialProfile profile) {
    auto shared = std::make_shared<RadialProfile>(std::move(profile));
    return spherical([shared](double r) { return shared->eval(r); });
}

DensityField DensityField::generic(std::function<double(const Vec3&)> eta) {
    DensityField f;
    f.kind_ = Kind::Generic;
    f.generic_ = std::move(eta);
    return f;
}

double DensityField::operator()(const Vec3& X) const {
    switch (kind_) {
        case Kind::CylindricalRadial:
            return radial_(cylindrical_radius(X));
        case Kind::SphericalRadial:
            return radial_(norm(X));
        case Kind::Generic:
            return generic_(X);
    }
    return 0.0;
}

const std::function<double(double)>& DensityField::radial_fn() const {
    if (!radial()) throw std::logic_error("DensityField::radial_fn: field has no radial view");
    return radial_;
}

double log_maxwellian(const MaxwellianState& state, const Vec3& X, const Vec3& xi) {
    if (!state.domain.contains(X)) {
        throw std::domain_error("maxwellian: position outside the domain");
    }
    const double eta = state.density(X);
    if (!(eta > 0.0)) throw std::domain_error("maxwellian: density must be positive");
    const double tau = state.temperature_hook ? state.temperature_hook(X) : 1.0;
    const Vec3 c = xi - flow_velocity(state.motion, X);
    return std::log(eta) - 1.5 * std::log(M_PI * tau) - norm2(c) / tau;
}

double maxwellian_eval(const MaxwellianState& state, const Vec3& X, const Vec3& xi) {
    return std::exp(log_maxwellian(state, X, xi));
}

}  // namespace enskog
