#include "enskog/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace enskog {
namespace {

void check_spec(const QuadratureSpec& spec) {
    if (spec.n_theta < 4 || spec.n_phi < 4) {
        throw std::invalid_argument("QuadratureSpec: n_theta and n_phi must be >= 4");
    }
}

// Kahan-compensated accumulator; the moment sums mix thousands of terms and
// some checks need them at 1e-12 absolute.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct Interval {
    double lo, hi;
};

// Polar subintervals in mu = cos(theta). Near a cylinder wall the azimuthal
// mask engages only for sin(theta) > R - P; splitting there keeps the Gauss
// rule on smooth integrands.
std::vector<Interval> polar_intervals_cylinder(const Domain& domain, double P) {
    if (domain.kind() == DomainKind::Unbounded) return {{-1.0, 1.0}};
    const double R = domain.radius();
    if (P < 0.0 || P > R) throw std::domain_error("cylinder moment: P outside [0, R]");
    const double gap = R - P;
    if (gap >= 1.0) return {{-1.0, 1.0}};
    const double mu_c = std::sqrt(std::max(0.0, 1.0 - gap * gap));
    if (mu_c >= 1.0 - 1e-14) return {{-1.0, 1.0}};
    return {{-1.0, -mu_c}, {-mu_c, mu_c}, {mu_c, 1.0}};
}

AzimuthalMask mask_at(const Domain& domain, double P, double sin_theta) {
    if (domain.kind() == DomainKind::Unbounded) return {AzimuthalMask::Kind::Full, 0.0};
    return phi_cutoff_cylinder(domain, P, std::asin(std::min(1.0, sin_theta)));
}

// Generic masked cylinder moment: weight_phi(phi) is the azimuthal factor of
// the integrand (cos, sin, or 1); polar_factor(mu, s) the remaining factor.
template <class PhiWeight, class PolarFactor>
double cylinder_moment(const RadialFn& eta, const Domain& domain, double P,
                       const QuadratureSpec& spec, PhiWeight&& wphi, PolarFactor&& wpol,
                       bool half_circle) {
    check_spec(spec);
    const GaussRule& mu_rule = cached_gauss_legendre(spec.n_theta);
    const GaussRule& phi_rule = cached_gauss_legendre(spec.n_phi);

    KahanSum total;
    for (const Interval& seg : polar_intervals_cylinder(domain, P)) {
        const double mid = 0.5 * (seg.lo + seg.hi);
        const double hw = 0.5 * (seg.hi - seg.lo);
        KahanSum seg_sum;
        for (std::size_t i = 0; i < mu_rule.nodes.size(); ++i) {
            const double mu = mid + hw * mu_rule.nodes[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            const AzimuthalMask mask = mask_at(domain, P, s);
            if (mask.kind == AzimuthalMask::Kind::Empty) continue;
            const double phi_star = mask.kind == AzimuthalMask::Kind::Full ? 0.0 : mask.phi_star;

            KahanSum inner;
            const double lo = phi_star;
            const double hi = half_circle ? M_PI : 2.0 * M_PI - phi_star;
            const double pm = 0.5 * (lo + hi);
            const double ph = 0.5 * (hi - lo);
            for (std::size_t j = 0; j < phi_rule.nodes.size(); ++j) {
                const double phi = pm + ph * phi_rule.nodes[j];
                const double q = P * P + s * s + 2.0 * P * s * std::cos(phi);
                inner.add(phi_rule.weights[j] * wphi(phi) * eta(std::sqrt(std::max(q, 0.0))));
            }
            const double scale = ph * (half_circle ? 2.0 : 1.0);
            seg_sum.add(mu_rule.weights[i] * wpol(mu, s) * inner.sum * scale);
        }
        total.add(hw * seg_sum.sum);
    }
    return total.sum;
}

}  // namespace

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        if (n % 2 == 1 && i == m - 1) z = 0.0;
        // Recompute pp at the final node for the weight.
        double p1 = 1.0, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
        }
        pp = (z * z == 1.0) ? pp : n * (z * p1 - p2) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

GaussRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pim4 = 0.7511255444649425;  // pi^(-1/4)
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[n - 1];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[n - 2];
        } else {
            z = 2.0 * z - rule.nodes[n - i + 1];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        if (n % 2 == 1 && i == m - 1) z = 0.0;
        double p1 = pim4, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
        }
        pp = std::sqrt(2.0 * n) * p2;
        const double w = 2.0 / (pp * pp);
        rule.nodes[n - 1 - i] = z;
        rule.nodes[i] = -z;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    return rule;
}

const GaussRule& cached_gauss_legendre(int n) {
    static std::mutex mu;
    static std::unordered_map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

const GaussRule& cached_gauss_hermite(int n) {
    static std::mutex mu;
    static std::unordered_map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_hermite(n)).first;
    return it->second;
}

double radial_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                              const QuadratureSpec& spec) {
    if (domain.kind() == DomainKind::Sphere) {
        throw std::invalid_argument("radial_moment_cylinder: spherical domain");
    }
    return cylinder_moment(
        eta, domain, P, spec, [](double phi) { return std::cos(phi); },
        [](double, double s) { return s; }, /*half_circle=*/true);
}

double azimuthal_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                                 const QuadratureSpec& spec) {
    if (domain.kind() == DomainKind::Sphere) {
        throw std::invalid_argument("azimuthal_moment_cylinder: spherical domain");
    }
    return cylinder_moment(
        eta, domain, P, spec, [](double phi) { return std::sin(phi); },
        [](double, double s) { return s; }, /*half_circle=*/false);
}

double axial_moment_cylinder(const RadialFn& eta, const Domain& domain, double P,
                             const QuadratureSpec& spec) {
    if (domain.kind() == DomainKind::Sphere) {
        throw std::invalid_argument("axial_moment_cylinder: spherical domain");
    }
    return cylinder_moment(
        eta, domain, P, spec, [](double) { return 1.0; },
        [](double mu, double) { return mu; }, /*half_circle=*/true);
}

double radial_moment_sphere(const RadialFn& eta, const Domain& domain, double r,
                            const QuadratureSpec& spec) {
    check_spec(spec);
    if (domain.kind() == DomainKind::Cylinder) {
        throw std::invalid_argument("radial_moment_sphere: cylindrical domain");
    }
    double cutoff = 1.0;
    if (domain.kind() == DomainKind::Sphere) cutoff = cos_theta_cutoff_sphere(domain, r);
    if (cutoff <= -1.0) return 0.0;
    const GaussRule& mu_rule = cached_gauss_legendre(spec.n_theta);
    const double mid = 0.5 * (-1.0 + cutoff);
    const double hw = 0.5 * (cutoff + 1.0);
    KahanSum acc;
    for (std::size_t i = 0; i < mu_rule.nodes.size(); ++i) {
        const double mu = mid + hw * mu_rule.nodes[i];
        acc.add(mu_rule.weights[i] * mu * eta(contact_radius_sphere(r, mu)));
    }
    return 2.0 * M_PI * hw * acc.sum;
}

double uniform_infeasibility_indicator(const Domain& domain, double radial_coord,
                                       const QuadratureSpec& spec) {
    const RadialFn one = [](double) { return 1.0; };
    const double moment = domain.kind() == DomainKind::Sphere
                              ? radial_moment_sphere(one, domain, radial_coord, spec)
                              : radial_moment_cylinder(one, domain, radial_coord, spec);
    return -(6.0 / M_PI) * moment;
}

double radial_moment_cylinder(const RadialProfile& p, const Domain& d, double P,
                              const QuadratureSpec& s) {
    return radial_moment_cylinder([&p](double x) { return p.eval(x); }, d, P, s);
}
double azimuthal_moment_cylinder(const RadialProfile& p, const Domain& d, double P,
                                 const QuadratureSpec& s) {
    return azimuthal_moment_cylinder([&p](double x) { return p.eval(x); }, d, P, s);
}
double axial_moment_cylinder(const RadialProfile& p, const Domain& d, double P,
                             const QuadratureSpec& s) {
    return axial_moment_cylinder([&p](double x) { return p.eval(x); }, d, P, s);
}
double radial_moment_sphere(const RadialProfile& p, const Domain& d, double r,
                            const QuadratureSpec& s) {
    return radial_moment_sphere([&p](double x) { return p.eval(x); }, d, r, s);
}

}  // namespace enskog
