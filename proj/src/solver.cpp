#include "enskog/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "enskog/lambert_w.hpp"
#include "enskog/threading.hpp"

namespace enskog {
namespace {

// Cumulative integral with L[0] = 0 chosen as the exact discrete inverse of
// the centered difference: (L[i+1] - L[i-1]) / (2h) == g[i] for all interior
// nodes, so a converged iterate satisfies the reported equation residual by
// construction. L[1] comes from a one-sided cubic rule.
std::vector<double> cumulative_leapfrog(const std::vector<double>& g, double h) {
    const std::size_t n = g.size();
    std::vector<double> L(n, 0.0);
    if (n < 4) throw std::invalid_argument("cumulative_leapfrog: need at least 4 nodes");
    L[1] = h / 24.0 * (9.0 * g[0] + 19.0 * g[1] - 5.0 * g[2] + g[3]);
    for (std::size_t i = 1; i + 1 < n; ++i) L[i + 1] = L[i - 1] + 2.0 * h * g[i];
    return L;
}

double solve_radius(const Domain& domain, const SolverConfig& config) {
    return domain.bounded() ? domain.radius() : config.truncation_radius;
}

// Right-hand side g(P) of the profile equation at every grid node.
std::vector<double> rhs_at_nodes(const RadialProfile& profile, const Domain& domain, double omega,
                                 const QuadratureSpec& spec, bool sphere) {
    const auto& x = profile.nodes();
    std::vector<double> g(x.size(), 0.0);
    const RadialFn eta = [&profile](double p) { return profile.eval(p); };
    parallel_for(x.size(), [&](std::size_t i) {
        if (sphere) {
            g[i] = -(6.0 / M_PI) * radial_moment_sphere(eta, domain, x[i], spec);
        } else {
            g[i] = 2.0 * omega * omega * x[i] -
                   (6.0 / M_PI) * radial_moment_cylinder(eta, domain, x[i], spec);
        }
    });
    g[0] = 0.0;  // axis symmetry: d ln eta / dP vanishes at the origin
    return g;
}

double apply_normalization(std::vector<double>& ln_eta, const std::vector<double>& grid,
                           const Domain& domain, const Normalization& norm) {
    double shift = 0.0;
    if (norm.kind == Normalization::Kind::AxisValue) {
        shift = std::log(norm.value) - ln_eta[0];
    } else {
        std::vector<double> vals(ln_eta.size());
        for (std::size_t i = 0; i < ln_eta.size(); ++i) vals[i] = std::exp(ln_eta[i]);
        const double mean = mean_volume_fraction(RadialProfile(grid, vals), domain);
        shift = std::log(norm.value / mean);
    }
    for (double& v : ln_eta) v += shift;
    return shift;
}

SolveResult picard_solve(const Domain& domain, double omega, const SolverConfig& config,
                         bool sphere) {
    validate(config, domain);
    const double R = solve_radius(domain, config);
    const std::vector<double> grid = uniform_grid(R, config.grid_spacing);
    const double h = grid[1] - grid[0];
    const Extension ext = domain.bounded() ? Extension::Bounded : config.far_field;

    std::vector<double> ln_eta(grid.size());
    if (config.initial) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ln_eta[i] = std::log(config.initial->eval(grid[i]));
        }
    } else {
        std::fill(ln_eta.begin(), ln_eta.end(), std::log(config.normalization.value));
    }
    apply_normalization(ln_eta, grid, domain, config.normalization);

    auto make_profile = [&](const std::vector<double>& ln) {
        std::vector<double> vals(ln.size());
        for (std::size_t i = 0; i < ln.size(); ++i) vals[i] = std::exp(ln[i]);
        return RadialProfile(grid, std::move(vals), ext, omega);
    };

    SolveResult result{make_profile(ln_eta)};
    const double beta = config.relaxation;
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        const RadialProfile current = make_profile(ln_eta);
        const std::vector<double> g = rhs_at_nodes(current, domain, omega, config.quadrature, sphere);
        std::vector<double> ln_new = cumulative_leapfrog(g, h);
        apply_normalization(ln_new, grid, domain, config.normalization);

        std::vector<double> ln_relaxed(ln_eta.size());
        for (std::size_t i = 0; i < ln_eta.size(); ++i) {
            ln_relaxed[i] = (1.0 - beta) * ln_eta[i] + beta * ln_new[i];
        }
        apply_normalization(ln_relaxed, grid, domain, config.normalization);

        double delta = 0.0;
        for (std::size_t i = 0; i < ln_eta.size(); ++i) {
            delta = std::max(delta, std::abs(ln_relaxed[i] - ln_eta[i]));
        }
        ln_eta = std::move(ln_relaxed);
        result.residual_history.push_back(delta);
        result.iterations = iter;

        for (std::size_t i = 0; i < ln_eta.size(); ++i) {
            const double eta = std::exp(ln_eta[i]);
            if (eta >= kClosePacking) throw PackingLimitError(i, grid[i], eta);
        }
        if (delta < config.tol) {
            result.converged = true;
            break;
        }
    }

    result.profile = make_profile(ln_eta);
    result.final_equation_residual =
        equation_residual(result.profile, domain, omega, ProfileModel::EnskogBE, config.quadrature);
    return result;
}

}  // namespace

void validate(const SolverConfig& config, const Domain& domain) {
    if (!(config.grid_spacing > 0.0)) throw std::invalid_argument("SolverConfig.grid_spacing must be > 0");
    if (!(config.tol > 0.0)) throw std::invalid_argument("SolverConfig.tol must be > 0");
    if (config.max_iter < 1) throw std::invalid_argument("SolverConfig.max_iter must be >= 1");
    if (!(config.relaxation > 0.0) || config.relaxation > 1.0) {
        throw std::invalid_argument("SolverConfig.relaxation must lie in (0, 1]");
    }
    if (!(config.normalization.value > 0.0) || config.normalization.value >= kClosePacking) {
        throw std::invalid_argument("SolverConfig.normalization value must lie in (0, 0.7405)");
    }
    if (config.quadrature.n_theta < 4 || config.quadrature.n_phi < 4) {
        throw std::invalid_argument("SolverConfig.quadrature orders must be >= 4");
    }
    if (!domain.bounded()) {
        if (!(config.truncation_radius > 0.0)) {
            throw std::invalid_argument("SolverConfig.truncation_radius must be > 0");
        }
        if (config.normalization.kind == Normalization::Kind::MeanFraction) {
            throw std::invalid_argument("SolverConfig.normalization mean-fraction requires a bounded domain");
        }
    }
}

PackingLimitError::PackingLimitError(std::size_t node_index_, double radius_, double eta_)
    : std::runtime_error("packing limit reached at node " + std::to_string(node_index_) +
                         " (radius " + std::to_string(radius_) + ", eta " + std::to_string(eta_) + ")"),
      node_index(node_index_), radius(radius_), eta(eta_) {}

BoltzmannSolution solve_boltzmann(const Domain& domain, double omega, const SolverConfig& config) {
    validate(config, domain);
    if (domain.kind() == DomainKind::Sphere && omega != 0.0) {
        throw std::invalid_argument("solve_boltzmann: rotation is not admitted in a sphere");
    }
    const double R = solve_radius(domain, config);
    const std::vector<double> grid = uniform_grid(R, config.grid_spacing);
    const double w2 = omega * omega;

    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = std::exp(w2 * grid[i] * grid[i]);
    double scale = config.normalization.value;
    if (config.normalization.kind == Normalization::Kind::MeanFraction) {
        const double mean = mean_volume_fraction(RadialProfile(grid, vals), domain);
        scale = config.normalization.value / mean;
    }
    for (double& v : vals) v *= scale;

    BoltzmannSolution out{RadialProfile(grid, std::move(vals),
                                        domain.bounded() ? Extension::Bounded : Extension::Frozen,
                                        omega)};
    out.packing_exceeded = out.profile.max_value() >= kClosePacking;
    return out;
}

NsfOracle::NsfOracle(double omega, double eta0) : omega_(omega), eta0_(eta0) {
    if (!(omega >= 0.0)) throw std::invalid_argument("NsfOracle: omega must be >= 0");
    if (!(eta0 > 0.0) || eta0 >= kClosePacking) {
        throw std::invalid_argument("NsfOracle: eta0 must lie in (0, 0.7405)");
    }
    log_8c_ = std::log(8.0) + std::log(eta0) + 8.0 * eta0;
}

double NsfOracle::operator()(double P) const {
    if (omega_ == 0.0) return eta0_;  // mechanical balance without rotation
    return 0.125 * lambert_w0_exp(log_8c_ + omega_ * omega_ * P * P);
}

NsfOracle solve_nsf_oracle(double omega, double eta0) { return NsfOracle(omega, eta0); }

SolveResult solve_enskog_cylinder(const Domain& domain, double omega, const SolverConfig& config) {
    if (domain.kind() == DomainKind::Sphere) {
        throw std::invalid_argument("solve_enskog_cylinder: domain must be unbounded or a cylinder");
    }
    if (!(omega >= 0.0)) throw std::invalid_argument("solve_enskog_cylinder: omega must be >= 0");
    return picard_solve(domain, omega, config, /*sphere=*/false);
}

SolveResult solve_enskog_sphere(const Domain& domain, const SolverConfig& config) {
    if (domain.kind() != DomainKind::Sphere) {
        throw std::invalid_argument("solve_enskog_sphere: domain must be a sphere");
    }
    return picard_solve(domain, 0.0, config, /*sphere=*/true);
}

double equation_residual(const RadialProfile& profile, const Domain& domain, double omega,
                         ProfileModel model, const QuadratureSpec& spec) {
    const bool sphere = domain.kind() == DomainKind::Sphere;
    if (sphere && omega != 0.0) {
        throw std::invalid_argument("equation_residual: spherical profiles require omega = 0");
    }
    const auto& x = profile.nodes();
    const auto& v = profile.values();
    std::vector<double> rhs(x.size(), 0.0);
    if (model == ProfileModel::EnskogBE) {
        rhs = rhs_at_nodes(profile, domain, omega, spec, sphere);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = 2.0 * omega * omega * x[i];
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double deriv = (std::log(v[i + 1]) - std::log(v[i - 1])) / (x[i + 1] - x[i - 1]);
        worst = std::max(worst, std::abs(deriv - rhs[i]));
    }
    return worst;
}

FarFieldReport far_field_report(const SolveResult& result, double omega, double eta0) {
    const RadialProfile& p = result.profile;
    if (p.extension() == Extension::Bounded) {
        throw std::invalid_argument("far_field_report: unsupported for bounded runs");
    }
    FarFieldReport report;
    if (omega == 0.0) return report;  // quadratic asymptote inapplicable
    report.applicable = true;

    const auto& x = p.nodes();
    const auto& v = p.values();
    const std::size_t start = 3 * x.size() / 4;
    for (std::size_t i = start; i < x.size(); ++i) {
        if (x[i] <= 0.0) continue;
        report.radii.push_back(x[i]);
        report.ratios.push_back(8.0 * v[i] / (omega * omega * x[i] * x[i]));
    }
    report.increasing = true;
    for (std::size_t i = 1; i < report.ratios.size(); ++i) {
        if (!(report.ratios[i] > report.ratios[i - 1])) report.increasing = false;
    }
    report.below_one = !report.ratios.empty() && report.ratios.back() < 1.0;
    const NsfOracle oracle(omega, eta0);
    const double R = p.r_max();
    report.nsf_ratio_at_rmax = 8.0 * oracle(R) / (omega * omega * R * R);
    return report;
}

}  // namespace enskog
