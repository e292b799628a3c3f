#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "enskog/profile.hpp"
#include "enskog/quadrature.hpp"

namespace enskog {

// How the free constant of the profile equation is fixed.
struct Normalization {
    enum class Kind { AxisValue, MeanFraction };
    Kind kind = Kind::AxisValue;
    double value = 0.1;

    static Normalization axis_value(double eta0) { return {Kind::AxisValue, eta0}; }
    static Normalization mean_fraction(double eta_bar) { return {Kind::MeanFraction, eta_bar}; }
};

struct SolverConfig {
    double grid_spacing = 0.05;
    double tol = 1e-10;        // sup-norm tolerance on ln(eta) per iteration
    int max_iter = 500;
    double relaxation = 0.5;   // beta in (0, 1]
    Normalization normalization = Normalization::axis_value(0.1);
    QuadratureSpec quadrature{};
    double truncation_radius = 25.0;                  // unbounded runs
    Extension far_field = Extension::NsfContinuation; // unbounded runs
    std::optional<RadialProfile> initial;             // restart point
};

// Throws std::invalid_argument naming the offending field.
void validate(const SolverConfig& config, const Domain& domain);

struct SolveResult {
    RadialProfile profile;
    bool converged = false;
    int iterations = 0;
    std::vector<double> residual_history;       // sup |delta ln eta| per iteration
    double final_equation_residual = 0.0;
};

// Raised when an Enskog iterate reaches the close-packing bound.
class PackingLimitError : public std::runtime_error {
  public:
    PackingLimitError(std::size_t node_index, double radius, double eta);
    std::size_t node_index;
    double radius;
    double eta;
};

struct BoltzmannSolution {
    RadialProfile profile;
    bool packing_exceeded = false;  // the Boltzmann gas has no packing limit
};

// Closed form eta0 exp(omega^2 P^2): the profile equation with the collision
// moment omitted. MeanFraction normalization requires a bounded domain.
BoltzmannSolution solve_boltzmann(const Domain& domain, double omega, const SolverConfig& config);

// Navier-Stokes-Fourier closed form with the dense-gas equation of state:
// eta(P) = W0(8 C exp(omega^2 P^2)) / 8 with C = eta0 exp(8 eta0). Satisfies
// d(ln eta)/dP + 8 d(eta)/dP = 2 omega^2 P at every radius.
class NsfOracle {
  public:
    NsfOracle(double omega, double eta0);
    double operator()(double P) const;
    double omega() const { return omega_; }
    double eta0() const { return eta0_; }

  private:
    double omega_;
    double eta0_;
    double log_8c_;
};

NsfOracle solve_nsf_oracle(double omega, double eta0);

// Picard solution of d(ln eta)/dP = 2 omega^2 P - (6/pi) I_P for the
// unbounded or cylindrical domain.
SolveResult solve_enskog_cylinder(const Domain& domain, double omega, const SolverConfig& config);

// Spherically symmetric resting state, d(ln eta)/dr = -(6/pi) I_r. Rotation
// is not admitted in this sub-case.
SolveResult solve_enskog_sphere(const Domain& domain, const SolverConfig& config);

enum class ProfileModel { EnskogBE, Boltzmann };

// Max over interior nodes of |centered difference of ln eta - right-hand
// side| for the selected model.
double equation_residual(const RadialProfile& profile, const Domain& domain, double omega,
                         ProfileModel model = ProfileModel::EnskogBE,
                         const QuadratureSpec& spec = QuadratureSpec{});

struct FarFieldReport {
    bool applicable = false;        // false when omega == 0
    std::vector<double> radii;      // outer quarter of the grid
    std::vector<double> ratios;     // eta * 8 / (omega^2 P^2)
    bool increasing = false;
    bool below_one = false;
    double nsf_ratio_at_rmax = 0.0;
};

// Far-field diagnostics of an unbounded solve against the quadratic-growth
// asymptote; throws for bounded runs.
FarFieldReport far_field_report(const SolveResult& result, double omega, double eta0);

}  // namespace enskog
