#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "enskog/geometry.hpp"

namespace enskog {

// Close-packing bound for the volume fraction, sqrt(2) pi / 6.
inline constexpr double kClosePacking = 0.74048048969306104;

// What eval() does for radii beyond the last node.
enum class Extension {
    Bounded,          // never queried there; doing so is a logic error (mask bug)
    Frozen,           // hold the last node value
    NsfContinuation,  // Lambert-W far-field matched at R_max (needs omega)
};

// Discretized radial volume-fraction field eta(P) (or eta(r)) on strictly
// increasing nodes starting at 0, interpolated by a monotonicity-preserving
// piecewise cubic (Fritsch-Butland slopes). Values must be strictly positive;
// the close-packing bound is enforced by the solvers, not here, because the
// Boltzmann closed form may legitimately exceed it.
class RadialProfile {
  public:
    RadialProfile(std::vector<double> nodes, std::vector<double> values,
                  Extension extension = Extension::Bounded, double omega = 0.0);

    static RadialProfile from_function(const std::function<double(double)>& f,
                                       const std::vector<double>& grid,
                                       Extension extension = Extension::Bounded, double omega = 0.0);

    double eval(double P) const;
    double operator()(double P) const { return eval(P); }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    double r_max() const { return nodes_.back(); }
    Extension extension() const { return extension_; }
    double omega() const { return omega_; }
    double max_value() const;

    // Header "P,eta", one row per node, 17 significant digits.
    void write_csv(std::ostream& out) const;
    static RadialProfile read_csv(std::istream& in, Extension extension = Extension::Bounded,
                                  double omega = 0.0);

  private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> slopes_;
    Extension extension_;
    double omega_;
    double log_nsf_const_;  // log of the matched far-field constant
};

// Volume-average of eta over a bounded domain: (2/R^2) int eta P dP for the
// cylinder, (3/R^3) int eta r^2 dr for the sphere, composite Simpson on the
// profile grid.
double mean_volume_fraction(const RadialProfile& profile, const Domain& domain);

// Uniform node set {0, h', 2h', ..., r_max} with h' = r_max / round(r_max / h).
std::vector<double> uniform_grid(double r_max, double h);

// Composite Simpson for samples on a uniform grid (3/8 rule caps an odd tail).
double simpson_uniform(const std::vector<double>& y, double h);

}  // namespace enskog
