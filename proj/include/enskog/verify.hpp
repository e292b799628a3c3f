#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace enskog {

struct VerifyCheck {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// MaskSignError flips the sign of the azimuthal cutoff inside the
// mask-soundness comparison; it exists so the suite's power to catch a wrong
// mask can itself be demonstrated.
enum class FaultInjection { None, MaskSignError };

struct VerifyOptions {
    std::uint64_t seed = 42;
    FaultInjection fault = FaultInjection::None;
    bool quick = false;  // reduced sample counts for smoke testing
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass = false;
};

// Fixed-seed numerical verification of the kinetic identities: collision
// conservation, summational invariant, contact-velocity orthogonality,
// direct-vs-reduced collision integrals, vanishing angular moments, mask
// soundness against brute-force containment tests, and Lambert W round trips.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace enskog
