#pragma once

#include "runup/sampled_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace runup {

/// Initial water displacement in the physical plane. The initial velocity
/// is identically zero in everything this library solves.
struct PhysicalInitialData {
    SampledFunction eta0; // eta0(x), dimensionless
};

/// Initial data mapped to the hodograph plane: psi0(sigma), phi0(sigma).
struct HodographInitialData {
    SampledFunction psi0;
    SampledFunction phi0; // zero for the solved inverse problem

    bool phi0_is_zero() const { return phi0.empty() || phi0.max_abs() == 0.0; }
};

/// Time series of the wet/dry boundary in the physical plane.
struct ShorelineRecord {
    std::vector<double> t;
    std::vector<double> x0;
    std::vector<double> v0; // may be empty (synthesized by the inversion)
};

/// Hodograph boundary data: tau, Psi(tau) = psi(0,tau), V(tau) = phi(0,tau).
struct ShorelineTrace {
    std::vector<double> tau;
    std::vector<double> Psi;
    std::vector<double> V; // may be empty until trace_velocity fills it
};

struct BreakingReport {
    double min_margin = 1.0;  // min(1 + eta0') or min(1 - dv0/dt)
    bool breaking = false;     // margin <= 0
    bool near_breaking = false; // margin <= 0.05
    std::string quantity;      // what the margin measures
};

/// Solves x + eta0(x) = sigma^2 for x (bisection bracket + Newton polish).
double gamma_solve(const SampledFunction& eta0, double sigma);

/// psi0(sigma) = eta0(gamma(sigma)), phi0 = 0.
HodographInitialData initial_to_hodograph(const PhysicalInitialData& d,
                                          const std::vector<double>& sigma_grid);

/// Parametric reconstruction x(sigma) = sigma^2 - psi0(sigma),
/// eta0(x(sigma)) = psi0(sigma). Requires phi0 = 0 and x(sigma) strictly
/// increasing (otherwise the data describe a breaking wave).
PhysicalInitialData hodograph_ic_to_physical(const HodographInitialData& h);

/// tau = (t - v0)/2, Psi = -x0 + v0^2/2, V = v0. Requires v0 present.
ShorelineTrace record_to_trace(const ShorelineRecord& r);

/// t = 2 tau + V, x0 = -Psi + V^2/2, v0 = V.
ShorelineRecord trace_to_record(const ShorelineTrace& tr);

BreakingReport breaking_check(const PhysicalInitialData& d);
BreakingReport breaking_check(const ShorelineRecord& r);

} // namespace runup
