#pragma once

#include "runup/hodograph.hpp"

#include <cstddef>
#include <vector>

namespace runup {

/// Finite-difference field of the hodograph wave equation
///   psi_tautau = psi_sigmasigma + psi_sigma / sigma
/// together with the companion velocity field phi from the first-order
/// system psi_sigma = -sigma phi_tau, psi_tau = -sigma phi_sigma - 2 phi.
struct HodographField {
    std::vector<double> sigma; // uniform, starting at 0
    std::vector<double> tau;   // uniform, starting at 0
    std::vector<double> psi;   // row-major [tau][sigma]
    std::vector<double> phi;

    double psi_at(std::size_t n, std::size_t i) const { return psi[n * sigma.size() + i]; }
    double phi_at(std::size_t n, std::size_t i) const { return phi[n * sigma.size() + i]; }
};

struct WaveConfig {
    double sigma_max = 0.0; // required; choose >= support + tau_max to keep
                            // outer-boundary reflections away from sigma = 0
    double tau_max = 0.0;
    int n_sigma = 1024;
    double cfl = 0.5;       // dtau / dsigma, must be <= 0.5
};

/// Evolves psi (leapfrog, axis regularized by psi_tautau = 2 psi_sigmasigma
/// at sigma = 0) and phi (leapfrog on phi_tau = -psi_sigma / sigma) from
/// psi(.,0) = psi0, phi(.,0) = 0.
HodographField evolve(const HodographInitialData& h, const WaveConfig& cfg);

/// Psi(tau) = psi(0, tau), V(tau) = phi(0, tau).
ShorelineTrace extract_boundary(const HodographField& f);

} // namespace runup
