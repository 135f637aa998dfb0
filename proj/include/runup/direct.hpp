#pragma once

#include "runup/hodograph.hpp"
#include "runup/sampled_function.hpp"

#include <vector>

namespace runup {

struct DirectConfig {
    double sigma_max = 0.0; // 0: auto, 4x the support radius of psi0
    double tau_max = 0.0;   // 0: equal to sigma_max
    int n_sigma = 1024;
    int n_tau = 1024;
    int quad_nodes = 64;    // Abel quadrature nodes per evaluation
    int kernel_nodes = 128; // open-rule nodes for the phi0 kernel integral
};

/// Boundary value Psi(tau) = psi(0, tau) from hodograph initial data:
///   Psi = (pi/2) [ A^-1 psi0 - tau A^-1 phi0 ] - A(s phi0).
/// Only Psi is filled; V is left empty.
ShorelineTrace poisson_boundary(const HodographInitialData& h,
                                const std::vector<double>& tau_grid,
                                int quad_nodes = 64);

/// Fills V = -1/2 dPsi/dtau (spline derivative). The identity follows from
/// the shoreline hodograph relations by the chain rule:
///   dPsi/dt = v0 (v0' - 1), dtau/dt = (1 - v0')/2  =>  Psi'(tau) = -2 v0.
ShorelineTrace trace_velocity(const ShorelineTrace& tr);

/// Full direct problem: initial displacement -> shoreline record.
ShorelineRecord direct_shoreline(const PhysicalInitialData& d, const DirectConfig& cfg);

/// Residual of the sigma-form shoreline relation on sigma_grid:
///   psi0(sigma) - sigma phi0(sigma)
///     + (2/pi) int_0^sigma [dK2/ds - s K0] phi0(s) ds  -  (2/pi)(A Psi)(sigma).
/// Near zero iff (h, tr) is a consistent pair; with phi0 = 0 this reduces to
/// psi0 - (2/pi) A Psi.
SampledFunction shoreline_equation_residual(const HodographInitialData& h,
                                            const ShorelineTrace& tr,
                                            const std::vector<double>& sigma_grid,
                                            int kernel_nodes = 128,
                                            int quad_nodes = 64);

} // namespace runup
