#pragma once

#include "runup/sampled_function.hpp"

#include <vector>

namespace runup {

/// Forward Abel transform (Af)(x) = int_0^x f(s) ds / sqrt(x^2 - s^2),
/// evaluated on out_grid. The endpoint singularity is removed exactly by
/// s = x sin(theta), leaving a smooth integrand handled by composite
/// Gauss-Legendre with quad_nodes points. (Af)(0) is the limit (pi/2) f(0).
SampledFunction abel_forward(const SampledFunction& f,
                             std::vector<double> out_grid,
                             int quad_nodes = 64);

/// Inverse Abel transform, in the integrated-by-parts form
///   (A^-1 g)(x) = (2/pi) [ g(0) + x int_0^x g'(s) ds / sqrt(x^2 - s^2) ],
/// with g' taken from the monotone-cubic interpolant of g. Equivalent to
/// the outer-derivative form but avoids differentiating the integral.
SampledFunction abel_inverse(const SampledFunction& g,
                             std::vector<double> out_grid,
                             int quad_nodes = 64);

/// Test hook: multiplies the Abel quadrature weights by this factor.
/// Used by the selftest negative control only. Default 1.
void set_abel_weight_perturbation(double factor);
double abel_weight_perturbation();

} // namespace runup
