#pragma once

#include <functional>
#include <vector>

namespace runup {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (cached, thread-safe).
const GaussRule& gauss_legendre(int n);

/// Composite Gauss-Legendre integral of f over [a, b] with roughly
/// n_total nodes split into 16-point panels.
double integrate_gl(const std::function<double(double)>& f,
                    double a, double b, int n_total);

} // namespace runup
