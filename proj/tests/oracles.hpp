#pragma once

// Test-only oracles. Everything here evaluates the defining integrals by
// brute-force adaptive quadrature, independent of the production paths
// (Gauss-Legendre + sin substitution for Abel, AGM closed forms for the
// kernels), so the two routes can be compared.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f,
                            double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw std::runtime_error("adaptive quadrature: depth exhausted");
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
         + adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f,
                        double a, double b, double tol = 1e-12)
{
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_step(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 60);
}

// K_n(x, s) = int_s^x t^n dt / sqrt((t^2 - s^2)(x^2 - t^2)), n = 0 or 2.
// Both endpoint singularities removed by sqrt substitutions after splitting
// at the midpoint: t = s + v^2 on the left half, t = x - v^2 on the right.
inline double kernel(int n, double x, double s, double tol = 1e-12)
{
    const double m = 0.5 * (s + x);
    auto tn = [n](double t) { return n == 0 ? 1.0 : t * t; };
    auto left = [&](double v) {
        const double t = s + v * v;
        return 2.0 * tn(t) / std::sqrt((t + s) * (x - t) * (x + t));
    };
    auto right = [&](double v) {
        const double t = x - v * v;
        return 2.0 * tn(t) / std::sqrt((x + t) * (t - s) * (t + s));
    };
    return integrate(left, 0.0, std::sqrt(m - s), tol)
         + integrate(right, 0.0, std::sqrt(x - m), tol);
}

// Forward Abel transform of f at x, by splitting at x/2 and removing the
// upper endpoint singularity with t = x - v^2.
inline double abel_forward(const std::function<double(double)>& f, double x,
                           double tol = 1e-12)
{
    if (x == 0.0)
        return std::acos(-1.0) / 2.0 * f(0.0);
    auto plain = [&](double s) { return f(s) / std::sqrt((x - s) * (x + s)); };
    auto subst = [&](double v) {
        const double s = x - v * v;
        return 2.0 * f(s) / std::sqrt(x + s);
    };
    return integrate(plain, 0.0, 0.5 * x, tol)
         + integrate(subst, 0.0, std::sqrt(0.5 * x), tol);
}

// Bisection root of g on [a, b] to tolerance 1e-14 (assumes a sign change).
inline double bisect(const std::function<double(double)>& g, double a, double b)
{
    double fa = g(a);
    for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = g(m);
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace oracle
