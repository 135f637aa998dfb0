#include <doctest.h>

#include "runup/errors.hpp"
#include "runup/sampled_function.hpp"

#include <cmath>

using namespace runup;

TEST_CASE("interpolant reproduces node values exactly")
{
    auto f = SampledFunction::tabulate(0.0, 2.0, 33, [](double x) { return std::sin(x); });
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(f(f.grid()[i]) == doctest::Approx(f.values()[i]).epsilon(1e-15));
}

TEST_CASE("interpolation error is small for smooth data")
{
    auto f = SampledFunction::tabulate(0.0, 2.0, 257, [](double x) { return std::exp(-x * x); });
    double err = 0.0;
    for (double x = 0.0; x <= 2.0; x += 0.0013)
        err = std::max(err, std::abs(f(x) - std::exp(-x * x)));
    CHECK(err < 1e-5);
}

TEST_CASE("monotone data gives monotone interpolant (no overshoot)")
{
    // step-like data where a plain cubic spline would ring
    std::vector<double> x{0, 1, 2, 3, 4, 5};
    std::vector<double> y{0, 0, 0, 1, 1, 1};
    SampledFunction f(x, y);
    double prev = f(0.0);
    for (double t = 0.0; t <= 5.0; t += 0.01) {
        const double v = f(t);
        CHECK(v >= prev - 1e-14);
        CHECK(v >= -1e-14);
        CHECK(v <= 1.0 + 1e-14);
        prev = v;
    }
}

TEST_CASE("derivative matches analytic derivative")
{
    auto f = SampledFunction::tabulate(0.0, 3.0, 601, [](double x) { return std::cos(2.0 * x); });
    double err = 0.0;
    for (double x = 0.0; x <= 3.0; x += 0.0017)
        err = std::max(err, std::abs(f.derivative(x) + 2.0 * std::sin(2.0 * x)));
    CHECK(err < 1e-2);
    // end nodes use the one-sided 3-point stencil
    CHECK(f.derivative(0.0) == doctest::Approx(0.0).epsilon(1e-4));
    CHECK(f.derivative(3.0) == doctest::Approx(-2.0 * std::sin(6.0)).epsilon(1e-3));
}

TEST_CASE("evaluation outside the grid throws, no extrapolation")
{
    auto f = SampledFunction::tabulate(0.0, 1.0, 11, [](double x) { return x; });
    CHECK_THROWS_AS(f(-0.1), domain_error);
    CHECK_THROWS_AS(f(1.1), domain_error);
    CHECK(f(1.0) == doctest::Approx(1.0)); // endpoints are fine
}

TEST_CASE("invalid construction is rejected")
{
    CHECK_THROWS_AS(SampledFunction({0.0, 0.0, 1.0}, {1.0, 2.0, 3.0}), data_error);
    CHECK_THROWS_AS(SampledFunction({0.0, 1.0}, {1.0, std::nan("")}), data_error);
    CHECK_THROWS_AS(SampledFunction({0.0}, {1.0}), data_error);
    CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 2.0}, {1.0, 2.0}), data_error);
}

TEST_CASE("resample stays within the domain")
{
    auto f = SampledFunction::tabulate(0.0, 1.0, 101, [](double x) { return x * x; });
    auto g = resample(f, linspace(0.1, 0.9, 41));
    CHECK(g(0.5) == doctest::Approx(0.25).epsilon(1e-8));
    CHECK_THROWS_AS(resample(f, linspace(0.5, 1.5, 11)), domain_error);
}
