#include <doctest.h>

#include "oracles.hpp"
#include "runup/abel.hpp"
#include "runup/direct.hpp"
#include "runup/errors.hpp"

#include <cmath>
#include <random>

using namespace runup;

namespace {

const double pi = std::acos(-1.0);

HodographInitialData make_hodo(const std::function<double(double)>& psi0,
                               const std::function<double(double)>& phi0,
                               double sigma_max = 4.0, std::size_t n = 1024)
{
    HodographInitialData h;
    h.psi0 = SampledFunction::tabulate(0.0, sigma_max, n, psi0);
    h.phi0 = SampledFunction::tabulate(0.0, sigma_max, n, phi0);
    return h;
}

SampledFunction gaussian_eta0(double a, double k)
{
    return SampledFunction::tabulate(-1.0, 40.0, 4001, [=](double x) {
        return a * std::exp(-k * (x - 1.0) * (x - 1.0));
    });
}

} // namespace

TEST_CASE("poisson boundary trivial cases")
{
    auto tau = linspace(0.0, 3.0, 301);
    auto zero = poisson_boundary(make_hodo([](double) { return 0.0; },
                                           [](double) { return 0.0; }), tau);
    for (double v : zero.Psi)
        CHECK(std::abs(v) < 1e-14);

    const double c = 0.4;
    auto tr = poisson_boundary(make_hodo([](double) { return 0.0; },
                                         [=](double) { return c; }), tau);
    for (std::size_t i = 0; i < tau.size(); ++i)
        CHECK(tr.Psi[i] == doctest::Approx(-2.0 * c * tau[i]).epsilon(1e-8));
}

TEST_CASE("Bessel anchor: psi0 = J0(2 sigma) gives Psi = cos(2 tau)")
{
    const double om = 2.0;
    auto h = make_hodo([&](double s) { return std::cyl_bessel_j(0.0, om * s); },
                       [](double) { return 0.0; }, 4.0, 2048);
    auto tau = linspace(0.0, 3.0, 301);
    auto tr = poisson_boundary(h, tau);
    double err = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i)
        err = std::max(err, std::abs(tr.Psi[i] - std::cos(om * tau[i])));
    CHECK(err < 1e-3);
}

TEST_CASE("trace_velocity identity")
{
    ShorelineTrace tr;
    tr.tau = linspace(0.0, 3.0, 601);
    SUBCASE("constant Psi gives zero V")
    {
        tr.Psi.assign(tr.tau.size(), 0.37);
        auto out = trace_velocity(tr);
        for (double v : out.V)
            CHECK(std::abs(v) < 1e-13);
    }
    SUBCASE("Psi = cos(2 tau) gives V = sin(2 tau)")
    {
        for (double tau : tr.tau)
            tr.Psi.push_back(std::cos(2.0 * tau));
        auto out = trace_velocity(tr);
        double err = 0.0;
        for (std::size_t i = 0; i < tr.tau.size(); ++i)
            err = std::max(err, std::abs(out.V[i] - std::sin(2.0 * tr.tau[i])));
        CHECK(err < 5e-3);
    }
}

TEST_CASE("direct_shoreline: flat profile stays flat")
{
    PhysicalInitialData flat{SampledFunction::tabulate(-1.0, 9.0, 201, [](double) { return 0.0; })};
    DirectConfig cfg;
    cfg.n_sigma = 256;
    cfg.n_tau = 256;
    auto rec = direct_shoreline(flat, cfg);
    for (std::size_t i = 0; i < rec.t.size(); ++i) {
        CHECK(std::abs(rec.x0[i]) < 1e-12);
        CHECK(std::abs(rec.v0[i]) < 1e-12);
    }
}

TEST_CASE("direct_shoreline on a Bessel-built profile carries Psi = a cos(2 tau)")
{
    const double a = 0.01, om = 2.0;
    HodographInitialData h = make_hodo(
        [&](double s) { return a * std::cyl_bessel_j(0.0, om * s); },
        [](double) { return 0.0; }, 6.0, 2048);
    PhysicalInitialData d = hodograph_ic_to_physical(h);

    DirectConfig cfg;
    cfg.sigma_max = 5.9;
    cfg.tau_max = 3.0;
    auto rec = direct_shoreline(d, cfg);
    auto tr = record_to_trace(rec);
    double err = 0.0;
    for (std::size_t i = 0; i < tr.tau.size(); ++i)
        err = std::max(err, std::abs(tr.Psi[i] - a * std::cos(om * tr.tau[i])));
    CHECK(err < 2e-3 * a);
}

TEST_CASE("direct_shoreline rejects breaking data")
{
    PhysicalInitialData steep{SampledFunction::tabulate(-1.0, 9.0, 2001, [](double x) {
        return 1.0 * std::exp(-10.0 * (x - 1.0) * (x - 1.0));
    })};
    CHECK_THROWS_AS(direct_shoreline(steep, DirectConfig{}), breaking_error);
}

TEST_CASE("round trip through the Abel pair reproduces psi0")
{
    // with phi0 = 0: (2/pi) A(Psi) = psi0
    PhysicalInitialData d{gaussian_eta0(0.01, 4.0)};
    const double sigma_max = 3.0;
    auto h = initial_to_hodograph(d, linspace(0.0, sigma_max, 1024));
    auto tr = poisson_boundary(h, linspace(0.0, sigma_max, 1024));
    auto a_psi = abel_forward(SampledFunction(tr.tau, tr.Psi),
                              linspace(0.0, sigma_max, 1024));
    double err = 0.0;
    for (std::size_t i = 0; i < a_psi.size(); ++i)
        err = std::max(err, std::abs(2.0 / pi * a_psi.values()[i]
                                     - h.psi0.values()[i]));
    CHECK(err < 1e-3);
}

TEST_CASE("shoreline equation residual: zero initial velocity")
{
    PhysicalInitialData d{gaussian_eta0(0.01, 4.0)};
    auto h = initial_to_hodograph(d, linspace(0.0, 3.0, 1024));
    auto tr = poisson_boundary(h, linspace(0.0, 3.0, 1024));
    auto res = shoreline_equation_residual(h, tr, linspace(0.0, 3.0, 101));
    CHECK(res.max_abs() < 1e-5);
}

TEST_CASE("shoreline equation residual: constant phi0 against the Poisson form")
{
    const double c = 0.3;
    auto h = make_hodo([](double) { return 0.0; }, [=](double) { return c; });
    ShorelineTrace tr;
    tr.tau = linspace(0.0, 3.0, 1024);
    for (double tau : tr.tau)
        tr.Psi.push_back(-2.0 * c * tau);
    auto res = shoreline_equation_residual(h, tr, linspace(0.0, 3.0, 101), 128);
    CHECK(res.max_abs() < 1e-3);
}

TEST_CASE("shoreline equation residual: random smooth pair, refinement decreases it")
{
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double a1 = u(rng), a2 = u(rng), b1 = u(rng);
    auto psi0 = [=](double s) { return a1 * std::exp(-s * s) + a2 * std::exp(-2.0 * (s - 1.0) * (s - 1.0)); };
    auto phi0 = [=](double s) { return b1 * std::exp(-1.5 * s * s) * (1.0 + 0.3 * s); };

    auto run = [&](std::size_t n_tau, int kernel_nodes) {
        auto h = make_hodo(psi0, phi0, 4.0, 2048);
        ShorelineTrace tr = poisson_boundary(h, linspace(0.0, 3.0, n_tau));
        auto res = shoreline_equation_residual(h, tr, linspace(0.0, 3.0, 65), kernel_nodes);
        return res.max_abs();
    };
    const double coarse = run(256, 64);
    const double fine = run(1024, 256);
    CHECK(fine < 1e-3);
    CHECK(fine <= coarse + 1e-12);
}

TEST_CASE("runup amplitude consistency with the linear estimate")
{
    // small amplitude: |x0| ~ |Psi| because the v0^2 term is second order
    PhysicalInitialData d{gaussian_eta0(0.01, 4.0)};
    DirectConfig cfg;
    cfg.sigma_max = 4.0;
    cfg.tau_max = 4.0;
    auto rec = direct_shoreline(d, cfg);
    auto tr = record_to_trace(rec);
    double max_psi = 0.0, min_x0 = 0.0;
    for (double v : tr.Psi)
        max_psi = std::max(max_psi, v);
    for (double v : rec.x0)
        min_x0 = std::min(min_x0, v);
    CHECK(-min_x0 == doctest::Approx(max_psi).epsilon(0.05));
}
