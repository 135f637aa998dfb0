#include "runup/selftest.hpp"

#include "runup/abel.hpp"
#include "runup/direct.hpp"
#include "runup/errors.hpp"
#include "runup/hodograph.hpp"
#include "runup/kernels.hpp"
#include "runup/wave_reference.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace runup {

namespace {

const double pi = std::acos(-1.0);

struct Collector {
    std::vector<CheckResult> results;

    void add(const std::string& name, double err, double tol)
    {
        std::ostringstream os;
        os << "err=" << err << " tol=" << tol;
        results.push_back({name, err <= tol, os.str()});
    }
};

double linf(const SampledFunction& f, const std::function<double(double)>& ref)
{
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        m = std::max(m, std::abs(f.values()[i] - ref(f.grid()[i])));
    return m;
}

void abel_anchors(Collector& c)
{
    const auto grid = linspace(0.0, 2.0, 2048);

    auto one = SampledFunction::tabulate(0.0, 2.0, 2048, [](double) { return 1.0; });
    c.add("abel.forward.const", linf(abel_forward(one, grid),
          [](double) { return pi / 2.0; }), 1e-6);

    auto lin = SampledFunction::tabulate(0.0, 2.0, 2048, [](double s) { return s; });
    c.add("abel.forward.linear", linf(abel_forward(lin, grid),
          [](double x) { return x; }), 1e-6);

    auto sq = SampledFunction::tabulate(0.0, 2.0, 2048, [](double s) { return s * s; });
    c.add("abel.forward.square", linf(abel_forward(sq, grid),
          [](double x) { return pi * x * x / 4.0; }), 1e-6);

    auto c3 = SampledFunction::tabulate(0.0, 2.0, 2048, [](double) { return 3.0; });
    c.add("abel.inverse.const", linf(abel_inverse(c3, grid),
          [](double) { return 6.0 / pi; }), 1e-6);

    auto gauss = SampledFunction::tabulate(0.0, 2.0, 2048,
                                           [](double s) { return std::exp(-s * s); });
    auto round = abel_inverse(abel_forward(gauss, grid), grid);
    c.add("abel.roundtrip.gauss", linf(round,
          [](double s) { return std::exp(-s * s); }), 1e-3);
}

void abel_linearity(Collector& c)
{
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const double a = coef(rng), b = coef(rng);
    auto f = SampledFunction::tabulate(0.0, 2.0, 512,
                                       [](double s) { return std::exp(-s * s); });
    auto g = SampledFunction::tabulate(0.0, 2.0, 512,
                                       [](double s) { return std::cos(1.7 * s); });
    std::vector<double> comb(512);
    for (std::size_t i = 0; i < 512; ++i)
        comb[i] = a * f.values()[i] + b * g.values()[i];
    const auto grid = linspace(0.0, 2.0, 101);
    auto lhs = abel_forward(SampledFunction(f.grid(), comb), grid);
    auto fa = abel_forward(f, grid);
    auto gb = abel_forward(g, grid);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double want = a * fa.values()[i] + b * gb.values()[i];
        err = std::max(err, std::abs(lhs.values()[i] - want));
        scale = std::max(scale, std::abs(want));
    }
    c.add("abel.linearity", err / std::max(scale, 1e-300), 1e-12);
}

void kernel_checks(Collector& c)
{
    // scaling laws, exact in the closed forms
    double worst = 0.0;
    for (double x : {0.3, 1.0, 4.0}) {
        for (double frac : {0.01, 0.4, 0.95}) {
            const double s = frac * x, lam = 2.0;
            worst = std::max(worst, std::abs(kernel_k0(lam * x, lam * s)
                                             - kernel_k0(x, s) / lam)
                                        / std::abs(kernel_k0(x, s) / lam));
            worst = std::max(worst, std::abs(kernel_k2(lam * x, lam * s)
                                             - lam * kernel_k2(x, s))
                                        / std::abs(lam * kernel_k2(x, s)));
            worst = std::max(worst, std::abs(kernel_k2_ds(lam * x, lam * s)
                                             - kernel_k2_ds(x, s))
                                        / std::abs(kernel_k2_ds(x, s)));
        }
    }
    c.add("kernels.scaling", worst, 1e-10);

    // s -> x limits of the closed forms
    c.add("kernels.k0.limit", std::abs(kernel_k0(1.0, 0.9999) - pi / 2.0), 1e-3);
    c.add("kernels.k2.limit", std::abs(kernel_k2(1.0, 0.9999) - pi / 2.0), 1e-3);
    c.add("kernels.combined.def",
          std::abs(combined_kernel(1.0, 0.5)
                   - (kernel_k2_ds(1.0, 0.5) - (2.0 * 0.5 / pi) * kernel_k0(1.0, 0.5))),
          0.0);
}

void hodograph_checks(Collector& c)
{
    auto zero = SampledFunction::tabulate(-1.0, 9.0, 64, [](double) { return 0.0; });
    c.add("hodograph.gamma.zero", std::abs(gamma_solve(zero, 1.5) - 2.25), 1e-11);

    auto shifted = SampledFunction::tabulate(-1.0, 9.0, 64, [](double) { return 0.25; });
    c.add("hodograph.gamma.const", std::abs(gamma_solve(shifted, 1.5) - 2.0), 1e-11);

    // record <-> trace round trip on Psi = cos(2 tau)
    ShorelineTrace tr;
    tr.tau = linspace(0.0, 3.0, 301);
    for (double tau : tr.tau) {
        tr.Psi.push_back(std::cos(2.0 * tau));
        tr.V.push_back(std::sin(2.0 * tau));
    }
    ShorelineTrace back = record_to_trace(trace_to_record(tr));
    double err = 0.0;
    for (std::size_t i = 0; i < tr.tau.size(); ++i) {
        err = std::max(err, std::abs(back.tau[i] - tr.tau[i]));
        err = std::max(err, std::abs(back.Psi[i] - tr.Psi[i]));
        err = std::max(err, std::abs(back.V[i] - tr.V[i]));
    }
    c.add("hodograph.record_trace.roundtrip", err, 1e-10);
}

void direct_checks(Collector& c)
{
    // psi0 = 0, phi0 = c  =>  Psi = -2 c tau
    const double cc = 0.7;
    HodographInitialData h;
    h.psi0 = SampledFunction::tabulate(0.0, 4.0, 512, [](double) { return 0.0; });
    h.phi0 = SampledFunction::tabulate(0.0, 4.0, 512, [&](double) { return cc; });
    const auto tau = linspace(0.0, 3.0, 301);
    auto tr = poisson_boundary(h, tau);
    double err = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i)
        err = std::max(err, std::abs(tr.Psi[i] + 2.0 * cc * tau[i]));
    c.add("direct.poisson.const_phi", err, 1e-6);

    auto res = shoreline_equation_residual(h, tr, linspace(0.0, 3.0, 101), 128);
    c.add("direct.residual.const_phi", res.max_abs(), 1e-3);

    // eta0 = 0 end to end
    PhysicalInitialData flat{SampledFunction::tabulate(-1.0, 9.0, 128,
                                                       [](double) { return 0.0; })};
    DirectConfig cfg;
    cfg.n_sigma = 256;
    cfg.n_tau = 256;
    auto rec = direct_shoreline(flat, cfg);
    double m = 0.0;
    for (std::size_t i = 0; i < rec.t.size(); ++i)
        m = std::max({m, std::abs(rec.x0[i]), std::abs(rec.v0[i])});
    c.add("direct.flat_profile", m, 1e-12);
}

void wave_checks(Collector& c)
{
    // constant solution over 1000 steps
    HodographInitialData h;
    h.psi0 = SampledFunction::tabulate(0.0, 4.0, 201, [](double) { return 0.3; });
    h.phi0 = SampledFunction::tabulate(0.0, 4.0, 201, [](double) { return 0.0; });
    WaveConfig cfg;
    cfg.sigma_max = 4.0;
    cfg.n_sigma = 201;
    cfg.cfl = 0.5;
    cfg.tau_max = 1000 * 0.5 * (4.0 / 200.0);
    auto field = evolve(h, cfg);
    double err = 0.0;
    for (double v : field.psi)
        err = std::max(err, std::abs(v - 0.3));
    for (double v : field.phi)
        err = std::max(err, std::abs(v));
    c.add("wave.constant_solution", err, 1e-13);
}

} // namespace

std::vector<CheckResult> run_selftest()
{
    Collector c;
    abel_anchors(c);
    abel_linearity(c);
    kernel_checks(c);
    hodograph_checks(c);
    direct_checks(c);
    wave_checks(c);
    return c.results;
}

} // namespace runup
