#include "runup/direct.hpp"
#include "runup/abel.hpp"
#include "runup/errors.hpp"
#include "runup/kernels.hpp"
#include "runup/quadrature.hpp"

#include <cmath>

namespace runup {

namespace {

const double pi = std::acos(-1.0);

} // namespace

ShorelineTrace poisson_boundary(const HodographInitialData& h,
                                const std::vector<double>& tau_grid,
                                int quad_nodes)
{
    SampledFunction inv_psi = abel_inverse(h.psi0, tau_grid, quad_nodes);
    ShorelineTrace tr;
    tr.tau = tau_grid;
    tr.Psi.resize(tau_grid.size());
    if (h.phi0_is_zero()) {
        for (std::size_t i = 0; i < tau_grid.size(); ++i)
            tr.Psi[i] = 0.5 * pi * inv_psi.values()[i];
        return tr;
    }
    SampledFunction inv_phi = abel_inverse(h.phi0, tau_grid, quad_nodes);
    std::vector<double> s_phi(h.phi0.size());
    for (std::size_t i = 0; i < h.phi0.size(); ++i)
        s_phi[i] = h.phi0.grid()[i] * h.phi0.values()[i];
    SampledFunction fwd_sphi =
        abel_forward(SampledFunction(h.phi0.grid(), std::move(s_phi)), tau_grid, quad_nodes);
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        const double tau = tau_grid[i];
        tr.Psi[i] = 0.5 * pi * (inv_psi.values()[i] - tau * inv_phi.values()[i])
                  - fwd_sphi.values()[i];
    }
    return tr;
}

ShorelineTrace trace_velocity(const ShorelineTrace& tr)
{
    SampledFunction psi(tr.tau, tr.Psi);
    ShorelineTrace out = tr;
    out.V.resize(tr.tau.size());
    for (std::size_t i = 0; i < tr.tau.size(); ++i)
        out.V[i] = -0.5 * psi.derivative(tr.tau[i]);
    return out;
}

namespace {

// largest sigma where |psi0| still exceeds 1e-8 of its peak
double support_radius(const SampledFunction& psi0)
{
    const double thresh = 1e-8 * psi0.max_abs();
    const auto& g = psi0.grid();
    const auto& v = psi0.values();
    for (std::size_t i = g.size(); i-- > 0;)
        if (std::abs(v[i]) > thresh)
            return g[i];
    return g.front();
}

} // namespace

ShorelineRecord direct_shoreline(const PhysicalInitialData& d, const DirectConfig& cfg)
{
    const BreakingReport rep = breaking_check(d);
    if (rep.breaking)
        throw breaking_error("direct_shoreline: initial data breaks "
                             "(min margin " + std::to_string(rep.min_margin) + ")");

    if (cfg.n_sigma < 2 || cfg.n_tau < 2)
        throw config_error("direct_shoreline: grid sizes must be >= 2");

    // attainable hodograph radius from the tabulated total depth
    const double f_max = d.eta0.xmax() + d.eta0.values().back();
    if (f_max <= 0.0)
        throw config_error("direct_shoreline: profile does not reach positive depth");
    const double sigma_attainable = std::sqrt(f_max);

    double sigma_max = cfg.sigma_max;
    if (sigma_max <= 0.0) {
        // probe psi0 on a provisional grid to find its support
        HodographInitialData probe =
            initial_to_hodograph(d, linspace(0.0, sigma_attainable, 256));
        const double r_supp = support_radius(probe.psi0);
        sigma_max = r_supp > 0.0 ? std::min(4.0 * r_supp, sigma_attainable)
                                 : std::min(1.0, sigma_attainable);
    } else if (sigma_max > sigma_attainable) {
        throw config_error("direct_shoreline: sigma_max exceeds attainable radius " +
                           std::to_string(sigma_attainable));
    }

    double tau_max = cfg.tau_max > 0.0 ? cfg.tau_max : sigma_max;
    if (tau_max > sigma_max)
        throw config_error("direct_shoreline: tau_max must not exceed sigma_max "
                           "(domain of dependence not covered)");

    // tau_max <= sigma_max suffices: the boundary value at time tau only
    // depends on the initial data within radius tau
    HodographInitialData h =
        initial_to_hodograph(d, linspace(0.0, sigma_max, std::size_t(cfg.n_sigma)));
    ShorelineTrace tr =
        poisson_boundary(h, linspace(0.0, tau_max, std::size_t(cfg.n_tau)), cfg.quad_nodes);
    tr = trace_velocity(tr);
    return trace_to_record(tr);
}

SampledFunction shoreline_equation_residual(const HodographInitialData& h,
                                            const ShorelineTrace& tr,
                                            const std::vector<double>& sigma_grid,
                                            int kernel_nodes,
                                            int quad_nodes)
{
    SampledFunction Psi(tr.tau, tr.Psi);
    SampledFunction a_psi = abel_forward(Psi, sigma_grid, quad_nodes);
    const bool with_phi = !h.phi0_is_zero();
    std::vector<double> res(sigma_grid.size());
    for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
        const double sig = sigma_grid[i];
        double lhs = h.psi0(sig);
        if (with_phi && sig > 0.0) {
            lhs -= sig * h.phi0(sig);
            lhs += integrate_gl(
                [&](double s) { return shoreline_kernel(sig, s) * h.phi0(s); },
                0.0, sig, kernel_nodes);
        }
        res[i] = lhs - (2.0 / pi) * a_psi.values()[i];
    }
    return SampledFunction(sigma_grid, std::move(res));
}

} // namespace runup
