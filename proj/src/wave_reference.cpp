#include "runup/wave_reference.hpp"
#include "runup/errors.hpp"

#include <cmath>

namespace runup {

namespace {

// psi0 evaluated on the FD grid; beyond its tabulated range the profile must
// have decayed, in which case it is extended by zero.
double eval_padded(const SampledFunction& f, double x)
{
    if (x <= f.xmax())
        return f(x);
    if (std::abs(f.values().back()) <= 1e-10 * std::max(1.0, f.max_abs()))
        return 0.0;
    throw domain_error("evolve: psi0 does not cover sigma_max and has not decayed");
}

} // namespace

HodographField evolve(const HodographInitialData& h, const WaveConfig& cfg)
{
    if (!h.phi0_is_zero())
        throw invalid_parameters("evolve: only phi0 = 0 initial data supported");
    if (cfg.sigma_max <= 0.0 || cfg.tau_max <= 0.0 || cfg.n_sigma < 3)
        throw config_error("evolve: sigma_max, tau_max, n_sigma must be set");
    if (cfg.cfl <= 0.0 || cfg.cfl > 0.5)
        throw config_error("evolve: CFL ratio must be in (0, 0.5]");

    const std::size_t ns = std::size_t(cfg.n_sigma);
    const double ds = cfg.sigma_max / double(ns - 1);
    const double dt = cfg.cfl * ds;
    const std::size_t nt = std::size_t(std::ceil(cfg.tau_max / dt)) + 1;

    HodographField f;
    f.sigma = linspace(0.0, cfg.sigma_max, ns);
    f.tau.resize(nt);
    for (std::size_t n = 0; n < nt; ++n)
        f.tau[n] = dt * double(n);
    f.psi.assign(nt * ns, 0.0);
    f.phi.assign(nt * ns, 0.0);

    auto psi = [&](std::size_t n, std::size_t i) -> double& { return f.psi[n * ns + i]; };
    auto phi = [&](std::size_t n, std::size_t i) -> double& { return f.phi[n * ns + i]; };

    for (std::size_t i = 0; i < ns; ++i)
        psi(0, i) = eval_padded(h.psi0, f.sigma[i]);
    // phi(0, .) = 0 already

    const double inv_ds2 = 1.0 / (ds * ds);

    // spatial operator psi_ss + psi_s / sigma, axis limit 2 psi_ss(0)
    auto L = [&](std::size_t n, std::size_t i) -> double {
        if (i == 0)
            return 4.0 * (psi(n, 1) - psi(n, 0)) * inv_ds2;
        const double d2 = (psi(n, i + 1) - 2.0 * psi(n, i) + psi(n, i - 1)) * inv_ds2;
        const double d1 = (psi(n, i + 1) - psi(n, i - 1)) / (2.0 * ds);
        return d2 + d1 / f.sigma[i];
    };
    // psi_sigma / sigma, axis limit psi_ss(0)
    auto S = [&](std::size_t n, std::size_t i) -> double {
        if (i == 0)
            return 2.0 * (psi(n, 1) - psi(n, 0)) * inv_ds2;
        return (psi(n, i + 1) - psi(n, i - 1)) / (2.0 * ds * f.sigma[i]);
    };

    if (nt > 1) {
        // first step: psi_tau(.,0) = 0, so a half-acceleration Taylor step;
        // phi from phi_tau(.,0) = -psi_sigma/sigma (phi_tautau(.,0) = 0)
        for (std::size_t i = 0; i + 1 < ns; ++i) {
            psi(1, i) = psi(0, i) + 0.5 * dt * dt * L(0, i);
            phi(1, i) = -dt * S(0, i);
        }
        psi(1, ns - 1) = psi(0, ns - 1);
    }

    for (std::size_t n = 1; n + 1 < nt; ++n) {
        for (std::size_t i = 0; i + 1 < ns; ++i) {
            psi(n + 1, i) = 2.0 * psi(n, i) - psi(n - 1, i) + dt * dt * L(n, i);
            phi(n + 1, i) = phi(n - 1, i) - 2.0 * dt * S(n, i);
        }
        psi(n + 1, ns - 1) = psi(0, ns - 1); // far boundary held at initial value
        if (n % 128 == 0 && !std::isfinite(psi(n + 1, 0)))
            throw stability_error("evolve: solution blew up");
    }
    if (!std::isfinite(psi(nt - 1, 0)) || !std::isfinite(phi(nt - 1, 0)))
        throw stability_error("evolve: solution blew up");
    return f;
}

ShorelineTrace extract_boundary(const HodographField& f)
{
    ShorelineTrace tr;
    tr.tau = f.tau;
    tr.Psi.resize(f.tau.size());
    tr.V.resize(f.tau.size());
    for (std::size_t n = 0; n < f.tau.size(); ++n) {
        tr.Psi[n] = f.psi_at(n, 0);
        tr.V[n] = f.phi_at(n, 0);
    }
    return tr;
}

} // namespace runup
