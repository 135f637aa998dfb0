#include "runup/hodograph.hpp"
#include "runup/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace runup {

double gamma_solve(const SampledFunction& eta0, double sigma)
{
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw domain_error("gamma_solve: sigma must be finite and >= 0");
    const double target = sigma * sigma;

    const auto& xs = eta0.grid();
    const auto& ys = eta0.values();
    const std::size_t n = xs.size();

    // tabulated total depth F(x) = x + eta0(x); must be increasing at nodes
    double f_lo = xs.front() + ys.front();
    double f_hi = xs.back() + ys.back();
    if (target < f_lo - 1e-12 || target > f_hi + 1e-12) {
        std::ostringstream os;
        os << "gamma_solve: sigma^2 = " << target << " outside range ["
           << f_lo << ", " << f_hi << "] of x + eta0(x)";
        throw domain_error(os.str());
    }

    // locate bracketing interval from node values
    std::size_t lo = n - 2, hi = n - 1;
    double prev = f_lo;
    for (std::size_t i = 1; i < n; ++i) {
        const double fi = xs[i] + ys[i];
        if (fi <= prev)
            throw breaking_error("gamma_solve: x + eta0(x) not increasing (wave breaks)");
        if (fi >= target) {
            lo = i - 1;
            hi = i;
            break;
        }
        prev = fi;
    }

    auto F = [&](double x) { return x + eta0(x); };
    double a = xs[lo], b = xs[hi];
    double x = 0.5 * (a + b);
    // bisection to locate, Newton polish on top
    for (int it = 0; it < 200; ++it) {
        const double fx = F(x) - target;
        if (std::abs(fx) <= 1e-13 * std::max(1.0, std::abs(target)))
            break;
        if (fx > 0.0)
            b = x;
        else
            a = x;
        const double deriv = 1.0 + eta0.derivative(x);
        double xn = (deriv > 0.1) ? x - fx / deriv : 0.5 * (a + b);
        if (!(xn > a) || !(xn < b))
            xn = 0.5 * (a + b);
        if (xn == x)
            break;
        x = xn;
    }
    return std::clamp(x, xs.front(), xs.back());
}

HodographInitialData initial_to_hodograph(const PhysicalInitialData& d,
                                          const std::vector<double>& sigma_grid)
{
    std::vector<double> psi(sigma_grid.size());
    for (std::size_t i = 0; i < sigma_grid.size(); ++i)
        psi[i] = d.eta0(gamma_solve(d.eta0, sigma_grid[i]));
    HodographInitialData h;
    h.psi0 = SampledFunction(sigma_grid, std::move(psi));
    h.phi0 = SampledFunction(sigma_grid, std::vector<double>(sigma_grid.size(), 0.0));
    return h;
}

PhysicalInitialData hodograph_ic_to_physical(const HodographInitialData& h)
{
    if (!h.phi0_is_zero())
        throw invalid_parameters("hodograph_ic_to_physical: requires phi0 = 0");
    const auto& sig = h.psi0.grid();
    const auto& psi = h.psi0.values();
    std::vector<double> x(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i)
        x[i] = sig[i] * sig[i] - psi[i];
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] <= x[i - 1])
            throw breaking_error("hodograph_ic_to_physical: x(sigma) not increasing "
                                 "(reconstruction invalid, wave breaks)");
    return PhysicalInitialData{SampledFunction(std::move(x), psi)};
}

ShorelineTrace record_to_trace(const ShorelineRecord& r)
{
    const std::size_t n = r.t.size();
    if (n < 2 || r.x0.size() != n || r.v0.size() != n)
        throw data_error("record_to_trace: need t, x0, v0 of equal length >= 2");
    ShorelineTrace tr;
    tr.tau.resize(n);
    tr.Psi.resize(n);
    tr.V = r.v0;
    for (std::size_t i = 0; i < n; ++i) {
        tr.tau[i] = 0.5 * (r.t[i] - r.v0[i]);
        tr.Psi[i] = -r.x0[i] + 0.5 * r.v0[i] * r.v0[i];
    }
    for (std::size_t i = 1; i < n; ++i)
        if (tr.tau[i] <= tr.tau[i - 1])
            throw breaking_error("record_to_trace: hodograph time not monotone "
                                 "(record implies breaking at the shoreline)");
    return tr;
}

ShorelineRecord trace_to_record(const ShorelineTrace& tr)
{
    const std::size_t n = tr.tau.size();
    if (n < 2 || tr.Psi.size() != n || tr.V.size() != n)
        throw data_error("trace_to_record: need tau, Psi, V of equal length >= 2");
    ShorelineRecord r;
    r.t.resize(n);
    r.x0.resize(n);
    r.v0 = tr.V;
    for (std::size_t i = 0; i < n; ++i) {
        r.t[i] = 2.0 * tr.tau[i] + tr.V[i];
        r.x0[i] = -tr.Psi[i] + 0.5 * tr.V[i] * tr.V[i];
    }
    for (std::size_t i = 1; i < n; ++i)
        if (r.t[i] <= r.t[i - 1])
            throw breaking_error("trace_to_record: physical time not monotone "
                                 "(trace implies breaking at the shoreline)");
    return r;
}

namespace {

BreakingReport make_report(double min_margin, std::string quantity)
{
    BreakingReport rep;
    rep.min_margin = min_margin;
    rep.breaking = min_margin <= 0.0;
    rep.near_breaking = min_margin <= 0.05;
    rep.quantity = std::move(quantity);
    return rep;
}

} // namespace

BreakingReport breaking_check(const PhysicalInitialData& d)
{
    const auto& xs = d.eta0.grid();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m = std::min(m, 1.0 + d.eta0.derivative(xs[i]));
        if (i + 1 < xs.size())
            m = std::min(m, 1.0 + d.eta0.derivative(0.5 * (xs[i] + xs[i + 1])));
    }
    return make_report(m, "min(1 + deta0/dx)");
}

BreakingReport breaking_check(const ShorelineRecord& r)
{
    if (r.t.size() < 2)
        throw data_error("breaking_check: record too short");
    std::vector<double> v0 = r.v0;
    if (v0.size() != r.t.size()) {
        // no velocity column: take it from the spline of x0
        SampledFunction x0(r.t, r.x0);
        v0.resize(r.t.size());
        for (std::size_t i = 0; i < r.t.size(); ++i)
            v0[i] = x0.derivative(r.t[i]);
    }
    SampledFunction vel(r.t, std::move(v0));
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.t.size(); ++i)
        m = std::min(m, 1.0 - vel.derivative(r.t[i]));
    return make_report(m, "min(1 - dv0/dt)");
}

} // namespace runup
