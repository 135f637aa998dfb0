#include "runup/inversion.hpp"
#include "runup/abel.hpp"
#include "runup/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace runup {

namespace {

const double pi = std::acos(-1.0);

// Fits a degree-d polynomial around t[center] over window samples starting
// at j0; returns (value, slope) of the fit at t[center].
std::array<double, 2> window_fit(const std::vector<double>& t,
                                 const std::vector<double>& y,
                                 std::size_t j0, int window, int degree,
                                 std::size_t center)
{
    const int m = degree + 1;
    double scale = 0.0;
    for (int j = 0; j < window; ++j)
        scale = std::max(scale, std::abs(t[j0 + j] - t[center]));
    if (scale == 0.0)
        scale = 1.0;

    double G[4][5] = {}; // normal equations, augmented
    for (int j = 0; j < window; ++j) {
        const double u = (t[j0 + j] - t[center]) / scale;
        double up[4] = {1.0, u, u * u, u * u * u};
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q)
                G[p][q] += up[p] * up[q];
            G[p][m] += up[p] * y[j0 + j];
        }
    }
    // Gaussian elimination with partial pivoting
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::abs(G[r][c]) > std::abs(G[piv][c]))
                piv = r;
        for (int k = 0; k <= m; ++k)
            std::swap(G[c][k], G[piv][k]);
        if (G[c][c] == 0.0)
            throw data_error("window_fit: singular normal equations");
        for (int r = 0; r < m; ++r) {
            if (r == c)
                continue;
            const double f = G[r][c] / G[c][c];
            for (int k = c; k <= m; ++k)
                G[r][k] -= f * G[c][k];
        }
    }
    const double c0 = G[0][m] / G[0][0];
    const double c1 = m > 1 ? G[1][m] / G[1][1] : 0.0;
    return {c0, c1 / scale};
}

void check_window(const std::vector<double>& t, const std::vector<double>& y,
                  int window, int degree)
{
    if (degree < 0 || degree > 3)
        throw invalid_parameters("smoothing degree must be in [0, 3]");
    if (window < degree + 1)
        throw invalid_parameters("smoothing window must be >= degree + 1");
    if (t.size() != y.size())
        throw data_error("series length mismatch");
    if (t.size() < std::size_t(window))
        throw data_error("too few samples for the smoothing window");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] <= t[i - 1])
            throw data_error("time axis not strictly increasing");
}

std::vector<double> moving_fit(const std::vector<double>& t,
                               const std::vector<double>& y,
                               int window, int degree, int component)
{
    check_window(t, y, window, degree);
    const std::size_t n = t.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j0 = i >= std::size_t(window / 2) ? i - window / 2 : 0;
        j0 = std::min(j0, n - std::size_t(window));
        out[i] = window_fit(t, y, j0, window, degree, i)[component];
    }
    return out;
}

} // namespace

void InversionConfig::validate() const
{
    if (smooth_degree < 0 || smooth_degree > 3)
        throw invalid_parameters("InversionConfig: smoothing degree must be <= 3");
    if (smooth_window < smooth_degree + 1 || smooth_window % 2 == 0)
        throw invalid_parameters("InversionConfig: window must be odd and >= degree + 1");
    if (n_tau < 64)
        throw invalid_parameters("InversionConfig: n_tau must be >= 64");
}

std::vector<double> differentiate_record(const std::vector<double>& t,
                                         const std::vector<double>& x0,
                                         int window, int degree)
{
    if (degree < 1)
        throw invalid_parameters("differentiate_record: degree must be >= 1");
    return moving_fit(t, x0, window, degree, 1);
}

std::vector<double> smooth_series(const std::vector<double>& t,
                                  const std::vector<double>& y,
                                  int window, int degree)
{
    return moving_fit(t, y, window, degree, 0);
}

InversionResult recover_initial(const ShorelineRecord& r, const InversionConfig& cfg)
{
    cfg.validate();
    if (r.t.size() < 2 || r.x0.size() != r.t.size())
        throw data_error("recover_initial: record needs matching t and x0 columns");

    InversionResult result;
    result.v0_supplied = r.v0.size() == r.t.size();

    // window of degree+1 samples interpolates: smoothing disabled
    const int max_w = int(r.t.size()) % 2 == 1 ? int(r.t.size()) : int(r.t.size()) - 1;
    const int w = std::min(cfg.smooth_window, max_w);
    std::vector<double> x0s = smooth_series(r.t, r.x0, w, cfg.smooth_degree);
    std::vector<double> v0 = differentiate_record(r.t, r.x0, w, cfg.smooth_degree);
    if (result.v0_supplied) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < v0.size(); ++i) {
            num += (r.v0[i] - v0[i]) * (r.v0[i] - v0[i]);
            den += r.v0[i] * r.v0[i];
        }
        result.v0_rms_disagreement = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
        result.v0_warning = result.v0_rms_disagreement > 0.05;
        v0 = r.v0; // supplied velocity is trusted
    }

    ShorelineRecord cond{r.t, std::move(x0s), std::move(v0)};
    result.record_margin = breaking_check(cond);
    if (result.record_margin.breaking)
        throw breaking_error("recover_initial: record violates 1 - dv0/dt > 0 "
                             "(breaking at the shoreline)");

    ShorelineTrace tr = record_to_trace(cond);
    // endpoint fidelity matters for the Abel integral: pin Psi at tau = 0
    // from the raw first sample
    const double psi_pin = -r.x0.front() + 0.5 * cond.v0.front() * cond.v0.front();
    std::vector<double> tau_s, psi_s;
    tau_s.reserve(tr.tau.size() + 1);
    psi_s.reserve(tr.tau.size() + 1);
    // noise in the differentiated velocity can shift tau[0] slightly off
    // zero in either direction; only a genuinely truncated record is rejected
    const double slack = 1e-2 * std::max(tr.tau.back(), 1e-300);
    if (tr.tau.front() > slack)
        throw data_error("recover_initial: record must start at the quiescent instant "
                         "(tau[0] = 0)");
    tau_s.push_back(0.0);
    psi_s.push_back(psi_pin);
    for (std::size_t i = 0; i < tr.tau.size(); ++i) {
        if (tr.tau[i] <= tau_s.back())
            continue; // noise can push the first instants slightly negative
        tau_s.push_back(tr.tau[i]);
        psi_s.push_back(tr.Psi[i]);
    }
    if (tau_s.size() < 2)
        throw data_error("recover_initial: record too short after conditioning");

    SampledFunction psi_raw(std::move(tau_s), std::move(psi_s));
    const double tau_max = psi_raw.xmax();
    SampledFunction Psi = resample(psi_raw, linspace(0.0, tau_max, std::size_t(cfg.n_tau)));

    SampledFunction a_psi =
        abel_forward(Psi, linspace(0.0, tau_max, std::size_t(cfg.n_tau)), cfg.quad_nodes);
    std::vector<double> psi0_v(a_psi.values());
    for (double& v : psi0_v)
        v *= 2.0 / pi;

    HodographInitialData h;
    h.psi0 = SampledFunction(a_psi.grid(), std::move(psi0_v));
    h.phi0 = SampledFunction(a_psi.grid(), std::vector<double>(a_psi.size(), 0.0));

    PhysicalInitialData rec = hodograph_ic_to_physical(h);
    result.sigma_max = tau_max;
    result.x_min = rec.eta0.xmin();
    result.x_max = rec.eta0.xmax();

    if (!cfg.x_grid.empty()) {
        if (cfg.x_grid.front() < result.x_min || cfg.x_grid.back() > result.x_max) {
            std::ostringstream os;
            os << "recover_initial: requested x-grid [" << cfg.x_grid.front() << ", "
               << cfg.x_grid.back() << "] outside data-determined range ["
               << result.x_min << ", " << result.x_max << "]";
            throw domain_error(os.str());
        }
        rec.eta0 = resample(rec.eta0, cfg.x_grid);
    }
    result.eta0 = std::move(rec);
    return result;
}

} // namespace runup
