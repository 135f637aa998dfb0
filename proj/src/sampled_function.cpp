#include "runup/sampled_function.hpp"
#include "runup/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace runup {

std::vector<double> linspace(double a, double b, std::size_t n)
{
    if (n < 2)
        throw invalid_parameters("linspace: need at least 2 points");
    std::vector<double> g(n);
    const double h = (b - a) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = a + h * double(i);
    g.back() = b;
    return g;
}

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (grid_.size() < 2)
        throw data_error("SampledFunction: need at least 2 samples");
    if (grid_.size() != values_.size())
        throw data_error("SampledFunction: grid/value size mismatch");
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i]))
            throw data_error("SampledFunction: non-finite sample");
        if (i > 0 && grid_[i] <= grid_[i - 1])
            throw data_error("SampledFunction: grid not strictly increasing");
    }
    build_slopes();
}

SampledFunction SampledFunction::tabulate(double a, double b, std::size_t n,
                                          const std::function<double(double)>& f)
{
    auto g = linspace(a, b, n);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = f(g[i]);
    return SampledFunction(std::move(g), std::move(v));
}

namespace {

double limited_end_slope(double d, double del0, double del1)
{
    if (d * del0 <= 0.0)
        return 0.0;
    if (del0 * del1 < 0.0 && std::abs(d) > 3.0 * std::abs(del0))
        return 3.0 * del0;
    return d;
}

} // namespace

void SampledFunction::build_slopes()
{
    const std::size_t n = grid_.size();
    slopes_.assign(n, 0.0);
    std::vector<double> h(n - 1), del(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = grid_[i + 1] - grid_[i];
        del[i] = (values_[i + 1] - values_[i]) / h[i];
    }
    if (n == 2) {
        slopes_[0] = slopes_[1] = del[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (del[i - 1] * del[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            // Fritsch-Carlson weighted harmonic mean
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
        }
    }
    // one-sided 3-point end stencils
    double d0 = ((2.0 * h[0] + h[1]) * del[0] - h[0] * del[1]) / (h[0] + h[1]);
    slopes_[0] = limited_end_slope(d0, del[0], del[1]);
    double dn = ((2.0 * h[n - 2] + h[n - 3]) * del[n - 2] - h[n - 2] * del[n - 3])
                / (h[n - 2] + h[n - 3]);
    slopes_[n - 1] = limited_end_slope(dn, del[n - 2], del[n - 3]);
}

double SampledFunction::clamp_to_domain(double x) const
{
    const double span = grid_.back() - grid_.front();
    const double tol = 1e-12 * std::max(1.0, std::abs(span));
    if (x < grid_.front() - tol || x > grid_.back() + tol) {
        std::ostringstream os;
        os << "SampledFunction: evaluation at " << x << " outside ["
           << grid_.front() << ", " << grid_.back() << "]";
        throw domain_error(os.str());
    }
    return std::clamp(x, grid_.front(), grid_.back());
}

std::size_t SampledFunction::locate(double x) const
{
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    std::size_t i = (it == grid_.begin()) ? 0 : std::size_t(it - grid_.begin()) - 1;
    return std::min(i, grid_.size() - 2);
}

double SampledFunction::operator()(double x) const
{
    x = clamp_to_domain(x);
    const std::size_t i = locate(x);
    const double h = grid_[i + 1] - grid_[i];
    const double t = (x - grid_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * values_[i] + h * h10 * slopes_[i]
         + h01 * values_[i + 1] + h * h11 * slopes_[i + 1];
}

double SampledFunction::derivative(double x) const
{
    x = clamp_to_domain(x);
    const std::size_t i = locate(x);
    const double h = grid_[i + 1] - grid_[i];
    const double t = (x - grid_[i]) / h;
    const double t2 = t * t;
    const double dh00 = (6 * t2 - 6 * t) / h;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = (-6 * t2 + 6 * t) / h;
    const double dh11 = 3 * t2 - 2 * t;
    return dh00 * values_[i] + dh10 * slopes_[i]
         + dh01 * values_[i + 1] + dh11 * slopes_[i + 1];
}

double SampledFunction::max_abs() const
{
    double m = 0.0;
    for (double v : values_)
        m = std::max(m, std::abs(v));
    return m;
}

SampledFunction resample(const SampledFunction& f, std::vector<double> grid)
{
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        v[i] = f(grid[i]);
    return SampledFunction(std::move(grid), std::move(v));
}

} // namespace runup
