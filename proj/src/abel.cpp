#include "runup/abel.hpp"
#include "runup/errors.hpp"
#include "runup/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

namespace runup {

namespace {

std::atomic<double> g_weight_scale{1.0};

const double pi = std::acos(-1.0);

void check_grids(const SampledFunction& f, const std::vector<double>& out)
{
    if (out.empty())
        throw invalid_parameters("abel: empty output grid");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!std::isfinite(out[i]) || out[i] < 0.0)
            throw invalid_parameters("abel: output grid must be finite and nonnegative");
        if (i > 0 && out[i] <= out[i - 1])
            throw invalid_parameters("abel: output grid must be strictly increasing");
    }
    const double tol = 1e-12 * std::max(1.0, out.back());
    if (f.xmin() > tol || f.xmax() < out.back() - tol) {
        std::ostringstream os;
        os << "abel: input defined on [" << f.xmin() << ", " << f.xmax()
           << "] does not cover required [0, " << out.back() << "]";
        throw domain_error(os.str());
    }
}

// int_0^{pi/2} h(x sin(theta)) dtheta by composite Gauss-Legendre.
template <class H>
double half_circle_integral(const H& h, double x, int quad_nodes)
{
    const double scale = g_weight_scale.load();
    return scale * integrate_gl([&](double th) { return h(x * std::sin(th)); },
                                0.0, pi / 2.0, quad_nodes);
}

// Local cubic Lagrange interpolation on the tabulated grid. Unlike the
// monotone spline, this is exactly linear in the sampled values, which keeps
// both transforms linear operators to rounding accuracy.
class CubicEval {
public:
    explicit CubicEval(const SampledFunction& f) : x_(f.grid()), y_(f.values()) {}

    double value(double t) const
    {
        std::size_t j0, m;
        locate(t, j0, m);
        double sum = 0.0;
        for (std::size_t j = j0; j < j0 + m; ++j) {
            double l = 1.0;
            for (std::size_t k = j0; k < j0 + m; ++k)
                if (k != j)
                    l *= (t - x_[k]) / (x_[j] - x_[k]);
            sum += y_[j] * l;
        }
        return sum;
    }

    double slope(double t) const
    {
        std::size_t j0, m;
        locate(t, j0, m);
        double sum = 0.0;
        for (std::size_t j = j0; j < j0 + m; ++j) {
            double denom = 1.0;
            for (std::size_t k = j0; k < j0 + m; ++k)
                if (k != j)
                    denom *= x_[j] - x_[k];
            double dl = 0.0;
            for (std::size_t l = j0; l < j0 + m; ++l) {
                if (l == j)
                    continue;
                double p = 1.0;
                for (std::size_t k = j0; k < j0 + m; ++k)
                    if (k != j && k != l)
                        p *= t - x_[k];
                dl += p;
            }
            sum += y_[j] * dl / denom;
        }
        return sum;
    }

private:
    void locate(double& t, std::size_t& j0, std::size_t& m) const
    {
        const std::size_t n = x_.size();
        t = std::min(std::max(t, x_.front()), x_.back());
        if (n < 4) {
            j0 = 0;
            m = n;
            return;
        }
        std::size_t i = std::size_t(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin());
        i = i > 0 ? i - 1 : 0;
        j0 = i > 0 ? std::min(i - 1, n - 4) : 0;
        m = 4;
    }

    const std::vector<double>& x_;
    const std::vector<double>& y_;
};

} // namespace

void set_abel_weight_perturbation(double factor)
{
    g_weight_scale.store(factor);
}

double abel_weight_perturbation()
{
    return g_weight_scale.load();
}

SampledFunction abel_forward(const SampledFunction& f,
                             std::vector<double> out_grid,
                             int quad_nodes)
{
    check_grids(f, out_grid);
    const CubicEval fe(f);
    const double f0 = fe.value(0.0);
    std::vector<double> v(out_grid.size());
    for (std::size_t i = 0; i < out_grid.size(); ++i) {
        const double x = out_grid[i];
        if (x == 0.0)
            v[i] = 0.5 * pi * f0;
        else
            v[i] = half_circle_integral([&](double s) { return fe.value(s); }, x, quad_nodes);
    }
    return SampledFunction(std::move(out_grid), std::move(v));
}

SampledFunction abel_inverse(const SampledFunction& g,
                             std::vector<double> out_grid,
                             int quad_nodes)
{
    check_grids(g, out_grid);
    const CubicEval ge(g);
    const double g0 = ge.value(0.0);
    std::vector<double> v(out_grid.size());
    for (std::size_t i = 0; i < out_grid.size(); ++i) {
        const double x = out_grid[i];
        if (x == 0.0) {
            v[i] = 2.0 / pi * g0;
        } else {
            const double integral =
                half_circle_integral([&](double s) { return ge.slope(s); }, x, quad_nodes);
            v[i] = 2.0 / pi * (g0 + x * integral);
        }
    }
    return SampledFunction(std::move(out_grid), std::move(v));
}

} // namespace runup
