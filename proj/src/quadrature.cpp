#include "runup/quadrature.hpp"
#include "runup/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace runup {

namespace {

GaussRule make_gauss_legendre(int n)
{
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P_n'(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

} // namespace

const GaussRule& gauss_legendre(int n)
{
    if (n < 1)
        throw invalid_parameters("gauss_legendre: n must be positive");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f,
                    double a, double b, int n_total)
{
    if (n_total < 1)
        throw invalid_parameters("integrate_gl: node count must be positive");
    const int per_panel = std::min(n_total, 16);
    const int panels = (n_total + per_panel - 1) / per_panel;
    const GaussRule& rule = gauss_legendre(per_panel);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + h * (p + 0.5);
        const double half = 0.5 * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * 0.5 * h;
}

} // namespace runup
