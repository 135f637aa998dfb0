#include "runup/scaling.hpp"
#include "runup/errors.hpp"

#include <cmath>

namespace runup {

std::string to_string(ProfileKind k)
{
    switch (k) {
    case ProfileKind::elevation: return "elevation";
    case ProfileKind::velocity: return "velocity";
    case ProfileKind::position_series: return "position-series";
    }
    return "?";
}

ProfileKind profile_kind_from_string(const std::string& s)
{
    if (s == "elevation") return ProfileKind::elevation;
    if (s == "velocity") return ProfileKind::velocity;
    if (s == "position-series") return ProfileKind::position_series;
    throw invalid_parameters("unknown profile kind: " + s);
}

void ScalingParameters::validate() const
{
    if (!(H0 > 0.0) || !std::isfinite(H0) ||
        !(alpha > 0.0) || !std::isfinite(alpha) ||
        !(g > 0.0) || !std::isfinite(g))
        throw invalid_parameters("ScalingParameters: H0, alpha, g must be positive and finite");
}

namespace {

// Multiplicative factors taking dimensional quantities to dimensionless ones.
struct Factors {
    double abscissa;
    double value;
};

Factors factors(const ScalingParameters& s, ProfileKind kind)
{
    const double x_f = s.alpha / s.H0;
    const double t_f = s.alpha * std::sqrt(s.g / s.H0);
    const double eta_f = 1.0 / s.H0;
    const double u_f = 1.0 / std::sqrt(s.H0 * s.g);
    switch (kind) {
    case ProfileKind::elevation: return {x_f, eta_f};
    case ProfileKind::velocity: return {t_f, u_f};
    case ProfileKind::position_series: return {t_f, x_f};
    }
    throw invalid_parameters("bad kind");
}

} // namespace

SampledFunction to_dimensionless(const DimensionalProfile& p, const ScalingParameters& s)
{
    s.validate();
    const Factors f = factors(s, p.kind);
    std::vector<double> g(p.abscissa), v(p.values);
    for (double& x : g) x *= f.abscissa;
    for (double& y : v) y *= f.value;
    return SampledFunction(std::move(g), std::move(v));
}

DimensionalProfile to_dimensional(const SampledFunction& fn, const ScalingParameters& s,
                                  ProfileKind kind)
{
    s.validate();
    const Factors f = factors(s, kind);
    DimensionalProfile p;
    p.kind = kind;
    p.abscissa = fn.grid();
    p.values = fn.values();
    for (double& x : p.abscissa) x /= f.abscissa;
    for (double& y : p.values) y /= f.value;
    return p;
}

} // namespace runup
