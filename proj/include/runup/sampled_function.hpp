#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace runup {

/// A function tabulated on a strictly increasing grid, evaluated by a
/// shape-preserving (Fritsch-Carlson) cubic interpolant. Evaluation outside
/// [xmin, xmax] throws; extrapolation is never performed.
class SampledFunction {
public:
    SampledFunction() = default;
    SampledFunction(std::vector<double> grid, std::vector<double> values);

    static SampledFunction tabulate(double a, double b, std::size_t n,
                                    const std::function<double(double)>& f);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return grid_.size(); }
    bool empty() const { return grid_.empty(); }

    double xmin() const { return grid_.front(); }
    double xmax() const { return grid_.back(); }

    /// Interpolated value at x. Throws domain_error outside [xmin, xmax].
    double operator()(double x) const;

    /// Derivative of the interpolant at x. End-node slopes come from
    /// one-sided 3-point stencils with the monotonicity limiter.
    double derivative(double x) const;

    double max_abs() const;

private:
    std::vector<double> grid_, values_, slopes_;

    std::size_t locate(double x) const; // interval index, after clamping
    double clamp_to_domain(double x) const;
    void build_slopes();
};

std::vector<double> linspace(double a, double b, std::size_t n);

/// Re-tabulates f on a new grid (must lie inside f's domain).
SampledFunction resample(const SampledFunction& f, std::vector<double> grid);

} // namespace runup
