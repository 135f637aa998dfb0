#pragma once

#include "runup/hodograph.hpp"
#include "runup/sampled_function.hpp"

#include <vector>

namespace runup {

struct InversionConfig {
    int smooth_window = 11; // odd sample count; degree+1 disables smoothing
    int smooth_degree = 2;  // <= 3
    int n_tau = 512;        // uniform resampling size, >= 64
    std::vector<double> x_grid; // empty: keep the natural reconstruction grid
    int quad_nodes = 64;

    void validate() const;
};

/// Local least-squares polynomial derivative (moving window). Exact for
/// polynomial data up to the fitted degree; handles nonuniform t.
std::vector<double> differentiate_record(const std::vector<double>& t,
                                         const std::vector<double>& x0,
                                         int window, int degree);

/// Moving-window least-squares re-evaluation of a series (same fit as the
/// differentiator, value instead of slope). window == degree+1 interpolates.
std::vector<double> smooth_series(const std::vector<double>& t,
                                  const std::vector<double>& y,
                                  int window, int degree);

struct InversionResult {
    PhysicalInitialData eta0;
    double x_min = 0.0, x_max = 0.0;  // data-determined covered range
    double sigma_max = 0.0;            // = tau extent of the record
    BreakingReport record_margin;
    bool v0_supplied = false;
    double v0_rms_disagreement = 0.0;  // supplied vs differentiated, relative
    bool v0_warning = false;           // disagreement above 5%
};

/// Shoreline record -> initial displacement:
///  1. record -> trace, Psi resampled onto uniform tau (Psi(0) pinned);
///  2. psi0 = (2/pi) A Psi;
///  3. parametric reconstruction x = sigma^2 - psi0(sigma).
InversionResult recover_initial(const ShorelineRecord& r, const InversionConfig& cfg);

} // namespace runup
