#pragma once

#include "runup/sampled_function.hpp"

#include <string>
#include <vector>

namespace runup {

/// Which physical quantity a profile carries; selects the conversion rule.
enum class ProfileKind {
    elevation,        // abscissa: position [m], values: elevation [m]
    velocity,         // abscissa: time [s],     values: velocity [m/s]
    position_series,  // abscissa: time [s],     values: position [m]
};

std::string to_string(ProfileKind k);
ProfileKind profile_kind_from_string(const std::string& s);

struct ScalingParameters {
    double H0 = 1.0;    // reference height [m]
    double alpha = 1.0; // beach slope
    double g = 9.81;    // gravitational acceleration [m/s^2]

    void validate() const; // throws invalid_parameters
};

struct DimensionalProfile {
    std::vector<double> abscissa;
    std::vector<double> values;
    ProfileKind kind = ProfileKind::elevation;
};

SampledFunction to_dimensionless(const DimensionalProfile& p, const ScalingParameters& s);
DimensionalProfile to_dimensional(const SampledFunction& f, const ScalingParameters& s,
                                  ProfileKind kind);

} // namespace runup
