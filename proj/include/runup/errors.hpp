#pragma once

#include <stdexcept>

namespace runup {

// Scaling or solver parameter out of its admissible range.
struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested outside the tabulated or mathematically valid domain.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed numeric input: NaN, non-monotone grid, too few samples.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hodograph invertibility lost: the wave breaks and the transform is invalid.
struct breaking_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent run configuration (grid sizes, CFL ratio, truncation radius).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical blow-up in a time-stepping scheme.
struct stability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File-system or CSV/JSON schema failure.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace runup
