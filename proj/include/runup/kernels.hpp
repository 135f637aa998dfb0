#pragma once

namespace runup {

struct EllipticKE {
    double K;
    double E;
};

/// Complete elliptic integrals K(k), E(k) by the arithmetic-geometric mean.
/// Takes the modulus and complementary modulus separately so callers can
/// supply k' exactly. k = 1 (k' = 0) returns K = +inf, E = 1.
EllipticKE complete_elliptic(double k, double kprime);

/// K0(x, s) = int_s^x dt / sqrt((t^2 - s^2)(x^2 - t^2)) = K(k)/x,
/// k = sqrt(x^2 - s^2)/x. Requires 0 <= s < x. At s = 0 the value is the
/// +inf sentinel (integrable log singularity).
double kernel_k0(double x, double s);

/// K2(x, s) = int_s^x t^2 dt / sqrt((t^2 - s^2)(x^2 - t^2)) = x E(k).
/// Defined for 0 <= s <= x (the s -> x limit is x pi/2).
double kernel_k2(double x, double s);

/// dK2/ds at (x, s) = s (K(k) - E(k)) / (x k^2), for 0 < s < x.
double kernel_k2_ds(double x, double s);

/// kernel_k2_ds(x, s) - (2 s / pi) kernel_k0(x, s), for 0 < s < x.
double combined_kernel(double x, double s);

/// The bracket actually multiplying phi0 in the sigma-form of the boundary
/// relation: (2/pi) [ dK2/ds - s K0 ].
double shoreline_kernel(double x, double s);

} // namespace runup
