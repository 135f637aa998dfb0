#include "runup/kernels.hpp"
#include "runup/errors.hpp"

#include <cmath>
#include <limits>

namespace runup {

namespace {

const double pi = std::acos(-1.0);

void check_domain(double x, double s, bool allow_s0, bool allow_sx)
{
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(s))
        throw domain_error("kernel: requires finite x > 0");
    if (s < 0.0 || (!allow_s0 && s == 0.0))
        throw domain_error("kernel: s out of range (s <= 0)");
    if (s > x || (!allow_sx && s == x))
        throw domain_error("kernel: s out of range (s >= x)");
}

} // namespace

EllipticKE complete_elliptic(double k, double kprime)
{
    if (k < 0.0 || kprime < 0.0)
        throw domain_error("complete_elliptic: moduli must be nonnegative");
    if (kprime == 0.0)
        return {std::numeric_limits<double>::infinity(), 1.0};
    double a = 1.0, b = kprime, c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int it = 0; it < 60 && std::abs(c) > 1e-17 * a; ++it) {
        const double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    const double K = pi / (2.0 * a);
    return {K, K * (1.0 - sum)};
}

double kernel_k0(double x, double s)
{
    check_domain(x, s, /*allow_s0=*/true, /*allow_sx=*/false);
    if (s == 0.0)
        return std::numeric_limits<double>::infinity();
    const double k = std::sqrt((x - s) * (x + s)) / x;
    const double kp = s / x;
    return complete_elliptic(k, kp).K / x;
}

double kernel_k2(double x, double s)
{
    check_domain(x, s, /*allow_s0=*/true, /*allow_sx=*/true);
    const double k = std::sqrt((x - s) * (x + s)) / x;
    const double kp = s / x;
    return x * complete_elliptic(k, kp).E;
}

double kernel_k2_ds(double x, double s)
{
    check_domain(x, s, /*allow_s0=*/false, /*allow_sx=*/false);
    const double k2 = (x - s) * (x + s) / (x * x);
    double ratio; // (K - E) / k^2
    if (k2 < 1e-6) {
        // series avoids the K - E cancellation near s = x
        ratio = 0.25 * pi * (1.0 + (3.0 / 8.0) * k2 + (15.0 / 64.0) * k2 * k2);
    } else {
        const EllipticKE ke = complete_elliptic(std::sqrt(k2), s / x);
        ratio = (ke.K - ke.E) / k2;
    }
    return s * ratio / x;
}

double combined_kernel(double x, double s)
{
    return kernel_k2_ds(x, s) - (2.0 * s / pi) * kernel_k0(x, s);
}

double shoreline_kernel(double x, double s)
{
    return (2.0 / pi) * (kernel_k2_ds(x, s) - s * kernel_k0(x, s));
}

} // namespace runup
