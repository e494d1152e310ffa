#include "phpos/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "phpos/quadrature.hpp"

namespace phpos::specfun {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

} // namespace

Elliptic ellip_KE(double kappa, double kappa_c)
{
    if (!(kappa >= 0.0) || !(kappa <= 1.0) || !(kappa_c > 0.0))
        throw DomainError("elliptic modulus must lie in [0, 1), got " + std::to_string(kappa));
    // AGM with the c_n sequence; K - E = K * sum 2^{n-1} c_n^2, c_0 = kappa.
    double a = 1.0, b = kappa_c;
    double weight = 0.5, sum = 0.5 * kappa * kappa;
    for (int it = 0; it < 64; ++it) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        weight *= 2.0;
        sum += weight * c * c;
        if (std::abs(c) <= 4.0 * std::numeric_limits<double>::epsilon() * a) break;
    }
    const double K = pi / (2.0 * a);
    const double D = K * sum;
    return {K, K - D, D};
}

Elliptic ellip_KE(double kappa)
{
    if (!(kappa >= 0.0) || !(kappa < 1.0))
        throw DomainError("elliptic modulus must lie in [0, 1), got " + std::to_string(kappa));
    return ellip_KE(kappa, std::sqrt((1.0 - kappa) * (1.0 + kappa)));
}

double ellip_K(double kappa) { return ellip_KE(kappa).K; }

double ellip_E(double kappa)
{
    if (kappa == 1.0) return 1.0;
    if (!(kappa >= 0.0) || kappa > 1.0)
        throw DomainError("elliptic modulus must lie in [0, 1], got " + std::to_string(kappa));
    return ellip_KE(kappa).E;
}

double ellip_K_prime(double kappa)
{
    if (kappa == 0.0) return 0.0;
    const auto e = ellip_KE(kappa);
    const double kc2 = (1.0 - kappa) * (1.0 + kappa);
    // E - (1-k^2)K = k^2 K - (K - E)
    return (kappa * kappa * e.K - e.K_minus_E) / (kappa * kc2);
}

double ellip_E_prime(double kappa)
{
    if (kappa == 0.0) return 0.0;
    const auto e = ellip_KE(kappa);
    return -e.K_minus_E / kappa;
}

double K_lemniscatic()
{
    static const double k0 = ellip_KE(std::sqrt(0.5), std::sqrt(0.5)).K;
    return k0;
}

double gamma_fn(double x) { return std::tgamma(x); }

double rgamma(double x)
{
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

double gauss_2f1_series(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c))
        throw DomainError("2F1: c must not be zero or a negative integer");
    double term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int n = 0; n < 100000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++quiet == 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("2F1 series did not converge");
}

double gauss_2f1(double a, double b, double c, double z)
{
    if (is_nonpositive_integer(c))
        throw DomainError("2F1: c must not be zero or a negative integer");
    if (!(z >= 0.0) || z > 1.0)
        throw DomainError("2F1: argument must lie in [0, 1], got " + std::to_string(z));
    const double d = c - a - b;
    if (z == 1.0) {
        if (d <= 0.0) throw DomainError("2F1 diverges at z = 1 when c - a - b <= 0");
        return gamma_fn(c) * gamma_fn(d) * rgamma(c - a) * rgamma(c - b);
    }
    if (z <= 0.5 || is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return gauss_2f1_series(a, b, c, z);

    const double sz = std::sqrt(z), sc = std::sqrt(1.0 - z);
    if (c == 1.0 && a == 0.5 && b == 0.5) return 2.0 / pi * ellip_KE(sz, sc).K;
    if (c == 1.0 && ((a == -0.5 && b == 0.5) || (a == 0.5 && b == -0.5)))
        return 2.0 / pi * ellip_KE(sz, sc).E;

    if (near_integer(d))
        throw DomainError("2F1: logarithmic connection case (integer c-a-b) not supported for z > 1/2");
    const double w = 1.0 - z;
    const double t1 = gamma_fn(c) * gamma_fn(d) * rgamma(c - a) * rgamma(c - b);
    const double t2 = gamma_fn(c) * gamma_fn(-d) * rgamma(a) * rgamma(b);
    double out = 0.0;
    if (t1 != 0.0) out += t1 * gauss_2f1_series(a, b, 1.0 - d, w);
    if (t2 != 0.0) out += t2 * std::pow(w, d) * gauss_2f1_series(c - a, c - b, 1.0 + d, w);
    return out;
}

double bessel_J(int order, double x)
{
    if (order < 0) return (order % 2 ? -1.0 : 1.0) * bessel_J(-order, x);
    switch (order) {
    case 0: return ::j0(x);
    case 1: return ::j1(x);
    default: return ::jn(order, x);
    }
}

double bessel_Kmod(double nu, double x)
{
    if (!(x > 0.0)) throw DomainError("bessel_Kmod requires x > 0");
    nu = std::abs(nu);
    // e^x K_nu(x) = int_0^inf exp(-2x sinh^2(t/2)) cosh(nu t) dt
    const double tmax = std::asinh(50.0 / x) + 5.0;
    auto f = [x, nu](double t) {
        const double sh = std::sinh(0.5 * t);
        return std::exp(-2.0 * x * sh * sh) * std::cosh(nu * t);
    };
    const auto r = quad::gauss_kronrod(f, 0.0, tmax, 0.0, 1e-14, 8);
    return r.value * std::exp(-x);
}

} // namespace phpos::specfun
