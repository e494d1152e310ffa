#pragma once

// Real-domain special functions: complete elliptic integrals, Gauss 2F1,
// Bessel J and K, gamma.

#include "phpos/types.hpp"

namespace phpos::specfun {

struct Elliptic {
    double K;
    double E;
    double K_minus_E; // computed without cancellation
};

// K and E of modulus kappa in [0, 1). kappa_c is the complementary modulus
// sqrt(1 - kappa^2); pass it when it is known more accurately than 1 - kappa.
Elliptic ellip_KE(double kappa);
Elliptic ellip_KE(double kappa, double kappa_c);

double ellip_K(double kappa);
double ellip_E(double kappa);
double ellip_K_prime(double kappa);
double ellip_E_prime(double kappa);

// K(1/sqrt 2), the lemniscatic value used throughout.
double K_lemniscatic();

double gauss_2f1(double a, double b, double c, double z);
// Raw Maclaurin series; z in [0, 1). Exposed for cross-checks.
double gauss_2f1_series(double a, double b, double c, double z);

double bessel_J(int order, double x);
double bessel_Kmod(double nu, double x);

double gamma_fn(double x);
// 1/Gamma(x), zero at the poles.
double rgamma(double x);

} // namespace phpos::specfun
