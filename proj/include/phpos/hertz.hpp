#pragma once

// Hertz superpotential Z(x, t) = -sigma sqrt(pi) zeta(x, t) e3 of the RS
// position eigenfunction centred at the origin (hbar = c = 1).

#include <vector>

#include "phpos/types.hpp"

namespace phpos::hertz {

// Z(x, 0); throws on the singular plane x3 = 0.
Vec3 hertz_t0(const Vec3& x, int sigma);

// Coefficients of tau^{2k} (real) and tau^{2k+1} (imaginary) in
// (r/2)^{3/2} zeta, tau = t/r, at fixed rho/r.
struct HertzSeries {
    int n_max = 0;
    double rho_over_r = 0.0;
    std::vector<double> real_coeffs;
    std::vector<double> imag_coeffs;
};

HertzSeries hertz_series(double rho_over_r, int n_max = 12);

struct ZetaValue {
    cplx value;
    cplx dt;  // d zeta / dt
    cplx dtt; // d^2 zeta / dt^2
    bool truncation_warning = false;
};

// Truncated series; |t|/r must stay below |x3|/r, the observed radius of
// convergence (distance to the singular plane).
ZetaValue zeta_eval(const Vec3& x, double t, int n_max = 12);

// |(d_tt - Laplacian) zeta| with a fourth-order finite-difference Laplacian of step h.
double wave_residual(const Vec3& x, double t, int n_max, double h);

// 2F1(k+3/4, 1/2; 1; 1-s^2) and 2F1(k+5/4, 1/2; 1; 1-s^2) from the elliptic
// forms, differentiated exactly with Taylor jets.
std::pair<double, double> elliptic_coefficient_forms(int k, double s);

// Gamma(n/2 + 3/4) / Gamma(1/4 - n/2) by the closed product formula.
double gamma_quotient_parity(int n);

double rs_from_hertz_check(const Vec3& k, int sigma);

} // namespace phpos::hertz
