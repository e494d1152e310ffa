#include "phpos/hertz.hpp"

#include <cmath>

#include "phpos/jet.hpp"
#include "phpos/momentum.hpp"
#include "phpos/specfun.hpp"

namespace phpos::hertz {

namespace {

double product_squares(int k, int offset)
{
    double p = 1.0;
    for (int j = 1; j <= k; ++j) p *= double(4 * j + offset) * double(4 * j + offset);
    return p;
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// K(kappa(t)) and D(t) = K - E along a jet of the modulus, from
// dK/dk = (k^2 K - D)/(k (1 - k^2)) and dE/dk = -D/k.
std::pair<Jet, Jet> elliptic_jets(const Jet& kappa, double kappa_c)
{
    const int N = kappa.order();
    const auto e0 = specfun::ellip_KE(kappa.value(), kappa_c);
    const Jet kdot = kappa.derivative();
    const Jet k2 = kappa * kappa;
    // A = kdot / (kappa (1 - kappa^2)), B = kdot / kappa, at order N-1
    Jet A(0), B(0), kk2(0);
    if (N > 0) {
        const Jet kap = kappa.truncated(N - 1);
        kk2 = k2.truncated(N - 1);
        A = kdot / (kap * (1.0 - kk2));
        B = kdot / kap;
    }
    Jet K(N, e0.K), D(N, e0.K_minus_E);
    for (int n = 0; n < N; ++n) {
        // coefficient n of Kdot = A (kappa^2 K - D) and Edot = -B D
        double kdot_n = 0.0, edot_n = 0.0;
        for (int i = 0; i <= n; ++i) {
            double f = -D[n - i];
            for (int j = 0; j <= n - i; ++j) f += kk2[j] * K[n - i - j];
            kdot_n += A[i] * f;
            edot_n -= B[i] * D[n - i];
        }
        K[n + 1] = kdot_n / (n + 1);
        D[n + 1] = (kdot_n - edot_n) / (n + 1);
    }
    return {K, D};
}

} // namespace

Vec3 hertz_t0(const Vec3& x, int sigma)
{
    checked_sigma(sigma);
    const double r = x.norm();
    if (!(r > 0.0)) throw DomainError("Hertz potential undefined at the origin");
    const double s = std::abs(x.z()) / r;
    if (s == 0.0) throw DomainError("Hertz potential diverges on the plane x3 = 0");
    const double t = std::sqrt(s);
    const double den = std::sqrt(2.0 * (1.0 + s));
    const double K = specfun::ellip_KE((1.0 - s) / (1.0 + t) / den, (1.0 + t) / den).K;
    const double z = -sigma / std::sqrt(2.0) * std::pow(r, -1.5) / std::sqrt(s * (1.0 + s)) * K
                   / specfun::K_lemniscatic();
    return {0.0, 0.0, z};
}

HertzSeries hertz_series(double rho_over_r, int n_max)
{
    if (!(rho_over_r >= 0.0) || !(rho_over_r < 1.0))
        throw DomainError("hertz_series requires 0 <= rho/r < 1");
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const double K0 = specfun::K_lemniscatic();
    const double u = rho_over_r * rho_over_r;
    const double even_pre = std::sqrt(2.0 * pi) / K0;
    const double odd_pre = 2.0 * K0 / std::sqrt(2.0 * pi);
    HertzSeries h;
    h.n_max = n_max;
    h.rho_over_r = rho_over_r;
    for (int k = 0; k <= n_max; ++k) {
        const double p4 = std::pow(4.0, -(k + 2));
        h.real_coeffs.push_back(even_pre * p4 * specfun::gauss_2f1(k + 0.75, 0.5, 1.0, u)
                                * product_squares(k, -1) / factorial(2 * k));
        h.imag_coeffs.push_back(odd_pre * p4 * specfun::gauss_2f1(k + 1.25, 0.5, 1.0, u)
                                * product_squares(k, 1) / factorial(2 * k + 1));
    }
    return h;
}

ZetaValue zeta_eval(const Vec3& x, double t, int n_max)
{
    const double r = x.norm();
    if (!(r > 0.0)) throw DomainError("zeta undefined at the origin");
    const double s = std::abs(x.z()) / r;
    const double tau = t / r;
    if (!(std::abs(tau) < s))
        throw DomainError("|t|/r outside the convergence radius |x3|/r of the time series");
    const double rho = std::hypot(x.x(), x.y());
    const HertzSeries h = hertz_series(std::min(rho / r, 1.0 - 1e-16), n_max);
    const double pre = std::pow(2.0 / r, 1.5);
    ZetaValue z{};
    cplx last = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        const int ne = 2 * k, no = 2 * k + 1;
        const cplx ce = h.real_coeffs[k], co = I * h.imag_coeffs[k];
        const cplx te = ce * std::pow(tau, ne), to = co * std::pow(tau, no);
        z.value += te + to;
        z.dt += (ne > 0 ? ce * double(ne) * std::pow(tau, ne - 1) : 0.0) + co * double(no) * std::pow(tau, no - 1);
        z.dtt += (ne > 1 ? ce * double(ne * (ne - 1)) * std::pow(tau, ne - 2) : 0.0)
               + (no > 1 ? co * double(no * (no - 1)) * std::pow(tau, no - 2) : 0.0);
        last = te + to;
    }
    z.truncation_warning = t != 0.0 && std::abs(last) > 1e-10 * std::abs(z.value);
    z.value *= pre;
    z.dt *= pre / r;
    z.dtt *= pre / (r * r);
    return z;
}

double wave_residual(const Vec3& x, double t, int n_max, double h)
{
    const ZetaValue c = zeta_eval(x, t, n_max);
    cplx lap = 0.0;
    for (int j = 0; j < 3; ++j) {
        Vec3 d = Vec3::Zero();
        d[j] = h;
        lap += (-zeta_eval(x - 2 * d, t, n_max).value + 16.0 * zeta_eval(x - d, t, n_max).value
                - 30.0 * c.value + 16.0 * zeta_eval(x + d, t, n_max).value
                - zeta_eval(x + 2 * d, t, n_max).value)
             / (12.0 * h * h);
    }
    return std::abs(c.dtt - lap);
}

std::pair<double, double> elliptic_coefficient_forms(int k, double s)
{
    if (!(s > 0.0 && s < 1.0)) throw DomainError("elliptic coefficient forms require 0 < s < 1");
    if (k < 0) throw DomainError("k must be non-negative");
    const int N = k;
    const Jet S = Jet::variable(N, s);
    const Jet T = sqrt(S);
    const Jet den = sqrt(2.0 * (1.0 + S));
    const Jet kappa = (1.0 - S) / ((1.0 + T) * den);
    const double kappa_c = (1.0 + std::sqrt(s)) / std::sqrt(2.0 * (1.0 + s));
    auto [K, D] = elliptic_jets(kappa, kappa_c);
    const Jet E = K - D;

    const double c = std::pow(2.0, 1.5) / pi;
    Jet f = c * K / sqrt(S * (1.0 + S));
    Jet g = c * pow(S, -1.5) * pow(1.0 + S, -0.5) * (2.0 * (1.0 + S) * E - (S + T + 1.0) * K);

    // F(a+1) = F(a) - (1 - s^2)/(2 a s) dF/ds, applied with a = m + 3/4 and m + 5/4
    for (int m = 0; m < k; ++m) {
        const int ord = f.order() - 1;
        const Jet Sm = S.truncated(ord);
        const Jet w = (1.0 - Sm * Sm) / Sm;
        f = f.truncated(ord) - (1.0 / (2.0 * (m + 0.75))) * w * f.derivative();
        g = g.truncated(ord) - (1.0 / (2.0 * (m + 1.25))) * w * g.derivative();
    }
    return {f.value(), g.value()};
}

double gamma_quotient_parity(int n)
{
    if (n < 0) throw DomainError("n must be non-negative");
    const int par = n % 2;
    const double K0 = specfun::K_lemniscatic();
    const double sign = ((n + par) / 2) % 2 ? -1.0 : 1.0;
    const double pre = par ? K0 / std::sqrt(2.0 * pi) : std::sqrt(2.0 * pi) / K0;
    double prod = 1.0;
    for (int j = 0; j <= (n - par) / 2; ++j) {
        const double f = 4.0 * j - 1.0 + 2.0 * par;
        prod *= f * f;
    }
    return sign * pre * std::pow(4.0, -(n + 1 - par)) * prod;
}

double rs_from_hertz_check(const Vec3& k, int sigma)
{
    checked_sigma(sigma);
    const auto f = momentum::standard_frame(k);
    const double kn = k.norm();
    const double kperp = std::hypot(k.x(), k.y());
    const CVec3 h = to_complex(Vec3(0.0, 0.0, -sigma / (std::sqrt(2.0) * std::sqrt(kn) * kperp)));
    const CVec3 kc = to_complex(k);
    const CVec3 lhs = cross(kc, I * kn * h - double(sigma) * cross(kc, h));
    const CVec3 rhs = std::sqrt(kn / 2.0) * (to_complex(f.E1) + I * double(sigma) * to_complex(f.E2));
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

} // namespace phpos::hertz
