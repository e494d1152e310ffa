#include <cmath>

#include "phpos/quadrature.hpp"
#include "phpos/specfun.hpp"
#include "phpos/verify.hpp"

namespace phpos::verify {

using oracle::ReportBuilder;
using namespace specfun;

namespace {

double m_quartic(double z) { return (1 - z) * (1 - z) / (2 * (1 + z * z)); }

// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt, panels sized to the oscillation
double bessel_j_integral(int n, double x)
{
    const int panels = int(std::ceil(std::abs(x) / 2.0)) + 4;
    return quad::gl_panels([&](double t) { return std::cos(n * t - x * std::sin(t)); }, 0.0, pi, panels,
                           quad::gl32())
         / pi;
}

} // namespace

std::vector<OracleReport> specfun_suite(const QuadratureConfig& cfg)
{
    std::vector<OracleReport> out;
    auto push = [&](ReportBuilder& b, int criterion = 0) {
        b.criterion(criterion);
        out.push_back(b.finish());
    };

    {
        ReportBuilder k("specfun.EK2F1.K", 1e-10), e("specfun.EK2F1.E", 1e-10);
        for (int i = 0; i < 50; ++i) {
            const double kap = 0.99 * i / 49.0;
            k.add(ellip_K(kap), pi / 2 * gauss_2f1_series(0.5, 0.5, 1.0, kap * kap));
            e.add(ellip_E(kap), pi / 2 * gauss_2f1_series(-0.5, 0.5, 1.0, kap * kap));
        }
        k.note("raw Maclaurin series as reference");
        push(k, 1);
        push(e, 1);
    }
    {
        ReportBuilder b("specfun.GaK", 1e-12);
        const double g = gamma_fn(0.25);
        b.add(g * g, 4.0 * std::sqrt(pi) * K_lemniscatic());
        b.add(ellip_K(1.0 / std::sqrt(2.0)), g * g / (4.0 * std::sqrt(pi)));
        push(b, 1);
    }
    {
        ReportBuilder id("specfun.2F1id", 1e-9), t1("specfun.2F1tr1", 1e-9), t2("specfun.2F1tr2", 1e-9);
        for (int i = 1; i <= 19; ++i) {
            const double z = 0.05 * i;
            const double u = 1 - z * z * z * z;
            const double km = std::sqrt(m_quartic(z));
            const double F_K = 2 / pi * ellip_K(km), F_E = 2 / pi * ellip_E(km);
            const double pre = std::sqrt(2 / (1 + z * z));
            id.add(gauss_2f1(0.25, 0.5, 1.0, u), pre * F_K);
            t1.add(gauss_2f1(0.75, 0.5, 1.0, u), pre / z * F_K);
            t2.add(gauss_2f1(1.25, 0.5, 1.0, u),
                   pre / (z * z * z) * (2 * (1 + z * z) * F_E - (z * z + z + 1) * F_K));
        }
        push(id, 1);
        push(t1, 1);
        push(t2, 1);
    }
    {
        ReportBuilder b("specfun.2F1ap1", 1e-9);
        const double a = 0.25, bb = 0.5, c = 1.0, h = 2e-3;
        auto F = [&](double x) { return gauss_2f1(a, bb, c, x); };
        auto D = [&](double u, double s) {
            return (F(u - 2 * s) - 8 * F(u - s) + 8 * F(u + s) - F(u + 2 * s)) / (12 * s);
        };
        for (int i = 0; i < 20; ++i) {
            const double u = 0.05 + 0.85 * i / 19.0;
            const double d = (16 * D(u, h / 2) - D(u, h)) / 15;
            b.add((u * d + a * F(u)) / a, gauss_2f1(a + 1, bb, c, u));
        }
        b.note("fourth-order central differences at h = 2e-3 and 1e-3 combined by Richardson");
        push(b, 1);
    }
    {
        ReportBuilder b("specfun.gammar", 1e-11);
        for (int i = 1; i <= 9; ++i) {
            const double z = 0.1 * i;
            b.add(gamma_fn(z) * gamma_fn(1 - z) * std::sin(pi * z), pi);
        }
        push(b, 1);
    }
    {
        ReportBuilder b("specfun.JKintbe0", 1e-7);
        const double ab[3][2] = {{1, 1}, {2, 1}, {1, 3}};
        for (const auto& p : ab) {
            const double h = std::hypot(p[0], p[1]);
            b.add(oracle::bessel_k_hankel(0.0, 0, p[0], p[1]), ellip_K(p[1] / h) / h);
        }
        b.note("panels between J0 zeros");
        push(b, 1);
    }

    {
        ReportBuilder b("specfun.elliptic_special_values", 1e-12);
        b.add(ellip_K(0.0), pi / 2);
        b.add(ellip_E(0.0), pi / 2);
        b.add(ellip_E(1.0), 1.0);
        b.add(ellip_K(0.6), pi / 2 * gauss_2f1_series(0.5, 0.5, 1.0, 0.36));
        push(b);
    }
    {
        // E(1/sqrt2) = pi/(4 K0) + K0/2 (Legendre's relation at the lemniscatic modulus)
        ReportBuilder b("specfun.legendre_anchor", 1e-12);
        const double K0 = K_lemniscatic();
        b.add(ellip_E(1.0 / std::sqrt(2.0)), pi / (4 * K0) + K0 / 2);
        push(b);
    }
    {
        ReportBuilder b("specfun.K_prime_fd", 1e-8);
        const double h = 1e-6;
        b.add(ellip_K_prime(0.5), (ellip_K(0.5 + h) - ellip_K(0.5 - h)) / (2 * h));
        b.add(ellip_E_prime(0.5), (ellip_E(0.5) - ellip_K(0.5)) / 0.5);
        push(b);
    }
    {
        ReportBuilder b("specfun.K_prime_small_modulus", 1e-7);
        b.add(ellip_K_prime(1e-4) / 1e-4, pi / 4);
        b.add(ellip_K_prime(0.0), 0.0);
        b.add(ellip_E_prime(0.0), 0.0);
        push(b);
    }
    {
        ReportBuilder b("specfun.2F1_derivative", 1e-9);
        const double z = 0.3, h = 1e-3;
        auto F = [](double x) { return gauss_2f1(0.5, 0.5, 1.0, x); };
        const double d = (F(z - 2 * h) - 8 * F(z - h) + 8 * F(z + h) - F(z + 2 * h)) / (12 * h);
        b.add(d, 0.25 * gauss_2f1(1.5, 1.5, 2.0, z));
        b.add(gauss_2f1(0.75, 0.5, 1.0, 0.0), 1.0);
        b.add(gauss_2f1(2.0, 3.0, 4.0, 0.0), 1.0);
        push(b);
    }
    {
        ReportBuilder b("specfun.damped_J0_integral", 1e-6);
        b.add(oracle::damped_bessel_j_integral(0, cfg), 1.0);
        b.note(cfg.describe());
        push(b);
    }
    {
        ReportBuilder b("specfun.K0intgen", 1e-6);
        const double nu = 0.25, a = 1.0, x = 2.0;
        b.add(oracle::fourier_power_quadrature(nu, a, x),
              2 * std::sqrt(pi) * std::pow(x, nu) * std::pow(2 * a, -nu) * bessel_Kmod(nu, a * x)
                  / gamma_fn(nu + 0.5));
        b.note("left side by Wynn-accelerated panels, right side with the integral K_nu");
        push(b);
    }
    {
        ReportBuilder b("specfun.bessel_J", 1e-10, 1e-3);
        b.add(bessel_J(0, 0.0), 1.0);
        for (double x : {0.5, 5.0, 50.0, 500.0, 1000.0})
            for (int n : {0, 1}) b.add(bessel_J(n, x), bessel_j_integral(n, x));
        b.note("reference: Bessel integral by Gauss-Legendre panels; small values judged absolutely");
        push(b);
    }
    {
        ReportBuilder b("specfun.bessel_K", 1e-8);
        for (double x : {0.1, 1.0, 5.0, 20.0}) {
            b.add(bessel_Kmod(0.5, x), std::sqrt(pi / (2 * x)) * std::exp(-x));
            b.add(bessel_Kmod(1.5, x), std::sqrt(pi / (2 * x)) * std::exp(-x) * (1 + 1 / x));
        }
        push(b);
    }
    {
        ReportBuilder b("specfun.gamma", 1e-12);
        double f = 1.0;
        for (int n = 1; n <= 10; ++n) {
            b.add(gamma_fn(n), f);
            f *= n;
        }
        b.add(gamma_fn(0.5), std::sqrt(pi));
        b.add(rgamma(0.0), 0.0);
        b.add(rgamma(-2.0), 0.0);
        push(b);
    }
    return out;
}

} // namespace phpos::verify
