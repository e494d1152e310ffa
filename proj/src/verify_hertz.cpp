#include <cmath>
#include <random>

#include "phpos/hertz.hpp"
#include "phpos/oracle.hpp"
#include "phpos/specfun.hpp"
#include "phpos/verify.hpp"

namespace phpos::verify {

using oracle::ReportBuilder;
using namespace hertz;

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= double(x.size());
    my /= double(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

} // namespace

std::vector<OracleReport> hertz_suite()
{
    std::vector<OracleReport> out;
    auto push = [&](ReportBuilder& b, int criterion = 0) {
        b.criterion(criterion);
        out.push_back(b.finish());
    };
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    {
        ReportBuilder b("hertz.static_term", 1e-10);
        for (int i = 0; i < 20; ++i) {
            Vec3 x(uni(gen), uni(gen), uni(gen));
            if (std::abs(x.z()) < 0.05 * x.norm()) x.z() += 0.2;
            const int sigma = i % 2 ? 1 : -1;
            const double r = x.norm(), rho = std::hypot(x.x(), x.y());
            const double zeta0 = std::pow(2.0 / r, 1.5) * hertz_series(rho / r, 0).real_coeffs[0];
            b.add(hertz_t0(x, sigma).z(), -sigma * std::sqrt(pi) * zeta0);
            b.add(zeta_eval(x, 0.0, 4).value, cplx(zeta0, 0.0));
        }
        b.note("20 random points off the singular plane");
        push(b, 7);
    }
    {
        ReportBuilder b("hertz.elliptic_coefficients", 1e-8);
        for (double s : {0.2, 0.5, 0.8})
            for (int k = 0; k <= 4; ++k) {
                const auto [f, g] = elliptic_coefficient_forms(k, s);
                b.add(f, specfun::gauss_2f1(k + 0.75, 0.5, 1.0, 1.0 - s * s));
                b.add(g, specfun::gauss_2f1(k + 1.25, 0.5, 1.0, 1.0 - s * s));
            }
        b.note("k = 0..4 at s = 0.2, 0.5, 0.8");
        push(b, 7);
    }
    {
        // c_n = (r/2)^{3/2} r^n (-i)^n / n! (2pi)^{-3/2} / sqrt(2 pi) I_{2n+1}(r, theta)
        ReportBuilder b("hertz.time_derivative_chain", 1e-10);
        const double N = std::pow(2.0 * pi, -1.5) / std::sqrt(2.0 * pi);
        for (double th : {0.3, 0.6, 1.0}) {
            const double r = 1.0;
            const HertzSeries h = hertz_series(std::sin(th), 4);
            for (int n = 0; n <= 9; ++n) {
                const cplx ph = std::pow(-I, n);
                const cplx want = std::pow(r / 2.0, 1.5) * std::pow(r, n) * ph / factorial(n) * N
                                * oracle::i_beta_closed(r, th, 2.0 * n + 1.0, true);
                const cplx got = n % 2 ? cplx(0.0, h.imag_coeffs[n / 2]) : cplx(h.real_coeffs[n / 2], 0.0);
                b.add(got, want);
            }
        }
        b.note("series coefficients against time derivatives of the damped Fourier kernel");
        push(b);
    }
    {
        ReportBuilder b("hertz.gamma_parity", 1e-10);
        for (int n = 0; n <= 6; ++n)
            b.add(gamma_quotient_parity(n), specfun::gamma_fn(0.5 * n + 0.75) * specfun::rgamma(0.25 - 0.5 * n));
        push(b);
    }
    {
        // residual of the truncated series scales as t^{2 n_max}
        ReportBuilder b("hertz.wave_residual_slope", 0.1);
        const Vec3 x(std::sin(0.5), 0.0, std::cos(0.5));
        const std::vector<double> ts{0.05, 0.1, 0.2};
        std::string msg;
        for (int n_max : {1, 2}) {
            std::vector<double> res;
            for (double t : ts) res.push_back(wave_residual(x, t, n_max, 1e-2));
            const double slope = fit_slope(ts, res);
            const double rel = std::abs(slope - 2.0 * n_max) / (2.0 * n_max);
            b.add_error(std::abs(slope - 2.0 * n_max), rel);
            msg += "n_max " + std::to_string(n_max) + ": slope " + std::to_string(slope) + "; ";
        }
        b.note(msg + "h = 1e-2, t/r in {0.05, 0.1, 0.2}");
        push(b, 7);
    }
    {
        ReportBuilder b("hertz.rs_from_hertz", 1e-12);
        for (int i = 0; i < 100; ++i) {
            Vec3 k(uni(gen), uni(gen), uni(gen));
            if (std::hypot(k.x(), k.y()) < 0.05) k.x() += 0.3;
            const double d = rs_from_hertz_check(2.0 * k, i % 2 ? 1 : -1);
            b.add_error(d, d);
        }
        push(b, 7);
    }
    {
        // coefficient ratios approach 1/s^2: the radius of convergence in t/r is |x3|/r
        ReportBuilder b("hertz.convergence_radius", 1e-2);
        for (double th : {0.5, 0.9}) {
            const double s = std::cos(th);
            const HertzSeries h = hertz_series(std::sin(th), 40);
            const auto ratio = [&](int k) { return h.real_coeffs[k + 1] / h.real_coeffs[k]; };
            // ratio_k ~ L (1 - a/k); eliminate a with two orders
            const double L = (39.0 * ratio(39) - 30.0 * ratio(30)) / 9.0;
            b.add(L, 1.0 / (s * s));
        }
        b.note("Richardson-eliminated coefficient ratio at k = 30, 39");
        push(b);
    }
    return out;
}

} // namespace phpos::verify
