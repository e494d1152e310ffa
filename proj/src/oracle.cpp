#include "phpos/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "phpos/quadrature.hpp"
#include "phpos/specfun.hpp"

namespace phpos::oracle {

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (epsilon_list.size() < 2) throw DomainError("epsilon_list needs at least two values");
    for (std::size_t i = 0; i < epsilon_list.size(); ++i) {
        if (!(epsilon_list[i] > 0.0)) throw DomainError("epsilon values must be positive");
        if (i > 0 && !(epsilon_list[i] < epsilon_list[i - 1]))
            throw DomainError("epsilon_list must be strictly decreasing");
    }
    if (richardson_order < 1 || richardson_order + 1 > int(epsilon_list.size()))
        throw DomainError("richardson_order must lie in [1, size(epsilon_list) - 1]");
    if (k_max < 0.0) throw DomainError("k_max must be non-negative");
    if (k_max > 0.0 && k_max * epsilon_list.back() < 5.0)
        throw DomainError("k_max * min(epsilon) must be at least 5");
}

double QuadratureConfig::effective_k_max() const
{
    return k_max > 0.0 ? k_max : 30.0 / epsilon_list.back();
}

std::string QuadratureConfig::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << "eps=[";
    for (std::size_t i = 0; i < epsilon_list.size(); ++i) os << (i ? "," : "") << epsilon_list[i];
    os << "] order=" << richardson_order << " k_max=" << effective_k_max();
    return os.str();
}

ReportBuilder::ReportBuilder(std::string name, double tolerance, double abs_floor) : floor_(abs_floor)
{
    r_.check_name = std::move(name);
    r_.tolerance = tolerance;
}

void ReportBuilder::add_error(double abs_err, double rel_err)
{
    ++r_.samples;
    // NaN must fail, so compare through negation
    if (!(abs_err <= r_.max_abs_err)) r_.max_abs_err = std::isnan(abs_err) ? INFINITY : abs_err;
    if (!(rel_err <= r_.max_rel_err)) r_.max_rel_err = std::isnan(rel_err) ? INFINITY : rel_err;
}

void ReportBuilder::add(double value, double reference) { add(cplx(value), cplx(reference)); }

void ReportBuilder::add(cplx value, cplx reference)
{
    const double a = std::abs(value - reference);
    const double m = std::abs(reference);
    add_error(a, m > floor_ ? a / m : a);
}

void ReportBuilder::add(const CVec3& value, const CVec3& reference)
{
    const double a = (value - reference).norm();
    const double m = reference.norm();
    add_error(a, m > floor_ ? a / m : a);
}

void ReportBuilder::fail(const std::string& why)
{
    forced_fail_ = true;
    note(why);
}

void ReportBuilder::note(const std::string& n)
{
    if (!r_.notes.empty()) r_.notes += "; ";
    r_.notes += n;
}

OracleReport ReportBuilder::finish() const
{
    OracleReport r = r_;
    r.passed = !forced_fail_ && r.samples > 0 && r.max_rel_err <= r.tolerance;
    return r;
}

double i_beta_closed(double r, double theta, double beta, bool continued)
{
    if (!(r > 0.0)) throw DomainError("I_beta requires r > 0");
    if (!(theta >= 0.0 && theta <= pi)) throw DomainError("theta must lie in [0, pi]");
    if (beta >= 2.0 && !continued)
        throw DomainError("I_beta diverges for beta >= 2; request the analytic continuation");
    const double a = 0.5 + beta / 4.0;
    const double sn = std::sin(theta);
    const double u = theta == pi / 2 ? 1.0 : sn * sn;
    if (u >= 1.0 && beta >= 0.0)
        throw DomainError("I_beta is singular on the plane theta = pi/2 for beta >= 0");
    return pi * pi * specfun::gamma_fn(a) * specfun::rgamma(0.5 - beta / 4.0)
         * std::pow(2.0 / r, beta / 2.0 + 1.0) * specfun::gauss_2f1(a, 0.5, 1.0, u);
}

double i_beta_elliptic(double r, double theta, int beta)
{
    if (!(r > 0.0)) throw DomainError("I_beta requires r > 0");
    const double c = std::cos(theta), sn = std::sin(theta);
    const double s = std::abs(c);
    if (s == 0.0 || theta == pi / 2) throw DomainError("I_beta is singular on the plane theta = pi/2");
    const double K0 = specfun::K_lemniscatic();
    if (beta == 0) return 4.0 * pi * specfun::ellip_KE(sn, s).K / r;
    const double t = std::sqrt(s);
    const double den = std::sqrt(2.0 * (1.0 + s));
    const double one_minus_t = sn * sn / (1.0 + s) / (1.0 + t);
    const auto ke = specfun::ellip_KE(one_minus_t / den, (1.0 + t) / den);
    if (beta == 1)
        return std::pow(2.0 * pi, 1.5) * std::pow(r, -1.5) / std::sqrt(s * (1.0 + s)) * ke.K / K0;
    if (beta == 3) {
        const double f = std::pow(2.0, 1.5) / pi * std::pow(s, -1.5) / std::sqrt(1.0 + s)
                       * (2.0 * (1.0 + s) * ke.E - (s + t + 1.0) * ke.K);
        return -std::pow(pi, 1.5) * K0 * std::pow(r, -2.5) * f;
    }
    throw DomainError("elliptic form of I_beta available for beta in {0, 1, 3}");
}

namespace {

// McMahon estimate of the m-th positive zero of J_n, good enough for panel edges.
double bessel_zero_estimate(int n, int m)
{
    const double b = (m + 0.5 * n - 0.25) * pi;
    return b - (4.0 * n * n - 1.0) / (8.0 * b);
}

} // namespace

double bessel_k_hankel(double nu, int order, double a, double b)
{
    if (!(a > 0.0)) throw DomainError("bessel_k_hankel requires a > 0");
    if (!(b >= 0.0)) throw DomainError("bessel_k_hankel requires b >= 0");
    if (order < 0) throw DomainError("Bessel order must be non-negative");
    auto f = [&](double u) {
        if (u == 0.0) return 0.0; // endpoint is never sampled by Gauss-Kronrod
        return std::pow(u, nu) * specfun::bessel_Kmod(nu, a * u) * specfun::bessel_J(order, b * u);
    };
    const double u_max = 46.0 / a;
    std::vector<double> edges{0.0};
    if (b > 0.0) {
        for (int m = 1;; ++m) {
            const double z = bessel_zero_estimate(order, m) / b;
            if (z >= u_max) break;
            edges.push_back(z);
        }
    }
    if (edges.size() == 1) edges.push_back(std::min(1.0 / a, u_max));
    edges.push_back(u_max);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += quad::gauss_kronrod(f, edges[i], edges[i + 1], 1e-16, 1e-13, 1, 4000).value;
    return total;
}

double i_beta_quadrature(double r, double theta, double beta, const QuadratureConfig& cfg)
{
    (void)cfg;
    if (!(r > 0.0)) throw DomainError("I_beta requires r > 0");
    if (!(theta > 0.0 && theta < pi) || theta == pi / 2)
        throw DomainError("I_beta quadrature requires x3 != 0 and rho != 0");
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("I_beta quadrature supports beta in [0, 1]");
    const double nu = beta / 4.0;
    const double a = r * std::abs(std::cos(theta));
    const double b = std::abs(std::tan(theta));
    return std::pow(2.0, nu + 2.0) * std::pow(pi, 1.5) * specfun::rgamma(0.5 - nu)
         * std::pow(a, -2.0 * nu - 1.0) * bessel_k_hankel(nu, 0, 1.0, b);
}

Vec3 field_from_i_beta(const Vec3& x, double beta, Part part, double h_rel)
{
    const double rho = std::hypot(x.x(), x.y());
    const double z = x.z();
    const double r = x.norm();
    const double h = h_rel * r;
    if (rho <= 2.5 * h || std::abs(z) <= 2.5 * h)
        throw DomainError("finite-difference stencil reaches the axis or the singular plane");
    const double bb = part == Part::one ? beta : beta + 2.0;
    auto I = [bb](double p, double q) {
        const double rr = std::hypot(p, q);
        return i_beta_closed(rr, std::acos(q / rr), bb, true);
    };
    const double c = std::pow(2.0 * pi, -1.5);
    static constexpr double w1[5] = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    static constexpr double w2[5] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    double d_r = 0.0, d_rr = 0.0, d_rz = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double fi = I(rho + (i - 2) * h, z);
        d_r += w1[i] * fi;
        d_rr += w2[i] * fi;
        if (part == Part::one)
            for (int j = 0; j < 5; ++j)
                if (w1[i] != 0.0 && w1[j] != 0.0) d_rz += w1[i] * w1[j] * I(rho + (i - 2) * h, z + (j - 2) * h);
    }
    d_r /= h;
    d_rr /= h * h;
    d_rz /= h * h;
    if (part == Part::two) return {0.0, c * d_r, 0.0};
    return {-c * d_rz, 0.0, c * (d_rr + d_r / rho)};
}

namespace {

// Extrapolants through the 2, 3, ..., order+1 smallest epsilons.
template <class T, class Norm>
void extrapolate(const std::vector<double>& eps, const std::vector<T>& vals, int order, Norm norm,
                 T& value, std::vector<T>& successive, double& err, bool& unstable)
{
    const std::size_t n = eps.size();
    successive.clear();
    for (int m = 2; m <= order + 1; ++m) {
        std::vector<double> xs(eps.end() - m, eps.end());
        std::vector<T> ys(vals.end() - m, vals.end());
        successive.push_back(quad::neville_at_zero(xs, ys));
    }
    (void)n;
    value = successive.back();
    const std::size_t s = successive.size();
    err = s >= 2 ? norm(successive[s - 1] - successive[s - 2]) : norm(value);
    unstable = false;
    if (s >= 3) {
        const double prev = norm(successive[s - 2] - successive[s - 3]);
        unstable = err > prev && err > 1e-6 * norm(value);
    }
}

struct Nodes {
    std::vector<double> x, w;
};

// GL16 panels of width `width` on [0, b]; the first panel is split
// geometrically towards 0 to absorb fractional powers at the origin.
Nodes radial_nodes(double b, double width)
{
    Nodes n;
    const auto& rule = quad::gl16();
    auto panel = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            n.x.push_back(mid + half * rule.x[i]);
            n.w.push_back(half * rule.w[i]);
        }
    };
    width = std::min(width, b);
    double hi = width;
    for (int m = 0; m < 30; ++m) {
        panel(0.5 * hi, hi);
        hi *= 0.5;
    }
    panel(0.0, hi);
    const int count = int(std::ceil((b - width) / width));
    for (int p = 0; p < count; ++p) panel(width + p * (b - width) / count, width + (p + 1) * (b - width) / count);
    return n;
}

using ModeSet = std::array<CVec3, 5>; // azimuthal Fourier modes n = -2..2 of the momentum vector

ModeSet modes_of(Integrand tag, double ct, double st, int sigma)
{
    ModeSet m;
    for (auto& v : m) v.setZero();
    const cplx h(0.5, 0.0), ih(0.0, 0.5);
    // E1 = (ct cos phi, ct sin phi, -st), E2 = (-sin phi, cos phi, 0)
    ModeSet e1 = m, e2 = m;
    e1[2] = CVec3(0.0, 0.0, -st);
    e1[3] = CVec3(h * ct, -ih * ct, 0.0);
    e1[1] = CVec3(h * ct, ih * ct, 0.0);
    e2[3] = CVec3(ih, h, 0.0);
    e2[1] = CVec3(-ih, h, 0.0);
    switch (tag) {
    case Integrand::psi1: return e1;
    case Integrand::psi2: return e2;
    case Integrand::i_beta: m[2] = CVec3(1.0, 0.0, 0.0); return m;
    case Integrand::debierre:
        // e^{-i sigma phi} (E1 + i sigma E2) / sqrt 2
        for (int n = 1; n <= 3; ++n) m[n - sigma] = (e1[n] + I * double(sigma) * e2[n]) / std::sqrt(2.0);
        return m;
    }
    return m;
}

DampedResult damped_impl(const Vec3& x, Integrand tag, double beta, int sigma, const QuadratureConfig& cfg,
                         bool parallel)
{
    cfg.validate();
    if (tag == Integrand::debierre) checked_sigma(sigma);
    const double r = x.norm();
    if (!(r > 0.0)) throw DomainError("damped Fourier oracle undefined at the origin");
    const double rho = std::hypot(x.x(), x.y());
    const double x3 = x.z();
    const double psi = rho > 0.0 ? std::atan2(x.y(), x.x()) : 0.0;
    const Vec3 e_rho(std::cos(psi), std::sin(psi), 0.0), e_psi(-std::sin(psi), std::cos(psi), 0.0);
    const bool volume = tag != Integrand::i_beta; // psi tags carry the k^2 sin(theta) Jacobian

    std::array<cplx, 5> phase_psi;
    for (int n = -2; n <= 2; ++n)
        phase_psi[n + 2] = 2.0 * pi * std::pow(I, std::abs(n)) * std::exp(I * double(n) * psi);

    const double kmax = cfg.effective_k_max();
    const Nodes kn = radial_nodes(kmax, 10.0 / r);
    const auto& rule = quad::gl16();
    std::vector<CVec3> G(kn.x.size(), CVec3::Zero());

    auto slice = [&](std::size_t idx) {
        const double k = kn.x[idx];
        const int nth = int(std::ceil(k * r / 8.0)) + 2;
        const double dth = pi / nth;
        CVec3 acc = CVec3::Zero();
        for (int p = 0; p < nth; ++p) {
            const double mid = (p + 0.5) * dth;
            for (std::size_t i = 0; i < rule.x.size(); ++i) {
                const double th = mid + 0.5 * dth * rule.x[i];
                const double ct = std::cos(th), st = std::sin(th);
                const double z = k * rho * st;
                double J[3];
                J[0] = specfun::bessel_J(0, z);
                J[1] = specfun::bessel_J(1, z);
                J[2] = z > 0.0 ? 2.0 * J[1] / z - J[0] : 0.0;
                const ModeSet c = modes_of(tag, ct, st, sigma);
                CVec3 v = CVec3::Zero();
                for (int n = -2; n <= 2; ++n) v += c[n + 2] * (phase_psi[n + 2] * J[std::abs(n)]);
                const double w = 0.5 * dth * rule.w[i] * (volume ? st : 1.0);
                acc += v * (w * std::exp(I * (k * x3 * ct)));
            }
        }
        G[idx] = acc;
    };

    const long count = long(kn.x.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < count; ++i) slice(std::size_t(i));
    } else {
        for (long i = 0; i < count; ++i) slice(std::size_t(i));
    }

    const double pref = volume ? std::pow(2.0 * pi, -1.5) : 1.0;
    const double kpow = volume ? 2.0 + beta / 2.0 : beta / 2.0;
    DampedResult res;
    for (double eps : cfg.epsilon_list) {
        CVec3 sum = CVec3::Zero();
        for (std::size_t i = 0; i < kn.x.size(); ++i)
            sum += G[i] * (kn.w[i] * std::pow(kn.x[i], kpow) * std::exp(-eps * kn.x[i]));
        sum *= pref;
        if (volume)
            res.per_epsilon.emplace_back(to_complex(e_rho).dot(sum), to_complex(e_psi).dot(sum), sum[2]);
        else
            res.per_epsilon.emplace_back(sum[0], 0.0, 0.0);
    }
    extrapolate(cfg.epsilon_list, res.per_epsilon, cfg.richardson_order,
                [](const CVec3& v) { return v.norm(); }, res.value, res.successive, res.error_estimate,
                res.unstable);
    return res;
}

} // namespace

DampedResult damped_fourier_oracle(const Vec3& x, Integrand tag, double beta, int sigma,
                                   const QuadratureConfig& cfg)
{
    return damped_impl(x, tag, beta, sigma, cfg, cfg.parallel);
}

DampedResult damped_fourier_oracle_serial(const Vec3& x, Integrand tag, double beta, int sigma,
                                          const QuadratureConfig& cfg)
{
    return damped_impl(x, tag, beta, sigma, cfg, false);
}

cplx debierre_i_plus0(const Vec3& x)
{
    const double rho = std::hypot(x.x(), x.y());
    const double a = std::abs(x.z());
    if (!(rho > 0.0) || !(a > 0.0)) throw DomainError("I_{+,0} quadrature requires rho > 0 and x3 != 0");
    const double psi = std::atan2(x.y(), x.x());
    return 4.0 * pi * I * std::exp(-I * psi) * bessel_k_hankel(0.0, 1, a, rho);
}

DampedScalar damped_radial_limit(const std::function<double(double)>& f, const QuadratureConfig& cfg,
                                 double period)
{
    cfg.validate();
    const Nodes n = radial_nodes(cfg.effective_k_max(), 0.25 * period);
    std::vector<double> fv(n.x.size());
    for (std::size_t i = 0; i < n.x.size(); ++i) fv[i] = f(n.x[i]) * n.w[i];
    DampedScalar res;
    for (double eps : cfg.epsilon_list) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n.x.size(); ++i) sum += fv[i] * std::exp(-eps * n.x[i]);
        res.per_epsilon.push_back(sum);
    }
    extrapolate(cfg.epsilon_list, res.per_epsilon, cfg.richardson_order,
                [](double v) { return std::abs(v); }, res.value, res.successive, res.error_estimate,
                res.unstable);
    return res;
}

double damped_bessel_j_integral(int order, const QuadratureConfig& cfg)
{
    const auto r = damped_radial_limit([order](double k) { return specfun::bessel_J(order, k); }, cfg);
    if (r.unstable) throw ConvergenceError("epsilon extrapolation unstable");
    return r.value;
}

double normalization_quadrature(double beta, const QuadratureConfig& cfg)
{
    if (!(beta > -1.0 && beta < 2.0)) throw DomainError("normalization integral requires beta in (-1, 2)");
    // the integrand grows like s^{beta+1}, so the default cutoff leaves a visible tail
    QuadratureConfig c = cfg;
    c.k_max = std::max(cfg.effective_k_max(), 60.0 / cfg.epsilon_list.back());
    const auto r = damped_radial_limit(
        [beta](double s) { return std::pow(s, beta + 1.0) * std::sin(s); }, c);
    if (r.unstable) throw ConvergenceError("epsilon extrapolation unstable");
    return r.value;
}

double fourier_power_quadrature(double nu, double a, double x)
{
    if (!(a > 0.0) || !(nu > -0.5)) throw DomainError("requires a > 0 and nu > -1/2");
    if (x == 0.0) throw DomainError("oscillatory transform evaluated at x = 0");
    const double w = std::abs(x);
    auto f = [=](double s) { return 2.0 * std::cos(w * s) * std::pow(s * s + a * a, -nu - 0.5); };
    std::vector<double> partial;
    double sum = 0.0, lo = 0.0;
    for (int m = 0; m < 60; ++m) {
        const double hi = (m + 0.5) * pi / w;
        sum += quad::gauss_kronrod(f, lo, hi, 1e-17, 1e-14).value;
        partial.push_back(sum);
        lo = hi;
    }
    return quad::wynn_epsilon(partial);
}

InnerProduct inner_product_momentum(const momentum::Field& f, const momentum::Field& g, double beta,
                                    const MomentumGrid& grid)
{
    if (!(grid.k_cut > 0.0) || grid.k_panels < 1 || grid.theta_panels < 1 || grid.phi_points < 3)
        throw DomainError("invalid momentum grid");
    const auto& rule = quad::gl16();
    const double dk = grid.k_cut / grid.k_panels;
    const double dth = pi / grid.theta_panels;
    const double dphi = 2.0 * pi / grid.phi_points;
    cplx total = 0.0, last_panel = 0.0;
    for (int pk = 0; pk < grid.k_panels; ++pk) {
        cplx panel_sum = 0.0;
        for (std::size_t ik = 0; ik < rule.x.size(); ++ik) {
            const double k = (pk + 0.5) * dk + 0.5 * dk * rule.x[ik];
            const double wk = 0.5 * dk * rule.w[ik] * std::pow(k, 2.0 - beta);
            for (int pt = 0; pt < grid.theta_panels; ++pt) {
                for (std::size_t it = 0; it < rule.x.size(); ++it) {
                    const double th = (pt + 0.5) * dth + 0.5 * dth * rule.x[it];
                    const double wt = 0.5 * dth * rule.w[it] * std::sin(th);
                    for (int ip = 0; ip < grid.phi_points; ++ip) {
                        const double ph = ip * dphi;
                        const Vec3 kv = k * Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                                 std::cos(th));
                        panel_sum += wk * wt * dphi * f(kv).dot(g(kv)); // dot conjugates its first argument
                    }
                }
            }
        }
        total += panel_sum;
        last_panel = panel_sum;
    }
    return {total, std::abs(last_panel) > 1e-10 * std::max(std::abs(total), 1e-300)};
}

} // namespace phpos::oracle
