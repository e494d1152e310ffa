#pragma once

// Independent numerical evaluations of the defining integrals: 1D Bessel
// quadrature of I_beta, finite-difference fields from closed I_beta, the
// e^{-eps k}-damped Fourier integral extrapolated to eps = 0, and the
// regularized normalization integral.

#include <functional>
#include <string>
#include <vector>

#include "phpos/momentum.hpp"
#include "phpos/types.hpp"

namespace phpos::oracle {

struct QuadratureConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    double k_max = 0.0; // 0 selects 30 / min(epsilon_list)
    std::vector<double> epsilon_list{0.2, 0.1, 0.05, 0.025, 0.0125};
    int richardson_order = 4; // polynomial degree; uses the order+1 smallest epsilons
    bool parallel = true;

    void validate() const;
    double effective_k_max() const;
    std::string describe() const;
};

struct OracleReport {
    std::string check_name;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    int samples = 0;
    std::string notes;
    int criterion = 0; // acceptance criterion the check belongs to, 0 if none
};

// Accumulates errors of sampled comparisons into an OracleReport. A sample
// whose reference magnitude is below `abs_floor` is judged by absolute error.
class ReportBuilder {
public:
    ReportBuilder(std::string name, double tolerance, double abs_floor = 1e-300);
    void add(double value, double reference);
    void add(cplx value, cplx reference);
    void add(const CVec3& value, const CVec3& reference);
    void add_error(double abs_err, double rel_err);
    void fail(const std::string& why);
    void note(const std::string& n);
    void criterion(int c) { r_.criterion = c; }
    OracleReport finish() const;

private:
    OracleReport r_;
    double floor_;
    bool forced_fail_ = false;
};

// pi^2 Gamma(1/2+beta/4)/Gamma(1/2-beta/4) (2/r)^{beta/2+1} 2F1(1/2+beta/4, 1/2; 1; sin^2 theta).
// beta >= 2 requires `continued` (analytic continuation in beta).
double i_beta_closed(double r, double theta, double beta, bool continued = false);
// Elliptic-integral forms for beta in {0, 1, 3}.
double i_beta_elliptic(double r, double theta, int beta);

// int_0^inf u^nu K_nu(a u) J_order(b u) du by panels between Bessel zeros.
double bessel_k_hankel(double nu, int order, double a, double b);
double i_beta_quadrature(double r, double theta, double beta, const QuadratureConfig& cfg = {});

enum class Part { one, two };
// Cylindrical (rho, psi, z) components of (2pi)^{-3/2}(Laplacian I e3 - grad d3 I)
// for part one and (2pi)^{-3/2} e3 x grad I_{beta+2} for part two.
Vec3 field_from_i_beta(const Vec3& x, double beta, Part part, double h_rel = 2e-3);

enum class Integrand { psi1, psi2, debierre, i_beta };

struct DampedResult {
    CVec3 value;                    // cylindrical (rho, psi, z); i_beta puts the scalar in [0]
    std::vector<CVec3> per_epsilon; // raw damped values, same order as epsilon_list
    std::vector<CVec3> successive;  // extrapolants using the 2, 3, ... smallest epsilons
    double error_estimate = 0.0;
    bool unstable = false;
};

// Field (2pi)^{-3/2} int d^3k k^{beta/2} w(k) e^{ik.x} e^{-eps k} for the tagged
// momentum function w (E1, E2, or the rotated helicity vector), or I_beta itself.
DampedResult damped_fourier_oracle(const Vec3& x, Integrand tag, double beta, int sigma,
                                   const QuadratureConfig& cfg = {});

// Reference serial implementation of the same integral.
DampedResult damped_fourier_oracle_serial(const Vec3& x, Integrand tag, double beta, int sigma,
                                          const QuadratureConfig& cfg = {});

// I_{+,0} = 4 pi i e^{-i psi} int J1(rho k) K0(|x3| k) dk by quadrature.
cplx debierre_i_plus0(const Vec3& x);

// Polynomial extrapolation to eps = 0 of lim int_0^inf f(k) e^{-eps k} dk.
struct DampedScalar {
    double value = 0.0;
    std::vector<double> per_epsilon;
    std::vector<double> successive;
    double error_estimate = 0.0;
    bool unstable = false;
};

DampedScalar damped_radial_limit(const std::function<double(double)>& f, const QuadratureConfig& cfg,
                                 double period = 2.0 * pi);

// lim int_0^inf J_n(k) e^{-eps k} dk, which equals 1 for every n >= 0.
double damped_bessel_j_integral(int order, const QuadratureConfig& cfg = {});

// lim Im int_0^inf s^{beta+1} e^{is} e^{-eps s} ds by damped quadrature.
double normalization_quadrature(double beta, const QuadratureConfig& cfg = {});

// two-sided Fourier transform int e^{ixs}(s^2+a^2)^{-nu-1/2} ds by panels and Wynn acceleration
double fourier_power_quadrature(double nu, double a, double x);

struct MomentumGrid {
    double k_cut = 8.0;
    int k_panels = 12;
    int theta_panels = 4;
    int phi_points = 32;
};

struct InnerProduct {
    cplx value;
    bool truncation_warning = false;
};

InnerProduct inner_product_momentum(const momentum::Field& f, const momentum::Field& g, double beta,
                                    const MomentumGrid& grid = {});

} // namespace phpos::oracle
