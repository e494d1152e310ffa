#include <doctest.h>

#include <cmath>

#include "phpos/eigenfield.hpp"
#include "phpos/oracle.hpp"

using namespace phpos;
using namespace phpos::oracle;
using doctest::Approx;

TEST_SUITE("oracle")
{
    TEST_CASE("closed I_beta against mpmath")
    {
        CHECK(i_beta_closed(1.3, 0.7, 0.5) == Approx(12.049757572638123).epsilon(1e-13));
        CHECK(i_beta_quadrature(1.3, 0.7, 0.5) == Approx(12.049757572638123).epsilon(1e-9));
    }

    TEST_CASE("configuration validation")
    {
        QuadratureConfig c;
        CHECK_NOTHROW(c.validate());
        c.epsilon_list = {0.1, 0.2};
        CHECK_THROWS_AS(c.validate(), DomainError);
        c = {};
        c.richardson_order = 5;
        CHECK_THROWS_AS(c.validate(), DomainError);
        c = {};
        c.k_max = 100.0;
        CHECK_THROWS_AS(c.validate(), DomainError);
    }

    TEST_CASE("report builder")
    {
        ReportBuilder b("x", 1e-3, 1e-6);
        b.add(1.0005, 1.0);
        b.add(1e-8, 0.0);
        auto r = b.finish();
        CHECK(r.passed);
        CHECK(r.samples == 2);
        CHECK(r.max_rel_err == Approx(5e-4));
        b.fail("forced");
        CHECK_FALSE(b.finish().passed);
    }

    TEST_CASE("damped limits")
    {
        CHECK(damped_bessel_j_integral(1) == Approx(1.0).epsilon(1e-6));
        // degree-4 extrapolation of the exact damped values Im 2/(eps - i)^3 (mpmath)
        const double n1 = normalization_quadrature(1.0);
        CHECK(n1 == Approx(-1.9999938281135974).epsilon(1e-9));
        CHECK(n1 == Approx(-2.0).epsilon(1e-5));
    }

    TEST_CASE("coarse damped oracle: parallel equals serial and tracks the closed form")
    {
        QuadratureConfig c;
        c.epsilon_list = {0.2, 0.1, 0.05};
        c.richardson_order = 2;
        const Vec3 x(std::sin(0.6), 0.0, std::cos(0.6));
        const auto a = damped_fourier_oracle(x, Integrand::psi1, 0.0, 1, c);
        const auto s = damped_fourier_oracle_serial(x, Integrand::psi1, 0.0, 1, c);
        CHECK(a.value == s.value);
        const auto p = eigenfield::lp_profile(0.6);
        CHECK(a.value[0].real() == Approx(std::sqrt(2.0) * p.P_rho).epsilon(1e-2));
        CHECK(a.value[2].real() == Approx(std::sqrt(2.0) * p.P_z).epsilon(1e-2));
    }
}
