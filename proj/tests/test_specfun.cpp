#include <doctest.h>

#include <cmath>

#include "phpos/specfun.hpp"
#include "phpos/verify.hpp"

using namespace phpos;
using namespace phpos::specfun;
using doctest::Approx;

// reference values computed at 40 digits with mpmath
TEST_SUITE("specfun")
{
    TEST_CASE("elliptic integrals at modulus 0.6")
    {
        CHECK(ellip_K(0.6) == Approx(1.7507538029157525).epsilon(1e-15));
        CHECK(ellip_E(0.6) == Approx(1.4180833944487242).epsilon(1e-15));
        const auto ke = ellip_KE(0.6);
        CHECK(ke.K_minus_E == Approx(1.7507538029157525 - 1.4180833944487242).epsilon(1e-14));
    }

    TEST_CASE("K minus E keeps relative accuracy at small modulus")
    {
        const double k = 1e-4;
        CHECK(ellip_KE(k).K_minus_E == Approx(pi / 4 * k * k * (1 + 3 * k * k / 8)).epsilon(1e-13));
        CHECK(ellip_K_prime(k) / k == Approx(pi / 4 * (1 + 9 * k * k / 8)).epsilon(1e-9));
    }

    TEST_CASE("Gauss hypergeometric function")
    {
        CHECK(gauss_2f1(0.75, 0.5, 1.0, 0.3) == Approx(1.1414092657334668).epsilon(1e-14));
        CHECK(gauss_2f1(1.25, 0.5, 1.0, 0.9) == Approx(4.6421258577883955).epsilon(1e-12));
        CHECK(gauss_2f1(0.3, 0.2, 1.0, 0.0) == 1.0);
    }

    TEST_CASE("Bessel and gamma functions")
    {
        CHECK(bessel_J(0, 5.0) == Approx(-0.1775967713143383).epsilon(1e-13));
        CHECK(bessel_J(1, 50.0) == Approx(-0.097511828125175138).epsilon(1e-12));
        CHECK(bessel_Kmod(0.25, 2.0) == Approx(0.11537827684085676).epsilon(1e-12));
        CHECK(gamma_fn(0.3) == Approx(2.9915689876875906).epsilon(1e-14));
        CHECK(rgamma(-3.0) == 0.0);
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS(ellip_K(1.0), DomainError);
        CHECK_THROWS_AS(ellip_K(-0.1), DomainError);
    }

    TEST_CASE("identity suite passes")
    {
        const auto r = verify::specfun_suite();
        for (const auto& x : r) {
            INFO(x.check_name);
            CHECK(x.passed);
        }
    }
}
