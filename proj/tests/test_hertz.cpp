#include <doctest.h>

#include "phpos/hertz.hpp"
#include "phpos/verify.hpp"

using namespace phpos;
using namespace phpos::hertz;
using doctest::Approx;

// Reference values: (r/2)^{3/2} r^n/n! (2 pi)^{-3/2} (2 pi)^{-1/2} I_{2n+1} from mpmath.
TEST_SUITE("hertz")
{
    TEST_CASE("static potential")
    {
        CHECK(hertz_t0(Vec3(0.3, 0.4, 0.8), 1).z() == Approx(-0.52248155109600278).epsilon(1e-13));
        CHECK(hertz_t0(Vec3(0.3, 0.4, 0.8), -1).z() == Approx(0.52248155109600278).epsilon(1e-13));
        CHECK_THROWS_AS(hertz_t0(Vec3(1, 0, 0), 1), DomainError);
    }

    TEST_CASE("series coefficients")
    {
        const auto h = hertz_series(0.5, 2);
        CHECK(h.real_coeffs[0] == Approx(0.094031597257959381).epsilon(1e-13));
        CHECK(h.imag_coeffs[0] == Approx(0.11084985491142421).epsilon(1e-13));
        CHECK(h.real_coeffs[1] == Approx(0.12309985724933147).epsilon(1e-13));
        CHECK(h.imag_coeffs[1] == Approx(0.13505851496147509).epsilon(1e-13));
    }

    TEST_CASE("time series domain")
    {
        const Vec3 x(0.6, 0.0, 0.8);
        CHECK_NOTHROW(zeta_eval(x, 0.5, 8));
        CHECK_THROWS_AS(zeta_eval(x, 0.85, 8), DomainError);
    }

    TEST_CASE("Hertz suite passes")
    {
        for (const auto& x : verify::hertz_suite()) {
            INFO(x.check_name << " " << x.notes);
            CHECK(x.passed);
        }
    }
}
