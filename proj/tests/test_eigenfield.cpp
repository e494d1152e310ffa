#include <doctest.h>

#include <cmath>

#include "phpos/eigenfield.hpp"
#include "phpos/verify.hpp"

using namespace phpos;
using namespace phpos::eigenfield;
using doctest::Approx;

// Profiles from mpmath: derivatives of the hypergeometric closed form of I_beta at 40 digits.
TEST_SUITE("eigenfield")
{
    TEST_CASE("LP profile values")
    {
        const auto a = lp_profile(0.7), b = lp_profile(2.2);
        CHECK(a.P_rho == Approx(-0.92674724392794069).epsilon(1e-13));
        CHECK(a.P_z == Approx(-0.56218484297905073).epsilon(1e-13));
        CHECK(a.P_psi_regular == 0.0);
        CHECK(b.P_rho == Approx(1.2886728541453554).epsilon(1e-13));
        CHECK(b.P_z == Approx(-0.29622743512989946).epsilon(1e-13));
        CHECK(a.delta_psi_coeff == Approx(-std::sqrt(pi)));
    }

    TEST_CASE("RS profile values")
    {
        const auto a = rs_profile(0.7), b = rs_profile(2.2);
        CHECK(a.P_rho == Approx(-0.80803079191400636).epsilon(1e-13));
        CHECK(a.P_psi_regular == Approx(0.50734235016113383).epsilon(1e-13));
        CHECK(a.P_z == Approx(-0.35921765709140922).epsilon(1e-13));
        CHECK(b.P_rho == Approx(1.1906991504382012).epsilon(1e-13));
        CHECK(b.P_psi_regular == Approx(0.86913729711379203).epsilon(1e-13));
        CHECK(b.P_z == Approx(-0.12102238463523968).epsilon(1e-13));
        CHECK(a.delta_psi_coeff == 0.0);
    }

    TEST_CASE("singular plane and masks")
    {
        const auto p = lp_profile(pi / 2);
        CHECK(p.on_singular_plane);
        CHECK(std::isnan(p.P_rho));
        const auto f = eigenfunction_value(Vec3(1, 0, 0), Vec3::Zero(), Vec3::UnitZ(), Family::LP, -1);
        CHECK(f.mask == Mask::on_singular_plane);
        CHECK(f.singular[1].real() == Approx(std::sqrt(pi)));
        const auto g = eigenfunction_value(Vec3(0, 0, 2), Vec3::Zero(), Vec3::UnitZ(), Family::RS, 1);
        CHECK(g.mask == Mask::on_axis);
        CHECK_THROWS_AS(eigenfunction_value(Vec3::Zero(), Vec3::Zero(), Vec3::UnitZ(), Family::RS, 1), DomainError);
        CHECK_THROWS_AS(lp_profile(-0.1), DomainError);
    }

    TEST_CASE("delta conventions")
    {
        const auto f = eigenfunction_value(Vec3(2, 0, 0), Vec3::Zero(), Vec3::UnitZ(), Family::LP, 1);
        const CVec3 plane = f.singular_as(DeltaConvention::plane_coordinate);
        CHECK(plane[1].real() == Approx(-std::sqrt(pi) / 4));
    }

    TEST_CASE("tilted axis matches rotated standard axis")
    {
        const Vec3 n = Vec3(1, 1, 1).normalized();
        const double th = 0.9;
        const Vec3 perp = Vec3(1, -1, 0).normalized();
        const Vec3 x = 1.7 * (std::cos(th) * n + std::sin(th) * perp);
        const auto f = eigenfunction_value(x, Vec3::Zero(), n, Family::RS, 1);
        const auto p = rs_profile(th);
        const double scale = std::pow(1.7, -3.5);
        CHECK(f.regular[0].real() == Approx(scale * p.P_rho).epsilon(1e-12));
        CHECK(f.regular[1].real() == Approx(scale * p.P_psi_regular).epsilon(1e-12));
        CHECK(f.regular[2].real() == Approx(scale * p.P_z).epsilon(1e-12));
    }

    TEST_CASE("eigenfield suite passes")
    {
        for (const auto& x : verify::eigenfield_suite()) {
            INFO(x.check_name << " " << x.notes);
            CHECK(x.passed);
        }
    }
}
