#include <doctest.h>

#include "phpos/momentum.hpp"
#include "phpos/verify.hpp"

using namespace phpos;
using namespace phpos::momentum;

TEST_SUITE("momentum")
{
    TEST_CASE("standard frame on the x axis")
    {
        const auto f = standard_frame(Vec3(2, 0, 0));
        CHECK((f.E1 - Vec3(0, 0, -1)).norm() < 1e-15);
        CHECK((f.E2 - Vec3(0, 1, 0)).norm() < 1e-15);
        CHECK((f.E3 - Vec3(1, 0, 0)).norm() < 1e-15);
        CHECK_THROWS_AS(standard_frame(Vec3(0, 0, 1)), AxisError);
    }

    TEST_CASE("helicity acts bilinearly on complex vectors")
    {
        const Vec3 k(0.7, -0.4, 1.1);
        const auto f = standard_frame(k);
        const CVec3 u = (to_complex(f.E1) + I * to_complex(f.E2)) / std::sqrt(2.0);
        CHECK((helicity_apply(k, u) - u).norm() < 1e-15);
        CHECK((helicity_apply(k, CVec3(I * to_complex(f.E2))) - to_complex(f.E1)).norm() < 1e-15);
    }

    TEST_CASE("position operator eigenvalue")
    {
        const Vec3 q(0.3, -0.5, 0.8), k(0.6, 0.9, -0.4);
        const Field psi = [&](const Vec3& p) { return momentum_eigenfunction(p, q, 1.0, EigenKind::helical(-1)); };
        const auto Q = position_operator_apply(psi, k, 1.0, Form::factored);
        for (int j = 0; j < 3; ++j) CHECK((Q[j] - q[j] * psi(k)).norm() < 1e-9);
    }

    TEST_CASE("model parameters")
    {
        CHECK(ModelParams::from_alpha(0.0).beta == 1.0);
        CHECK_THROWS_AS(ModelParams::from_beta(1.0, 0), DomainError);
    }

    TEST_CASE("operator suite passes")
    {
        for (const auto& x : verify::operators_suite()) {
            INFO(x.check_name << " " << x.notes);
            CHECK(x.passed);
        }
    }
}
