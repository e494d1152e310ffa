#include <doctest.h>

#include <cmath>

#include "phpos/grid.hpp"

using namespace phpos;
using namespace phpos::grid;

TEST_SUITE("grid")
{
    TEST_CASE("profile table endpoints and ordering")
    {
        const auto t = profile_table(eigenfield::Family::LP, 0.0, pi, 9);
        REQUIRE(t.size() == 9);
        CHECK(t.front().theta == 0.0);
        CHECK(t.back().theta == pi);
        CHECK(t.front().p.P_z == doctest::Approx(-std::sqrt(pi) / 2));
        CHECK(std::isnan(t[4].p.P_rho)); // exactly pi/2
        CHECK_THROWS_AS(profile_table(eigenfield::Family::LP, 0.0, 4.0, 9), DomainError);
    }

    TEST_CASE("field grid masks")
    {
        GridSpec g;
        g.nx = 5;
        g.nz = 5;
        const auto rows = field_grid(g, FieldFamily::RS, 1);
        REQUIRE(rows.size() == 25);
        CHECK(rows[12].mask == RowMask::origin);   // (0, 0)
        CHECK(rows[10].mask == RowMask::band);     // (-2, 0)
        CHECK(rows[2].mask == RowMask::on_axis);   // (0, -2)
        CHECK(rows[0].mask == RowMask::valid);
        CHECK(rows[0].x == -2.0);
        CHECK(rows[0].z == -2.0);
        CHECK(std::string(row_mask_name(RowMask::band)) == "singular_band");
    }

    TEST_CASE("homogeneity across grids")
    {
        GridSpec a, b;
        a.nx = b.nx = 7;
        a.nz = b.nz = 7;
        b.x_lo = b.z_lo = -4.0;
        b.x_hi = b.z_hi = 4.0;
        const auto ra = field_grid(a, FieldFamily::RS, 1), rb = field_grid(b, FieldFamily::RS, 1);
        for (std::size_t i = 0; i < ra.size(); ++i) {
            if (ra[i].mask != RowMask::valid) continue;
            CHECK((rb[i].comp - std::pow(2.0, -3.5) * ra[i].comp).norm() < 1e-14 * ra[i].comp.norm());
        }
    }

    TEST_CASE("invalid specs")
    {
        GridSpec g;
        g.nx = 1;
        CHECK_THROWS_AS(field_grid(g, FieldFamily::LP, 1), DomainError);
        g = {};
        CHECK_THROWS_AS(field_grid(g, FieldFamily::LP, 2), DomainError);
        CHECK_THROWS_AS(parse_field_family("TE"), DomainError);
    }
}
