#pragma once

// Tabulation kernels behind the CLI: angular profiles along a theta line and
// field components on a plane containing the frame axis. Each kernel has an
// OpenMP version and a serial reference that must agree bit for bit.

#include <string>
#include <vector>

#include "phpos/eigenfield.hpp"

namespace phpos::grid {

enum class FieldFamily { LP, RS, Debierre };

FieldFamily parse_field_family(const std::string& name);
const char* field_family_name(FieldFamily f);

struct ProfileRow {
    double theta;
    eigenfield::AngularProfile p;
};

// n samples spanning [theta_lo, theta_hi]; endpoints included.
std::vector<ProfileRow> profile_table(eigenfield::Family f, double theta_lo, double theta_hi, int n);
std::vector<ProfileRow> profile_table_serial(eigenfield::Family f, double theta_lo, double theta_hi, int n);

// Samples on the plane spanned by the axis n and a reference direction
// perpendicular to it; "x" runs along the reference, "z" along n.
struct GridSpec {
    Vec3 axis = Vec3::UnitZ();
    double x_lo = -2.0, x_hi = 2.0;
    double z_lo = -2.0, z_hi = 2.0;
    int nx = 201, nz = 201;
    double mask_band = 1e-3; // |cos theta| below this is masked

    void validate() const;
};

enum class RowMask { valid, on_axis, band, origin };
const char* row_mask_name(RowMask m);

struct FieldRow {
    double x, z;
    CVec3 comp; // (rho, psi, z) about the axis
    RowMask mask;
};

// Rows ordered with z outer and x inner.
std::vector<FieldRow> field_grid(const GridSpec& g, FieldFamily f, int sigma);
std::vector<FieldRow> field_grid_serial(const GridSpec& g, FieldFamily f, int sigma);

} // namespace phpos::grid
