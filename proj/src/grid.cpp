#include "phpos/grid.hpp"

#include <cmath>
#include <limits>

namespace phpos::grid {

using eigenfield::Family;

FieldFamily parse_field_family(const std::string& name)
{
    if (name == "LP" || name == "lp") return FieldFamily::LP;
    if (name == "RS" || name == "rs") return FieldFamily::RS;
    if (name == "Debierre" || name == "debierre") return FieldFamily::Debierre;
    throw DomainError("unknown family '" + name + "' (expected LP, RS or Debierre)");
}

const char* field_family_name(FieldFamily f)
{
    switch (f) {
    case FieldFamily::LP: return "LP";
    case FieldFamily::RS: return "RS";
    case FieldFamily::Debierre: return "Debierre";
    }
    return "?";
}

const char* row_mask_name(RowMask m)
{
    switch (m) {
    case RowMask::valid: return "valid";
    case RowMask::on_axis: return "on_axis";
    case RowMask::band: return "singular_band";
    case RowMask::origin: return "origin";
    }
    return "?";
}

void GridSpec::validate() const
{
    if (nx < 2 || nz < 2) throw DomainError("grid sample counts must be at least 2");
    if (!(mask_band >= 0.0)) throw DomainError("mask_band must be non-negative");
    if (!(x_hi > x_lo) || !(z_hi > z_lo)) throw DomainError("grid ranges must be increasing");
    if (!(axis.norm() > 0.0)) throw DomainError("grid axis must be non-zero");
}

namespace {

double sample(double lo, double hi, int i, int n)
{
    if (i == n - 1) return hi;
    return lo + (hi - lo) * i / (n - 1);
}

ProfileRow profile_row(Family f, double lo, double hi, int i, int n)
{
    const double th = sample(lo, hi, i, n);
    return {th, eigenfield::profile(f, th)};
}

std::vector<ProfileRow> profile_checked(double lo, double hi, int n)
{
    if (n < 2) throw DomainError("profile table needs at least 2 samples");
    if (!(lo >= 0.0 && hi <= pi && hi > lo)) throw DomainError("theta range must satisfy 0 <= lo < hi <= pi");
    return std::vector<ProfileRow>(std::size_t(n));
}

FieldRow field_row(const GridSpec& g, const Vec3& n, const Vec3& ref, FieldFamily f, int sigma, long idx)
{
    const int ix = int(idx % g.nx), iz = int(idx / g.nx);
    FieldRow row;
    row.x = sample(g.x_lo, g.x_hi, ix, g.nx);
    row.z = sample(g.z_lo, g.z_hi, iz, g.nz);
    row.comp = CVec3::Constant(cplx(std::numeric_limits<double>::quiet_NaN(), 0.0));
    const Vec3 p = row.x * ref + row.z * n;
    const double r = std::hypot(row.x, row.z);
    if (r == 0.0) {
        row.mask = RowMask::origin;
        return row;
    }
    if (std::abs(row.z) / r < g.mask_band || row.z == 0.0) {
        row.mask = RowMask::band;
        return row;
    }
    eigenfield::DistributionalField v;
    if (f == FieldFamily::Debierre)
        v = eigenfield::debierre_lp(p, sigma, n, ref);
    else
        v = eigenfield::eigenfunction_value(p, Vec3::Zero(), n, f == FieldFamily::LP ? Family::LP : Family::RS,
                                            sigma);
    row.mask = v.mask == eigenfield::Mask::on_axis ? RowMask::on_axis : RowMask::valid;
    if (!(row.mask == RowMask::on_axis && f == FieldFamily::Debierre)) row.comp = v.regular;
    return row;
}

} // namespace

std::vector<ProfileRow> profile_table(Family f, double lo, double hi, int n)
{
    auto rows = profile_checked(lo, hi, n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) rows[i] = profile_row(f, lo, hi, i, n);
    return rows;
}

std::vector<ProfileRow> profile_table_serial(Family f, double lo, double hi, int n)
{
    auto rows = profile_checked(lo, hi, n);
    for (int i = 0; i < n; ++i) rows[i] = profile_row(f, lo, hi, i, n);
    return rows;
}

std::vector<FieldRow> field_grid(const GridSpec& g, FieldFamily f, int sigma)
{
    g.validate();
    checked_sigma(sigma);
    const Vec3 n = g.axis.normalized();
    const Vec3 ref = eigenfield::default_ref(n);
    const long count = long(g.nx) * g.nz;
    std::vector<FieldRow> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) rows[i] = field_row(g, n, ref, f, sigma, i);
    return rows;
}

std::vector<FieldRow> field_grid_serial(const GridSpec& g, FieldFamily f, int sigma)
{
    g.validate();
    checked_sigma(sigma);
    const Vec3 n = g.axis.normalized();
    const Vec3 ref = eigenfield::default_ref(n);
    const long count = long(g.nx) * g.nz;
    std::vector<FieldRow> rows(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) rows[i] = field_row(g, n, ref, f, sigma, i);
    return rows;
}

} // namespace phpos::grid
