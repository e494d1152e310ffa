#include "phpos/eigenfield.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "phpos/specfun.hpp"

namespace phpos::eigenfield {

namespace {

const double sqrt_pi = std::sqrt(pi);
const double nan = std::numeric_limits<double>::quiet_NaN();

AngularProfile singular_profile(double delta)
{
    AngularProfile p{nan, nan, nan, delta, true};
    return p;
}

} // namespace

Vec3 default_ref(const Vec3& n)
{
    Vec3 trial = std::abs(n.x()) > 0.9 ? Vec3::UnitY() : Vec3::UnitX();
    return (trial - n.dot(trial) * n).normalized();
}

const char* family_name(Family f) { return f == Family::LP ? "LP" : "RS"; }

Family parse_family(const std::string& name)
{
    if (name == "LP" || name == "lp") return Family::LP;
    if (name == "RS" || name == "rs") return Family::RS;
    throw DomainError("unknown family '" + name + "' (expected LP or RS)");
}

int PolarPoint::sign() const
{
    if (theta == pi / 2) return 0;
    return theta > pi / 2 ? 1 : -1;
}

const char* mask_name(Mask m)
{
    switch (m) {
    case Mask::valid: return "valid";
    case Mask::on_axis: return "on_axis";
    case Mask::on_singular_plane: return "on_singular_plane";
    }
    return "?";
}

AngularProfile lp_profile_cs(double c, double sn)
{
    if (sn == 0.0) return {0.0, 0.0, -sqrt_pi / 2, -sqrt_pi, false};
    if (c == 0.0) return singular_profile(-sqrt_pi);
    const double s = std::abs(c);
    const auto ke = specfun::ellip_KE(sn, s);
    AngularProfile p;
    // 2E cot 2t - K cot t rewritten so that no cancellation occurs near the axis
    p.P_rho = -(ke.K_minus_E * c * c + ke.E * sn * sn) / (sqrt_pi * sn * c);
    p.P_z = (ke.K_minus_E - ke.E) / sqrt_pi;
    p.delta_psi_coeff = -sqrt_pi;
    return p;
}

AngularProfile rs_profile_cs(double c, double sn)
{
    const double K0 = specfun::K_lemniscatic();
    if (sn == 0.0) return {0.0, 0.0, -3.0 * pi / (8.0 * K0), 0.0, false};
    if (c == 0.0) return singular_profile(0.0);
    const double s = std::abs(c);
    const double t = std::sqrt(s);
    const double one_minus_s = sn * sn / (1.0 + s);
    const double one_minus_t = one_minus_s / (1.0 + t);
    const double den = std::sqrt(2.0 * (1.0 + s));
    const auto ke = specfun::ellip_KE(one_minus_t / den, (1.0 + t) / den);
    const double K = ke.K, D = ke.K_minus_E;
    const double s2 = s * s, t4 = s2, t5 = s2 * t;

    // A_i K + B_i E with the (1 - t) factor of A_i + B_i pulled out analytically
    const double n1 = one_minus_t * (5 * t5 + 10 * t4 + 4 * t + 2) * K - 2 * t * (2 - 5 * s2) * D;
    const double n2 = one_minus_t * (3 * s * t + 2) * K - 2 * (2 - 3 * s2) * D;
    const double n3 = (4 - 5 * t + 5 * s - 5 * s * t - 5 * s2) * K + 10 * t * (1 + s) * D;

    const double sq = std::sqrt(one_minus_s);
    const double p32 = std::pow(2.0 * s, -1.5);
    const double sgn = c > 0 ? -1.0 : 1.0;
    AngularProfile p;
    p.P_rho = p32 / (2 * K0) * sgn * n1 / sq;
    p.P_psi_regular = K0 / pi * p32 * n2 / sq;
    p.P_z = 1.0 / (4 * K0 * std::sqrt(2.0 * s)) * n3 / std::sqrt(1.0 + s);
    return p;
}

AngularProfile lp_profile(double theta)
{
    if (!(theta >= 0.0 && theta <= pi)) throw DomainError("theta must lie in [0, pi]");
    if (theta == pi / 2) return singular_profile(-sqrt_pi);
    if (theta == 0.0) return lp_profile_cs(1.0, 0.0);
    if (theta == pi) return lp_profile_cs(-1.0, 0.0);
    return lp_profile_cs(std::cos(theta), std::sin(theta));
}

AngularProfile rs_profile(double theta)
{
    if (!(theta >= 0.0 && theta <= pi)) throw DomainError("theta must lie in [0, pi]");
    if (theta == pi / 2) return singular_profile(0.0);
    if (theta == 0.0) return rs_profile_cs(1.0, 0.0);
    if (theta == pi) return rs_profile_cs(-1.0, 0.0);
    return rs_profile_cs(std::cos(theta), std::sin(theta));
}

AngularProfile profile(Family f, double theta)
{
    return f == Family::LP ? lp_profile(theta) : rs_profile(theta);
}

AngularProfile lp_asymptotic_plane(double theta)
{
    const double c = std::cos(theta);
    AngularProfile p;
    p.P_rho = -1.0 / (sqrt_pi * c);
    p.P_z = -std::log(std::abs(c)) / sqrt_pi;
    p.delta_psi_coeff = -sqrt_pi;
    return p;
}

AngularProfile rs_asymptotic_plane(double theta)
{
    const double c = std::cos(theta);
    const double s = std::abs(c);
    const double sgn = theta > pi / 2 ? 1.0 : -1.0;
    const double lead = std::pow(s, -1.5) / std::sqrt(2.0);
    AngularProfile p;
    p.P_rho = 0.5 * sgn * lead;
    p.P_psi_regular = 0.5 * lead;
    p.P_z = 1.0 / std::sqrt(2.0 * s);
    return p;
}

CylBasis cylindrical_basis(const Vec3& d, const Vec3& n, const Vec3& ref, bool* on_axis)
{
    const Vec3 perp = d - n.dot(d) * n;
    const double rho = perp.norm();
    CylBasis b;
    b.e_z = n;
    const bool axis = !(rho > 1e-13 * d.norm());
    if (on_axis) *on_axis = axis;
    b.e_rho = axis ? Vec3((ref - n.dot(ref) * n).normalized()) : Vec3(perp / rho);
    b.e_psi = n.cross(b.e_rho);
    return b;
}

CVec3 DistributionalField::regular_cartesian() const
{
    return regular[0] * to_complex(basis.e_rho) + regular[1] * to_complex(basis.e_psi)
         + regular[2] * to_complex(basis.e_z);
}

CVec3 DistributionalField::singular_as(DeltaConvention target) const
{
    if (target == convention) return singular;
    // c delta(theta - pi/2) = c r delta(x3)
    return target == DeltaConvention::plane_coordinate ? CVec3(singular * r) : CVec3(singular / r);
}

DistributionalField eigenfunction_value(const Vec3& x, const Vec3& q, const Vec3& n, Family family,
                                        int sigma)
{
    checked_sigma(sigma);
    const Vec3 nn = n.normalized();
    const Vec3 d = x - q;
    const double r = d.norm();
    if (!(r > 0.0)) throw DomainError("eigenfunction evaluated at its own eigenvalue point");
    DistributionalField f;
    f.r = r;
    f.plane_normal = nn;
    f.convention = DeltaConvention::polar_angle;
    bool axis = false;
    const Vec3 perp = d - nn.dot(d) * nn;
    f.basis = cylindrical_basis(d, nn, default_ref(nn), &axis);
    const double c = nn.dot(d) / r;
    const double sn = axis ? 0.0 : perp.norm() / r;
    const AngularProfile p = family == Family::LP ? lp_profile_cs(c, sn) : rs_profile_cs(c, sn);
    const double beta = family_beta(family);
    const double scale = std::pow(r, -3.0 - beta / 2.0);
    if (p.on_singular_plane) {
        f.mask = Mask::on_singular_plane;
        f.regular = CVec3::Constant(cplx(nan, 0.0));
    } else {
        f.mask = axis ? Mask::on_axis : Mask::valid;
        f.regular = CVec3(scale * p.P_rho, sigma * scale * p.P_psi_regular, scale * p.P_z);
    }
    f.singular = CVec3(0.0, sigma * p.delta_psi_coeff * std::pow(r, -3.0), 0.0);
    return f;
}

namespace {

DistributionalField debierre_plus(const Vec3& x, const Vec3& n, const Vec3& ref)
{
    const double r = x.norm();
    if (!(r > 0.0)) throw DomainError("eigenfunction evaluated at its own eigenvalue point");
    DistributionalField f;
    f.r = r;
    f.plane_normal = n;
    f.convention = DeltaConvention::plane_coordinate;
    bool axis = false;
    f.basis = cylindrical_basis(x, n, ref, &axis);
    const double x3 = n.dot(x);
    const double rho = (x - x3 * n).norm();
    if (axis) {
        f.mask = Mask::on_axis;
        return f;
    }
    const Vec3 u = (ref - n.dot(ref) * n).normalized();
    const double cpsi = f.basis.e_rho.dot(u), spsi = f.basis.e_rho.dot(n.cross(u));
    const cplx pre = cplx(cpsi, -spsi) / (sqrt_pi * std::pow(r, 4));
    const double r2 = r * r;
    f.singular = pre * CVec3(-pi * rho * rho, -I * pi * r2, 0.0);
    if (x3 == 0.0) {
        f.mask = Mask::on_singular_plane;
        f.regular = CVec3::Constant(cplx(nan, 0.0));
        return f;
    }
    f.regular = pre * CVec3(I * (x3 * x3 - rho * rho) / x3, r2 / x3, -2.0 * I * rho);
    return f;
}

} // namespace

DistributionalField debierre_lp(const Vec3& x, int sigma, const Vec3& n, const Vec3& ref)
{
    checked_sigma(sigma);
    const Vec3 nn = n.normalized();
    if (sigma == 1) return debierre_plus(x, nn, ref);
    // Psi_-(x) = Psi_+(-x)*; the basis at -x is (-e_rho, -e_psi, e_z)
    DistributionalField f = debierre_plus(-x, nn, ref);
    const CVec3 flip(-1.0, -1.0, 1.0);
    f.regular = f.regular.conjugate().cwiseProduct(flip);
    f.singular = f.singular.conjugate().cwiseProduct(flip);
    f.basis = {-f.basis.e_rho, -f.basis.e_psi, f.basis.e_z};
    return f;
}

double OverlapValue::at(double d) const
{
    if (kind == Kind::delta) throw DomainError("delta-kind overlap has no pointwise value");
    return coefficient * std::pow(d, -separation_power);
}

namespace {

OverlapValue overlap_impl(const Vec3& q, const Vec3& qp, double beta, double label_factor)
{
    if (beta == 0.0) return {OverlapValue::Kind::delta, std::pow(2 * pi, 3) * label_factor, 0.0};
    if ((q - qp).norm() == 0.0)
        throw DomainError("finite overlap undefined at coincident eigenvalues");
    const double c = -4.0 * pi * std::sin(pi * beta / 2.0) * specfun::gamma_fn(beta + 2.0);
    return {OverlapValue::Kind::finite, c * label_factor, beta + 3.0};
}

} // namespace

OverlapValue overlap(const Vec3& q, const Vec3& qp, double beta, FrameLabels l)
{
    if (l.j < 1 || l.j > 2 || l.jp < 1 || l.jp > 2) throw DomainError("frame labels must be 1 or 2");
    return overlap_impl(q, qp, beta, l.j == l.jp ? 1.0 : 0.0);
}

OverlapValue overlap(const Vec3& q, const Vec3& qp, double beta, HelicityLabels l)
{
    checked_sigma(l.sigma);
    checked_sigma(l.sigma_p);
    return overlap_impl(q, qp, beta, 0.5 * (1.0 + l.sigma * l.sigma_p));
}

} // namespace phpos::eigenfield
