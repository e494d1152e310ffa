#pragma once

// Closed-form configuration-space position eigenfunctions of the photon.
// Fields are Psi_q(x) = r^{-3-beta/2} (P_rho e_rho + sigma P_psi e_psi + P_z e_z)
// with r = |x - q| and theta the polar angle about the frame axis.

#include "phpos/types.hpp"

namespace phpos::eigenfield {

enum class Family { LP, RS };

// LP wave functions carry beta = 0, RS wave functions beta = 1.
inline double family_beta(Family f) { return f == Family::LP ? 0.0 : 1.0; }
const char* family_name(Family f);
Family parse_family(const std::string& name);

struct PolarPoint {
    double r;
    double theta;

    double s() const { return std::abs(std::cos(theta)); }
    int sign() const; // sgn(theta - pi/2), 0 exactly at pi/2
};

struct AngularProfile {
    double P_rho = 0.0;
    double P_psi_regular = 0.0;
    double P_z = 0.0;
    double delta_psi_coeff = 0.0; // coefficient of delta(theta - pi/2) in the psi component
    bool on_singular_plane = false;
};

// Profiles from the polar angle. The (cos, sin) overloads avoid the trig
// round trip when the caller already has them; sin must be >= 0.
AngularProfile lp_profile(double theta);
AngularProfile rs_profile(double theta);
AngularProfile lp_profile_cs(double c, double sn);
AngularProfile rs_profile_cs(double c, double sn);
AngularProfile profile(Family f, double theta);

// Leading behaviour near theta = pi/2.
AngularProfile lp_asymptotic_plane(double theta);
AngularProfile rs_asymptotic_plane(double theta);

// Azimuth reference about a unit axis n: the coordinate axis least aligned
// with n, made perpendicular to it.
Vec3 default_ref(const Vec3& n);

enum class Mask { valid, on_axis, on_singular_plane };
enum class DeltaConvention { polar_angle, plane_coordinate };

const char* mask_name(Mask m);

struct CylBasis {
    Vec3 e_rho, e_psi, e_z;
};

// Cylindrical basis about n at displacement d. On the axis e_rho falls back to
// `ref` projected perpendicular to n and `on_axis` is set.
CylBasis cylindrical_basis(const Vec3& d, const Vec3& n, const Vec3& ref, bool* on_axis = nullptr);

struct DistributionalField {
    CVec3 regular = CVec3::Zero();  // (rho, psi, z) components
    CVec3 singular = CVec3::Zero(); // (rho, psi, z) coefficients of the delta
    DeltaConvention convention = DeltaConvention::polar_angle;
    Vec3 plane_normal = Vec3::UnitZ();
    CylBasis basis{};
    Mask mask = Mask::valid;
    double r = 0.0;

    CVec3 regular_cartesian() const;
    // Singular coefficients re-expressed in the requested delta convention,
    // using delta(x3) = delta(theta - pi/2) / r.
    CVec3 singular_as(DeltaConvention target) const;
};

DistributionalField eigenfunction_value(const Vec3& x, const Vec3& q, const Vec3& n, Family family,
                                        int sigma);

// Helicity eigenfunctions in the frame rotated by (k1, -k2)/k_perp; sigma = -1
// is produced from sigma = +1 through Psi_-(x) = Psi_+(-x)*. The azimuth psi
// is measured about n from `ref`.
DistributionalField debierre_lp(const Vec3& x, int sigma, const Vec3& n = Vec3::UnitZ(),
                                const Vec3& ref = Vec3::UnitX());

struct OverlapValue {
    enum class Kind { delta, finite };
    Kind kind;
    double coefficient;      // delta kind: multiplies delta(q - q'); finite: multiplies d^{-power}
    double separation_power; // exponent of d = |q - q'| in the denominator

    double at(double d) const;
};

struct FrameLabels {
    int j, jp;
};
struct HelicityLabels {
    int sigma, sigma_p;
};

OverlapValue overlap(const Vec3& q, const Vec3& qp, double beta, FrameLabels labels);
OverlapValue overlap(const Vec3& q, const Vec3& qp, double beta, HelicityLabels labels);

} // namespace phpos::eigenfield
