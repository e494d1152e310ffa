#include "phpos/momentum.hpp"

#include <cmath>
#include <string>

namespace phpos::momentum {

ModelParams ModelParams::from_beta(double beta, int sigma)
{
    ModelParams p{(beta - 1.0) / 2.0, beta, checked_sigma(sigma)};
    return p;
}

ModelParams ModelParams::from_alpha(double alpha, int sigma)
{
    return {alpha, 1.0 + 2.0 * alpha, checked_sigma(sigma)};
}

void ModelParams::validate() const
{
    checked_sigma(sigma);
    if (std::abs(beta - (1.0 + 2.0 * alpha)) > 1e-12)
        throw DomainError("model parameters violate beta = 1 + 2 alpha");
}

FrameSpec FrameSpec::about(const Vec3& n, Rotation rot)
{
    FrameSpec s;
    s.axis = n.normalized();
    // reference direction: the coordinate axis least aligned with n, projected out
    Vec3 trial = Vec3::UnitX();
    if (std::abs(s.axis.x()) > 0.9) trial = Vec3::UnitY();
    s.ref = (trial - s.axis.dot(trial) * s.axis).normalized();
    s.rotation = rot;
    return s;
}

FrameTriple standard_frame(const Vec3& k, const Vec3& n)
{
    const double kn = k.norm();
    if (!(kn > 0.0)) throw DomainError("frame undefined at k = 0");
    const Vec3 kxn = k.cross(n);
    const double kperp = kxn.norm();
    if (kperp < axis_tolerance * kn) throw AxisError("wave vector lies on the frame axis");
    FrameTriple f;
    f.E1 = k.cross(kxn) / (kn * kperp);
    f.E2 = -kxn / kperp;
    f.E3 = k / kn;
    f.axis = n;
    return f;
}

FrameTriple rotated_frame(const FrameTriple& f, double a, double b)
{
    if (std::abs(a * a + b * b - 1.0) > 1e-12)
        throw DomainError("rotation pair must satisfy a^2 + b^2 = 1");
    FrameTriple g = f;
    g.E1 = a * f.E1 - b * f.E2;
    g.E2 = b * f.E1 + a * f.E2;
    return g;
}

FrameTriple frame_at(const Vec3& k, const FrameSpec& spec)
{
    FrameTriple f = standard_frame(k, spec.axis);
    if (spec.rotation == Rotation::none) return f;
    const double k1 = k.dot(spec.ref);
    const double k2 = k.dot(spec.axis.cross(spec.ref));
    const double kp = std::hypot(k1, k2);
    const double sign = spec.rotation == Rotation::dptt ? 1.0 : -1.0;
    return rotated_frame(f, k1 / kp, sign * k2 / kp);
}

CVec3 helicity_apply(const Vec3& k, const CVec3& psi)
{
    const double kn = k.norm();
    if (!(kn > 0.0)) throw DomainError("helicity undefined at k = 0");
    return I * cross(to_complex(k / kn), psi);
}

CVec3 helicity_project(const Vec3& k, const CVec3& psi, int sigma)
{
    return psi + double(checked_sigma(sigma)) * helicity_apply(k, psi);
}

EigenKind EigenKind::frame(int j)
{
    if (j != 1 && j != 2) throw DomainError("frame index must be 1 or 2");
    return {j, false, 1};
}

EigenKind EigenKind::helical(int sigma) { return {1, true, checked_sigma(sigma)}; }

CVec3 momentum_eigenfunction(const Vec3& k, const Vec3& q, double beta, EigenKind kind,
                             const FrameSpec& spec)
{
    const FrameTriple f = frame_at(k, spec);
    const cplx phase = std::pow(k.norm(), beta / 2.0) * std::exp(-I * k.dot(q));
    if (!kind.helicity) return phase * to_complex(kind.j == 1 ? f.E1 : f.E2);
    const CVec3 u = (to_complex(f.E1) + I * double(kind.sigma) * to_complex(f.E2)) / std::sqrt(2.0);
    return phase * u;
}

namespace {

Mat3 frame_matrix(const FrameTriple& f)
{
    Mat3 m;
    m.col(0) = f.E1;
    m.col(1) = f.E2;
    m.col(2) = f.E3;
    return m;
}

template <class G>
CVec3 central_derivative(G&& g, const Vec3& k, int j, double h)
{
    Vec3 d = Vec3::Zero();
    d[j] = h;
    return (g(k - 2 * d) - 8.0 * g(k - d) + 8.0 * g(k + d) - g(k + 2 * d)) / (12.0 * h);
}

void check_stencil(const Vec3& k, double h, const Vec3& n)
{
    const double kperp = k.cross(n).norm();
    if (kperp <= 2.0 * h * std::sqrt(2.0) + axis_tolerance * k.norm())
        throw DomainError("stencil reaches the frame axis; reduce h or move k off-axis");
}

} // namespace

std::array<CVec3, 3> position_operator_apply(const Field& psi, const Vec3& k, double beta, Form form,
                                             const FrameSpec& spec, double h_rel)
{
    const double kn = k.norm();
    if (!(kn > 0.0)) throw DomainError("position operator undefined at k = 0");
    const double h = h_rel * kn;
    check_stencil(k, h, spec.axis);
    std::array<CVec3, 3> out;

    if (form == Form::factored) {
        auto g = [&](const Vec3& p) -> CVec3 {
            const Mat3 E = frame_matrix(frame_at(p, spec));
            return E.transpose().cast<cplx>() * psi(p) * std::pow(p.norm(), -beta / 2.0);
        };
        const Mat3 E = frame_matrix(frame_at(k, spec));
        const double scale = std::pow(kn, beta / 2.0);
        for (int j = 0; j < 3; ++j)
            out[j] = I * scale * (E.cast<cplx>() * central_derivative(g, k, j, h));
        return out;
    }

    if (spec.rotation != Rotation::none)
        throw DomainError("explicit form is implemented for unrotated frames only");
    const Vec3& n = spec.axis;
    const CVec3 p0 = psi(k);
    const CVec3 sigma_psi = helicity_apply(k, p0);
    const Vec3 kxn = k.cross(n);
    const double kperp = kxn.norm();
    const double cot = n.dot(k) / kperp;
    const cplx kdotpsi = to_complex(k).dot(p0); // dot() conjugates its first argument; k is real
    const double k2 = kn * kn;
    for (int j = 0; j < 3; ++j) {
        CVec3 ej = CVec3::Zero();
        ej[j] = 1.0;
        // (k x S)_j psi = -i (e_j (k.psi) - k psi_j)
        const CVec3 kxs = -I * (ej * kdotpsi - to_complex(k) * p0[j]);
        out[j] = I * central_derivative(psi, k, j, h) - I * beta * k[j] / (2.0 * k2) * p0
               + kxs / k2 + (cot / (kn * kperp)) * kxn[j] * sigma_psi;
    }
    return out;
}

double spin_conjugation_check(const Vec3& k, const FrameSpec& spec)
{
    const FrameTriple f = frame_at(k, spec);
    const CMat3 lhs = -I * (f.E1 * f.E2.transpose() - f.E2 * f.E1.transpose()).cast<cplx>();
    const Vec3 kh = k / k.norm();
    CMat3 sigma = CMat3::Zero();
    // Sigma_ij = -i eps_nij khat_n
    sigma(0, 1) = -I * kh.z();
    sigma(1, 0) = I * kh.z();
    sigma(1, 2) = -I * kh.x();
    sigma(2, 1) = I * kh.x();
    sigma(2, 0) = -I * kh.y();
    sigma(0, 2) = I * kh.y();
    return (lhs - sigma).cwiseAbs().maxCoeff();
}

double interference_density(double k, double d, double theta, double beta)
{
    if (d < 0.0) throw DomainError("separation must be non-negative");
    const double c = std::cos(0.5 * k * d * std::cos(theta));
    return 4.0 * std::pow(k, beta) * c * c;
}

} // namespace phpos::momentum
