#pragma once

// Momentum-space frames, helicity, the position operator and its
// eigenfunctions. Units hbar = c = 1.

#include <array>
#include <functional>

#include "phpos/types.hpp"

namespace phpos::momentum {

struct ModelParams {
    double alpha;
    double beta; // beta = 1 + 2 alpha
    int sigma;

    static ModelParams from_beta(double beta, int sigma = 1);
    static ModelParams from_alpha(double alpha, int sigma = 1);
    void validate() const;
};

// Optional rotation of the spherical frame about E3 by (a, b) built from the
// transverse components of k: none, (k1, k2)/k_perp, or (k1, -k2)/k_perp.
enum class Rotation { none, dptt, debierre };

// Frame axis n plus a reference direction u perpendicular to n; k1 = k.u and
// k2 = k.(n x u) define the rotation angles.
struct FrameSpec {
    Vec3 axis = Vec3::UnitZ();
    Vec3 ref = Vec3::UnitX();
    Rotation rotation = Rotation::none;

    static FrameSpec about(const Vec3& n, Rotation rot = Rotation::none);
};

struct FrameTriple {
    Vec3 E1, E2, E3;
    Vec3 axis;
};

inline constexpr double axis_tolerance = 1e-13;

FrameTriple standard_frame(const Vec3& k, const Vec3& n = Vec3::UnitZ());
FrameTriple rotated_frame(const FrameTriple& f, double a, double b);
FrameTriple frame_at(const Vec3& k, const FrameSpec& spec);

CVec3 helicity_apply(const Vec3& k, const CVec3& psi);
CVec3 helicity_project(const Vec3& k, const CVec3& psi, int sigma);

// Frame index j in {1, 2}, or the helicity combination (E1 + i sigma E2)/sqrt 2.
struct EigenKind {
    int j = 1;
    bool helicity = false;
    int sigma = 1;

    static EigenKind frame(int j);
    static EigenKind helical(int sigma);
};

CVec3 momentum_eigenfunction(const Vec3& k, const Vec3& q, double beta, EigenKind kind,
                             const FrameSpec& spec = {});

using Field = std::function<CVec3(const Vec3&)>;

enum class Form { factored, explicit_form };

// (Q1 psi, Q2 psi, Q3 psi) at k from a central fourth-order stencil of
// half-width 2h, h = h_rel |k|. The explicit form supports unrotated frames.
std::array<CVec3, 3> position_operator_apply(const Field& psi, const Vec3& k, double beta, Form form,
                                             const FrameSpec& spec = {}, double h_rel = 1e-3);

// max |(E S3 E^T - Sigma)_ij| with Sigma_ij = -(i/k) eps_nij k_n.
double spin_conjugation_check(const Vec3& k, const FrameSpec& spec = {});

double interference_density(double k, double d, double theta, double beta);

} // namespace phpos::momentum
