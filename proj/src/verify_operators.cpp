#include <cmath>
#include <random>

#include "phpos/momentum.hpp"
#include "phpos/verify.hpp"

namespace phpos::verify {

using oracle::ReportBuilder;
using namespace momentum;

namespace {

struct Sampler {
    std::mt19937_64 gen{20240611};
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }

    Vec3 unit()
    {
        const double z = uniform(-1, 1), ph = uniform(0, 2 * pi);
        const double s = std::sqrt(1 - z * z);
        return {s * std::cos(ph), s * std::sin(ph), z};
    }

    // |k| in [0.5, 3], at least `min_sin` away from the axis n in angle
    Vec3 wave_vector(const Vec3& n, double min_sin = 0.2)
    {
        for (;;) {
            const Vec3 d = unit();
            if (d.cross(n).norm() >= min_sin) return uniform(0.5, 3.0) * d;
        }
    }

    FrameSpec frame_spec()
    {
        const int pick = int(uniform(0, 3));
        const Rotation rot = pick == 0 ? Rotation::none : pick == 1 ? Rotation::dptt : Rotation::debierre;
        return uniform(0, 1) < 0.5 ? FrameSpec::about(Vec3::UnitZ(), rot) : FrameSpec::about(unit(), rot);
    }
};

// Smooth transversal test function built on the frame of `spec`.
Field test_field(const FrameSpec& spec, const Vec3& k0)
{
    return [spec, k0](const Vec3& k) -> CVec3 {
        const FrameTriple f = frame_at(k, spec);
        const double env = std::exp(-(k - k0).squaredNorm());
        const cplx a = cplx(1.0, 0.3) + 0.4 * k.x() - cplx(0.0, 0.2) * k.z();
        const cplx b = cplx(-0.5, 0.8) + cplx(0.1, 0.3) * k.y();
        return env * (a * to_complex(f.E1) + b * to_complex(f.E2));
    };
}

double max_norm(const std::array<CVec3, 3>& v) { return std::max({v[0].norm(), v[1].norm(), v[2].norm()}); }

} // namespace

std::vector<OracleReport> operators_suite()
{
    std::vector<OracleReport> out;
    auto push = [&](ReportBuilder& b, int criterion = 0) {
        b.criterion(criterion);
        out.push_back(b.finish());
    };
    Sampler rng;

    {
        ReportBuilder b("operators.eigenvalue", 1e-6);
        const double betas[3] = {0.0, 0.5, 1.0};
        for (int i = 0; i < 50; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const Vec3 k = rng.wave_vector(spec.axis);
            const Vec3 q(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const double beta = betas[i % 3];
            const EigenKind kind = i % 4 == 0 ? EigenKind::frame(1)
                                 : i % 4 == 1 ? EigenKind::frame(2)
                                              : EigenKind::helical(i % 4 == 2 ? 1 : -1);
            const Field psi = [&](const Vec3& p) { return momentum_eigenfunction(p, q, beta, kind, spec); };
            const auto Q = position_operator_apply(psi, k, beta, Form::factored, spec);
            const CVec3 p0 = psi(k);
            double err = 0.0;
            for (int j = 0; j < 3; ++j) err = std::max(err, (Q[j] - q[j] * p0).norm());
            b.add_error(err, err / (q.norm() * p0.norm()));
        }
        b.note("50 random (k, q), fourth-order stencil h = 1e-3 |k|, mixed frames and beta");
        push(b, 2);
    }
    {
        ReportBuilder b("operators.eigenvalue_q0", 1e-9);
        const FrameSpec spec;
        const Vec3 k(0.7, -0.4, 1.1);
        const Field psi = [&](const Vec3& p) {
            return momentum_eigenfunction(p, Vec3::Zero(), 1.0, EigenKind::helical(1), spec);
        };
        const auto Q = position_operator_apply(psi, k, 1.0, Form::factored, spec);
        b.add_error(max_norm(Q), max_norm(Q));
        push(b);
    }
    {
        ReportBuilder b("operators.factored_vs_explicit", 1e-6);
        for (int i = 0; i < 20; ++i) {
            const FrameSpec spec = FrameSpec::about(i % 2 ? Vec3::UnitZ() : rng.unit());
            const Vec3 k = rng.wave_vector(spec.axis);
            const double beta = i % 3 == 0 ? 0.0 : i % 3 == 1 ? 1.0 : 0.5;
            const Field psi = test_field(spec, k + Vec3(0.2, -0.1, 0.3));
            const auto a = position_operator_apply(psi, k, beta, Form::factored, spec);
            const auto e = position_operator_apply(psi, k, beta, Form::explicit_form, spec);
            double err = 0.0;
            for (int j = 0; j < 3; ++j) err = std::max(err, (a[j] - e[j]).cwiseAbs().maxCoeff());
            b.add_error(err, err / max_norm(a));
        }
        b.note("20 random k, standard and tilted axes");
        push(b, 2);
    }
    {
        ReportBuilder b("operators.spin_conjugation", 1e-12);
        b.add_error(spin_conjugation_check(Vec3(1, 0, 0)), spin_conjugation_check(Vec3(1, 0, 0)));
        for (int i = 0; i < 100; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const double d = spin_conjugation_check(rng.wave_vector(spec.axis, 1e-3), spec);
            b.add_error(d, d);
        }
        push(b, 2);
    }
    {
        // residual of [Q_i, Q_j] psi at two stencil sizes; the observed order must be >= 1.8
        ReportBuilder b("operators.commutator_order", 0.2);
        const FrameSpec spec;
        const Vec3 k(0.8, 0.5, 0.6);
        const Field psi = test_field(spec, Vec3(0.6, 0.3, 0.9));
        const double beta = 1.0;
        double res[2] = {0.0, 0.0};
        const double hs[2] = {0.05, 0.025};
        for (int s = 0; s < 2; ++s) {
            auto Qj = [&](int j) -> Field {
                return [&, j, s](const Vec3& p) {
                    return position_operator_apply(psi, p, beta, Form::factored, spec, hs[s])[j];
                };
            };
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const CVec3 ij = position_operator_apply(Qj(j), k, beta, Form::factored, spec, hs[s])[i];
                    const CVec3 ji = position_operator_apply(Qj(i), k, beta, Form::factored, spec, hs[s])[j];
                    res[s] = std::max(res[s], (ij - ji).norm());
                }
        }
        const double order = std::log2(res[0] / res[1]);
        b.add_error(res[1], std::max(0.0, 2.0 - order));
        b.note("residuals " + std::to_string(res[0]) + " -> " + std::to_string(res[1]) + ", observed order "
               + std::to_string(order));
        push(b, 2);
    }
    {
        ReportBuilder qp("operators.commutator_QP", 1e-6), hel("operators.helicity_commutes", 1e-6),
            tr("operators.transversality_preserved", 1e-6);
        for (int i = 0; i < 10; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const Vec3 k = rng.wave_vector(spec.axis, 0.3);
            const Field psi = test_field(spec, k + Vec3(0.1, 0.2, -0.3));
            const double beta = i % 2 ? 1.0 : 0.0;
            const CVec3 p0 = psi(k);
            const auto Q = position_operator_apply(psi, k, beta, Form::factored, spec);
            for (int j = 0; j < 3; ++j) {
                const Field kpsi = [&, j](const Vec3& p) -> CVec3 { return p[j] * psi(p); };
                const auto QK = position_operator_apply(kpsi, k, beta, Form::factored, spec);
                for (int m = 0; m < 3; ++m) {
                    const CVec3 want = m == j ? CVec3(I * p0) : CVec3(CVec3::Zero());
                    const double e = (QK[m] - k[j] * Q[m] - want).norm();
                    qp.add_error(e, e / p0.norm());
                }
            }
            const Field spsi = [&](const Vec3& p) { return helicity_apply(p, psi(p)); };
            const auto QS = position_operator_apply(spsi, k, beta, Form::factored, spec);
            for (int j = 0; j < 3; ++j) {
                const double e = (QS[j] - helicity_apply(k, Q[j])).norm();
                hel.add_error(e, e / max_norm(Q));
                const double t = std::abs(to_complex(k).dot(Q[j]));
                tr.add_error(t, t / (k.norm() * max_norm(Q)));
            }
        }
        push(qp);
        push(hel);
        push(tr);
    }
    {
        ReportBuilder b("operators.frame_algebra", 1e-14);
        const auto f = standard_frame(Vec3(1, 0, 0));
        b.add(to_complex(f.E1), to_complex(Vec3(0, 0, -1)));
        b.add(to_complex(f.E2), to_complex(Vec3(0, 1, 0)));
        b.add(to_complex(f.E3), to_complex(Vec3(1, 0, 0)));
        const Vec3 k = Vec3(1, 1, 1) / std::sqrt(3.0), n(0, 1, 0);
        const auto g = standard_frame(k, n);
        const Vec3 kxn = k.cross(n);
        b.add(to_complex(g.E1), to_complex(Vec3(k.cross(kxn) / (k.norm() * kxn.norm()))));
        b.add(to_complex(g.E2), to_complex(Vec3(-kxn / kxn.norm())));
        for (int i = 0; i < 50; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const auto h = frame_at(rng.wave_vector(spec.axis, 1e-3), spec);
            Mat3 m;
            m << h.E1, h.E2, h.E3;
            const double d = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff()
                           + (h.E1.cross(h.E2) - h.E3).norm();
            b.add_error(d, d);
        }
        const auto r = rotated_frame(f, 1.0, 0.0);
        b.add(to_complex(r.E1), to_complex(f.E1));
        push(b);
    }
    {
        ReportBuilder b("operators.helicity_algebra", 1e-14);
        for (int i = 0; i < 20; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const Vec3 k = rng.wave_vector(spec.axis, 1e-3);
            const auto f = frame_at(k, spec);
            const CVec3 e1 = to_complex(f.E1), e2 = to_complex(f.E2);
            b.add(helicity_apply(k, e1), CVec3(I * e2));
            b.add(helicity_apply(k, e2), CVec3(-I * e1));
            for (int s : {1, -1}) {
                const CVec3 u = (e1 + I * double(s) * e2) / std::sqrt(2.0);
                b.add(helicity_apply(k, u), CVec3(double(s) * u));
            }
            const CVec3 psi = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)) * e1
                            + cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)) * e2;
            b.add(helicity_apply(k, helicity_apply(k, psi)), psi);
            const CVec3 pp = helicity_project(k, psi, 1), pm = helicity_project(k, psi, -1);
            b.add_error(std::abs(pp.dot(pm)), std::abs(pp.dot(pm)) / psi.squaredNorm());
            b.add(CVec3(0.5 * (pp + pm)), psi);
            const CVec3 up = (e1 + I * e2) / std::sqrt(2.0);
            b.add(helicity_project(k, up, 1), CVec3(2.0 * up));
            b.add_error(helicity_project(k, up, -1).norm(), helicity_project(k, up, -1).norm());
            // Schroedinger form on a helicity eigenstate: sigma k Sigma u = k u
            b.add(CVec3(k.norm() * helicity_apply(k, up)), CVec3(k.norm() * up));
        }
        push(b);
    }
    {
        ReportBuilder b("operators.momentum_eigenfunction", 1e-12);
        for (int i = 0; i < 20; ++i) {
            const FrameSpec spec = rng.frame_spec();
            const Vec3 k = rng.wave_vector(spec.axis, 1e-3);
            const Vec3 q(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
            const double beta = rng.uniform(0, 1.5);
            const CVec3 v = momentum_eigenfunction(k, q, beta, EigenKind::helical(i % 2 ? 1 : -1), spec);
            b.add(v.norm(), std::pow(k.norm(), beta / 2));
            const double t = std::abs(to_complex(k).dot(v));
            b.add_error(t, t);
        }
        const Vec3 k(0.3, 0.4, 0.5);
        b.add(momentum_eigenfunction(k, Vec3::Zero(), 0.0, EigenKind::frame(1)), to_complex(standard_frame(k).E1));
        push(b);
    }
    {
        ReportBuilder b("operators.interference", 1e-12, 1e-9);
        b.add(interference_density(2.0, 1.3, pi / 2, 1.0), 8.0);
        b.add(interference_density(pi, 1.0, 0.0, 0.5), 0.0);
        for (int i = 0; i < 20; ++i) {
            const Vec3 k = rng.wave_vector(Vec3::UnitZ(), 0.1);
            const Vec3 q(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Vec3 qp(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const double beta = i % 2 ? 1.0 : 0.0;
            const CVec3 sum = momentum_eigenfunction(k, q, beta, EigenKind::helical(1))
                            + momentum_eigenfunction(k, qp, beta, EigenKind::helical(1));
            const Vec3 d = q - qp;
            const double th = std::acos(k.dot(d) / (k.norm() * d.norm()));
            b.add(sum.squaredNorm(), interference_density(k.norm(), d.norm(), th, beta));
        }
        push(b);
    }
    {
        ReportBuilder b("operators.model_params", 1e-15);
        const auto p = ModelParams::from_alpha(-0.5);
        b.add(p.beta, 0.0);
        b.add(ModelParams::from_alpha(0.0).beta, 1.0);
        b.add(ModelParams::from_beta(1.0).alpha, 0.0);
        push(b);
    }
    return out;
}

} // namespace phpos::verify
