#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace phpos {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Frame or cylindrical basis undefined because the point lies on the axis.
struct AxisError : DomainError {
    using DomainError::DomainError;
};

// Series, quadrature or extrapolation budget exhausted.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline CVec3 to_complex(const Vec3& v) { return v.cast<cplx>(); }

// Bilinear cross product. Eigen's cross() conjugates the result for complex scalars.
inline CVec3 cross(const CVec3& a, const CVec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline int checked_sigma(int sigma)
{
    if (sigma != 1 && sigma != -1)
        throw DomainError("helicity must be +1 or -1, got " + std::to_string(sigma));
    return sigma;
}

} // namespace phpos
