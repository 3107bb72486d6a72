#pragma once

#include <Eigen/Dense>
#include <span>

#include "curvedtet/errors.hpp"

namespace curvedtet {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Unit quaternion q = w + x i + y j + z k, an SU(2) element.
/// Conjugation q v q^-1 acts on 3-vectors as a right-handed rotation.
struct Rotor {
    double w = 1.0;
    Vec3 v = Vec3::Zero();

    static Rotor identity() { return {}; }

    Rotor operator*(const Rotor& o) const {
        return {w * o.w - v.dot(o.v), w * o.v + o.w * v + v.cross(o.v)};
    }
    Rotor operator-() const { return {-w, -v}; }
    Rotor conjugate() const { return {w, -v}; }
    Rotor inverse() const { return conjugate(); }  // unit rotors only

    double norm() const { return std::sqrt(w * w + v.squaredNorm()); }
    Rotor normalized() const {
        double n = norm();
        return {w / n, v / n};
    }
    /// Half-trace of the fundamental representation, (1/2)Tr(H) = cos(a/2).
    double half_trace() const { return w; }
};

/// Rotation by `angle` in (0, 2pi) about the unit vector `axis`.
struct AxisAngle {
    double angle;
    Vec3 axis;
};

/// exp(a n.tau): w = cos(a/2), v = sin(a/2) n.
Rotor exp_su2(const AxisAngle& aa);
inline Rotor exp_su2(double angle, const Vec3& axis) { return exp_su2({angle, axis}); }

/// Inverse of exp_su2 with angle mapped into (0, 2pi).
/// Throws DegenerateRotor for q = +-identity (no axis data).
AxisAngle log_su2(const Rotor& q);

/// The SO(3) matrix acting on 3-vectors as conjugation by q.
Mat3 rotor_to_rotation(const Rotor& q);

/// One of the two rotors covering O. Tie-break: w >= 0, and at w = 0 the
/// first nonzero component of v positive. Throws IdentityRotation.
Rotor lift_so3(const Mat3& O);

/// Connected part of the half-trace of a product of 1..3 rotors:
///   <H>_C            = (1/2)Tr H
///   <Hl Hm>_C        = (1/2)Tr(Hl Hm) - (1/4)Tr(Hl)Tr(Hm)
///   <Hl Hm Hq>_C     = (1/2)Tr(HlHmHq) - [(1/4)Tr(Hl)Tr(HmHq) + cyc]
///                      + (1/4)Tr(Hl)Tr(Hm)Tr(Hq)
double connected_trace(std::span<const Rotor> qs);

/// Angle of the rotation carrying one rotor's SO(3) image onto the other's.
/// Computed in rotor algebra so small angles keep full precision.
double so3_distance(const Rotor& p, const Rotor& q);
double so3_distance(const Mat3& A, const Mat3& B);

/// Rotation angle in [0, pi] of the SO(3) projection of q.
double so3_angle(const Rotor& q);

}  // namespace curvedtet
