#include "curvedtet/rotor.hpp"

#include <cmath>

namespace curvedtet {

Rotor exp_su2(const AxisAngle& aa) {
    return {std::cos(aa.angle / 2), std::sin(aa.angle / 2) * aa.axis};
}

AxisAngle log_su2(const Rotor& q) {
    double vn = q.v.norm();
    if (vn <= 1e-12)
        throw DegenerateRotor("rotor has no axis (a in {0, 2pi})");
    double a = 2.0 * std::atan2(vn, q.w);  // (0, 2pi) since vn > 0
    return {a, q.v / vn};
}

Mat3 rotor_to_rotation(const Rotor& q) {
    const double w = q.w, x = q.v.x(), y = q.v.y(), z = q.v.z();
    Mat3 R;
    R << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return R;
}

Rotor lift_so3(const Mat3& O) {
    // Shepperd-style extraction: branch on the largest diagonal combination.
    double t = O.trace();
    Rotor q;
    if (t > 0) {
        double r = std::sqrt(1 + t);
        q.w = 0.5 * r;
        q.v = Vec3(O(2, 1) - O(1, 2), O(0, 2) - O(2, 0), O(1, 0) - O(0, 1)) / (2 * r);
    } else {
        int i = 0;
        if (O(1, 1) > O(0, 0)) i = 1;
        if (O(2, 2) > O(i, i)) i = 2;
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double r = std::sqrt(1 + O(i, i) - O(j, j) - O(k, k));
        q.v[i] = 0.5 * r;
        q.w = (O(k, j) - O(j, k)) / (2 * r);
        q.v[j] = (O(j, i) + O(i, j)) / (2 * r);
        q.v[k] = (O(k, i) + O(i, k)) / (2 * r);
    }
    q = q.normalized();
    if (q.v.norm() <= 1e-12)
        throw IdentityRotation("identity has no distinguished lift");
    bool flip = q.w < 0;
    if (q.w == 0) {
        for (int c = 0; c < 3; ++c) {
            if (q.v[c] != 0) { flip = q.v[c] < 0; break; }
        }
    }
    return flip ? -q : q;
}

double connected_trace(std::span<const Rotor> qs) {
    switch (qs.size()) {
        case 1:
            return qs[0].half_trace();
        case 2:
            return (qs[0] * qs[1]).half_trace() - qs[0].half_trace() * qs[1].half_trace();
        case 3: {
            const Rotor &a = qs[0], &b = qs[1], &c = qs[2];
            return (a * b * c).half_trace()
                 - a.half_trace() * (b * c).half_trace()
                 - b.half_trace() * (c * a).half_trace()
                 - c.half_trace() * (a * b).half_trace()
                 + 2 * a.half_trace() * b.half_trace() * c.half_trace();
        }
        default:
            throw Error("BadArity", "connected_trace takes 1..3 rotors");
    }
}

double so3_angle(const Rotor& q) {
    return 2.0 * std::atan2(q.v.norm(), std::abs(q.w));
}

double so3_distance(const Rotor& p, const Rotor& q) {
    return so3_angle(p * q.conjugate());
}

double so3_distance(const Mat3& A, const Mat3& B) {
    Mat3 R = A * B.transpose();
    // go through the rotor to keep precision near the identity
    double t = R.trace();
    Rotor q;
    if (t > 0) {
        double r = std::sqrt(1 + t);
        q.w = 0.5 * r;
        q.v = Vec3(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1)) / (2 * r);
    } else {
        int i = 0;
        if (R(1, 1) > R(0, 0)) i = 1;
        if (R(2, 2) > R(i, i)) i = 2;
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double r = std::sqrt(1 + R(i, i) - R(j, j) - R(k, k));
        q.v[i] = 0.5 * r;
        q.w = (R(k, j) - R(j, k)) / (2 * r);
        q.v[j] = (R(j, i) + R(i, j)) / (2 * r);
        q.v[k] = (R(k, i) + R(i, k)) / (2 * r);
    }
    return so3_angle(q.normalized());
}

}  // namespace curvedtet
