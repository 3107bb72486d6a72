#include "curvedtet/closure.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace curvedtet {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mat3 minor3(const Mat4& G, int drop) {
    Mat3 M;
    int r = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == drop) continue;
        int c = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == drop) continue;
            M(r, c++) = G(i, j);
        }
        ++r;
    }
    return M;
}
}  // namespace

ClosureReport validate_closure(const std::array<Rotor, 4>& qs, double tol) {
    Rotor p = qs[3] * qs[2] * qs[1] * qs[0];
    double defect = 2.0 * std::asin(std::min(1.0, p.v.norm()));
    int center_sign = p.w >= 0 ? 1 : -1;
    if (defect > tol)
        throw ClosureViolated("closure defect " + std::to_string(defect));
    return {defect, center_sign};
}

SignedNormals fix_signs(const ClosureConfig& cfg_in) {
    ClosureConfig cfg = to_edge24(cfg_in);
    validate_closure(cfg.holonomies);

    std::array<AxisAngle, 4> base;
    std::array<Mat3, 4> O;
    for (int l = 0; l < 4; ++l) {
        base[l] = log_su2(cfg.holonomies[l]);  // throws DegenerateRotor
        O[l] = rotor_to_rotation(cfg.holonomies[l]);
    }
    const Mat3 O3inv = O[2].transpose();

    auto triples = [&](const std::array<Vec3, 4>& n) {
        return std::array<double, 4>{
            n[0].cross(n[1]).dot(n[2]),
            n[0].cross(n[2]).dot(n[3]),
            n[1].cross(n[0]).dot(O[0] * n[3]),
            n[2].cross(n[1]).dot(O3inv * n[3]),
        };
    };

    // The four triple-product magnitudes do not depend on the sign choice.
    {
        std::array<Vec3, 4> n{base[0].axis, base[1].axis, base[2].axis, base[3].axis};
        for (double t : triples(n))
            if (std::abs(t) <= 1e-9)
                throw DegenerateConfiguration("triple product magnitude below 1e-9");
    }

    std::optional<SignedNormals> found;
    int count = 0;
    for (int bits = 0; bits < 16; ++bits) {
        SignedNormals sn;
        std::array<Vec3, 4> n;
        for (int l = 0; l < 4; ++l) {
            bool flip = (bits >> l) & 1;
            sn.area[l] = flip ? kTwoPi - base[l].angle : base[l].angle;
            n[l] = flip ? Vec3(-base[l].axis) : base[l].axis;
        }
        auto t = triples(n);
        if (t[0] > 0 && t[1] > 0 && t[2] > 0 && t[3] > 0) {
            sn.normal = n;
            for (int l = 0; l < 4; ++l) {
                sn.sign[l] = std::sin(sn.area[l]) >= 0 ? 1 : -1;
                sn.rotation[l] = O[l];
            }
            found = sn;
            ++count;
        }
    }
    if (count == 0) throw NoValidSigns("no all-positive triple assignment");
    if (count > 1) throw MultipleValidSigns(std::to_string(count) + " assignments pass");
    return *found;
}

GramMatrix gram(const SignedNormals& sn) {
    Mat4 G = Mat4::Identity();
    for (int l = 0; l < 4; ++l)
        for (int m = l + 1; m < 4; ++m) {
            double c;
            if ((l == 1 && m == 3)) {
                double c1 = sn.normal[1].dot(sn.rotation[0] * sn.normal[3]);
                double c2 = sn.normal[1].dot(sn.rotation[2].transpose() * sn.normal[3]);
                if (std::abs(c1 - c2) > 1e-9)
                    throw InconsistentDihedral("theta24 routes differ by " +
                                               std::to_string(std::abs(c1 - c2)));
                c = 0.5 * (c1 + c2);
            } else {
                c = sn.normal[l].dot(sn.normal[m]);
            }
            G(l, m) = G(m, l) = c;
        }

    // Lemma-1 gate: all 1x1, 2x2, 3x3 principal minors strictly positive.
    for (int l = 0; l < 4; ++l)
        for (int m = l + 1; m < 4; ++m)
            if (1.0 - G(l, m) * G(l, m) <= 1e-12)
                throw InvalidGram("2x2 principal minor not positive");
    for (int drop = 0; drop < 4; ++drop)
        if (minor3(G, drop).determinant() <= 1e-12)
            throw InvalidGram("3x3 principal minor not positive");
    return {G};
}

std::array<double, 4> principal_minors3(const GramMatrix& G) {
    std::array<double, 4> m;  // m_l = det of Gram with row/column l removed
    for (int l = 0; l < 4; ++l) m[l] = minor3(G.m, l).determinant();
    return m;
}

Classification classify(const GramMatrix& G, const SignedNormals& sn, double eps) {
    double det = G.m.determinant();
    const Vec3 &n1 = sn.normal[0], &n2 = sn.normal[1], &n3 = sn.normal[2];
    double trip = n1.cross(n2).dot(n3);
    Vec3 N4 = (G(3, 0) * n2.cross(n3) + G(3, 1) * n3.cross(n1) + G(3, 2) * n1.cross(n2)) / trip;
    double crit = 1.0 - N4.squaredNorm();
    if (std::abs(det) <= eps)
        throw Degenerate("det Gram = " + std::to_string(det));
    if (det * crit <= 0 && std::abs(crit) > eps)
        throw SignMismatch("det Gram and N4 criterion disagree");
    CurvatureClass cls = det > 0 ? CurvatureClass::Spherical : CurvatureClass::Hyperbolic;
    return {cls, det > 0 ? 1 : -1, det, N4, crit};
}

ClosureConfig to_edge24(const ClosureConfig& cfg) {
    if (cfg.special_edge == SpecialEdge::edge24) return cfg;
    // (1<->2, 3<->4): an edge13 configuration is the edge24 configuration of
    // the relabeled tetrahedron; outputs must be relabeled back by the caller.
    ClosureConfig out = cfg;
    out.special_edge = SpecialEdge::edge24;
    out.holonomies = {cfg.holonomies[1], cfg.holonomies[0],
                      cfg.holonomies[3], cfg.holonomies[2]};
    return out;
}

}  // namespace curvedtet
