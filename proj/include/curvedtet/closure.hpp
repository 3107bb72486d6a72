#pragma once

#include <array>

#include "curvedtet/rotor.hpp"

namespace curvedtet {

enum class SpecialEdge { edge24, edge13 };

/// Four SU(2) holonomy lifts with product +-identity (PSU(2) closure).
/// With curvature radius r the rotor for a face of geometric area a is
/// exp((a/r^2) n.tau); the pipeline itself works on the unit model.
struct ClosureConfig {
    std::array<Rotor, 4> holonomies;
    SpecialEdge special_edge = SpecialEdge::edge24;
    double radius = 1.0;
};

struct ClosureReport {
    double defect;    // SO(3) rotation angle of the product
    int center_sign;  // product ~ center_sign * identity in SU(2)
};

/// Face data after the convexity sign fix: area-angles a_l in (0,2pi),
/// unit normals in the vertex-4 frame, the resolved sign flags, and the
/// SO(3) holonomies themselves.
struct SignedNormals {
    std::array<double, 4> area;
    std::array<Vec3, 4> normal;
    std::array<int, 4> sign;  // sgn sin(a_l)
    std::array<Mat3, 4> rotation;
};

struct GramMatrix {
    Mat4 m;
    double operator()(int i, int j) const { return m(i, j); }
};

enum class CurvatureClass { Spherical, Hyperbolic };

struct Classification {
    CurvatureClass cls;
    int s;               // +1 spherical, -1 hyperbolic
    double det;          // det Gram
    Vec3 n4_spatial;     // N_4 spatial part from the explicit formula
    double n4_criterion; // 1 - |N_4|^2, must agree in sign with det
};

/// Rotation defect of H4 H3 H2 H1 against the center of SU(2).
/// Throws ClosureViolated when the defect exceeds tol.
ClosureReport validate_closure(const std::array<Rotor, 4>& qs, double tol = 1e-10);

/// The unique assignment {(a_l, n_l) <-> (2pi - a_l, -n_l)} making all four
/// transported triple products strictly positive.
SignedNormals fix_signs(const ClosureConfig& cfg);

/// Gram_{lm} = cos(theta_{lm}); the (2,4) entry is evaluated through both
/// O_1 and O_3^-1 and must agree to 1e-9. Lemma-1 minors are enforced.
GramMatrix gram(const SignedNormals& sn);

/// Curvature sign from det Gram, cross-checked against the sign of
/// 1 - |N_4|^2. Throws Degenerate within eps of zero, SignMismatch on
/// disagreement.
Classification classify(const GramMatrix& G, const SignedNormals& sn, double eps = 1e-9);

/// Relabels an edge13 configuration into the equivalent edge24 problem by
/// the index swap (1<->2, 3<->4). Identity for edge24 configurations.
ClosureConfig to_edge24(const ClosureConfig& cfg);

/// m_l > 0 for all l: the executable form of the principal-minor lemma.
std::array<double, 4> principal_minors3(const GramMatrix& G);

}  // namespace curvedtet
