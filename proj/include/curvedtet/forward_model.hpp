#pragma once

#include "curvedtet/reconstruction.hpp"

namespace curvedtet {

/// Parallel transport between vertex tangent spaces, restricted to a 4x4
/// linear map. Cross-sheet transports continue the geodesic through infinity.
struct TangentTransport {
    int from, to;
    Mat4 map;
    bool cross_sheet = false;

    Vec4 operator()(const Vec4& x) const { return map * x; }
};

/// Closed-form transport along the geodesic from V_from to V_to. Fixes the
/// g-orthogonal complement of span{V_from, V_to}. For cross-sheet pairs the
/// velocity continues through infinity and the interior-pointing co-normal
/// is preserved.
TangentTransport transport_along_geodesic(const Vec4& v_from, const Vec4& v_to, int s,
                                          bool cross_sheet = false);

/// exp(+a n.J) on S^3 and exp(-a n.J) on H^3, written in an orthonormal
/// tangent frame at `base`; n is the outward face normal there and a the
/// (holonomy) area. Throws NotIncident if the base vertex is on face l.
Mat3 face_holonomy(const CurvedTetrahedron& tet, int l, int base);

/// Orthonormal tangent frame at vertex `base`, g-Gram-Schmidt of the edge
/// directions toward the other vertices in index order.
std::array<Vec4, 3> tangent_frame(const CurvedTetrahedron& tet, int base);

/// The four face holonomies at vertex 4 composed from edge transports along
/// the simple paths  O1 = o43 o32 o24,  O2 = o41 o13 o34,  O3 = o42 o21 o14,
/// O4 = o42 [o23 o31 o12] o24.
std::array<Mat3, 4> simple_path_holonomies(const CurvedTetrahedron& tet);

struct Alignment {
    Mat3 rotation;
    double residual;
};

/// Rotation mapping n3_a -> n3_b and n1_a -> n1_b; the residual is the worst
/// mismatch on n2 and n4. Throws Misaligned above 1e-6.
Alignment align_by_conjugation(const std::array<Vec3, 4>& a, const std::array<Vec3, 4>& b,
                               double tol = 1e-6);

struct RoundtripReport {
    double max_angle_error;
    double max_area_error;
    bool aligned;
    CurvatureClass cls;
    bool two_sheeted;
};

/// reconstruct, re-derive the simple-path holonomies, align by conjugation,
/// and report the worst SO(3) angle and area discrepancies with the input.
RoundtripReport roundtrip_check(const ClosureConfig& cfg);

/// Forward construction: simple-path holonomy lifts of an embedded
/// tetrahedron with the given vertices (columns g-normalized, positively
/// oriented), for use as generator and test oracle.
ClosureConfig closure_from_vertices(const std::array<Vec4, 4>& V, int s, double radius = 1.0);

}  // namespace curvedtet
