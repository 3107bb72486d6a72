#pragma once

#include <array>

#include "curvedtet/closure.hpp"

namespace curvedtet {

/// Embedding metric g = diag(s, 1, 1, 1); s = +1 on S^3, -1 on H^3.
struct EmbeddingMetric {
    int s = 1;
    Mat4 g() const {
        Mat4 m = Mat4::Identity();
        m(0, 0) = s;
        return m;
    }
    double dot(const Vec4& x, const Vec4& y) const {
        return s * x[0] * y[0] + x.tail<3>().dot(y.tail<3>());
    }
};

enum class EdgeKind {
    Regular,
    Generalized,         // cross-sheet, infinite metric length
    BoundaryDegenerate,  // spherical antipodal pair (d = pi)
};

struct EdgeLength {
    int i, j;         // vertex indices, i < j
    double length;    // arc length; for Generalized the conjugate boost parameter
    EdgeKind kind = EdgeKind::Regular;
};

/// Fully embedded constant-curvature tetrahedron in the unit model.
struct CurvedTetrahedron {
    EmbeddingMetric metric;
    std::array<Vec4, 4> normals;    // unit g-norm 4-normals N_l
    std::array<Vec4, 4> vertices;   // g(V,V) = s
    std::array<int, 4> sheets;      // +-1, hyperbolic only (sign of V^0)
    std::array<EdgeLength, 6> edges;
    Mat4 dihedral;                  // external angles, theta_ll = 0
    std::array<std::array<double, 4>, 4> face_angle;  // [face][vertex], 0 on diagonal slots
    std::array<double, 4> areas;          // excess/deficit/holonomy areas, in (0,2pi)
    std::array<double, 4> closure_areas;  // area-angles of the sign-fixed rotors
    GramMatrix gram;
    double radius = 1.0;

    bool two_sheeted() const {
        for (int l = 1; l < 4; ++l)
            if (sheets[l] != sheets[0]) return true;
        return false;
    }
    bool face_is_two_sheeted(int l) const;
};

/// N_1..N_3 = (0, n_l) realizing the 3x3 sub-Gram in the canonical gauge
/// (n3 along z, n1 in the xz-plane with positive x); N_4 completed from the
/// explicit cofactor formula, its time component fixed by the
/// check-and-select rule on the reconstructed vertices.
std::array<Vec4, 4> normals4(const GramMatrix& G, int s);

struct VertexSet {
    std::array<Vec4, 4> v;
    std::array<int, 4> sheets;
};

/// Vertex vectors from W = -g (N^-1)^T, normalized and sign-fixed so that
/// g(N_l, V_l) < 0 (vertex l on the interior side of its opposite face).
VertexSet vertices(const std::array<Vec4, 4>& N, int s);

std::array<EdgeLength, 6> edge_lengths(const std::array<Vec4, 4>& V, int s,
                                       const std::array<int, 4>& sheets);

struct FaceData {
    std::array<std::array<double, 4>, 4> face_angle;  // [face][vertex]
    std::array<double, 4> area;
    std::array<EdgeLength, 6> edges;  // from the dual cosine law
};

/// Vertex-figure route: internal dihedral angles -> face angles by the dual
/// spherical law, then areas by excess/deficit/two-sheet formulas and edge
/// lengths by the dual law of the ambient curvature.
FaceData face_data(const GramMatrix& G, int s, const std::array<int, 4>& sheets);

/// Full pipeline fix_signs -> gram -> classify -> normals4 -> vertices ->
/// edge_lengths -> face_data, with the area consistency gate.
CurvedTetrahedron reconstruct(const ClosureConfig& cfg);

}  // namespace curvedtet
