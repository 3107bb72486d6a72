#include "curvedtet/reconstruction.hpp"

#include <cmath>
#include <numbers>

namespace curvedtet {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

int edge_slot(int i, int j) {
    // (0,1)(0,2)(0,3)(1,2)(1,3)(2,3) -> 0..5
    static constexpr int slot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return slot[i][j];
}
}  // namespace

bool CurvedTetrahedron::face_is_two_sheeted(int l) const {
    if (metric.s != -1) return false;
    int ref = 0;
    bool first = true;
    for (int m = 0; m < 4; ++m) {
        if (m == l) continue;
        if (first) { ref = sheets[m]; first = false; }
        else if (sheets[m] != ref) return true;
    }
    return false;
}

std::array<Vec4, 4> normals4(const GramMatrix& G, int s) {
    // realize n1, n2, n3 from the 3x3 sub-Gram in the canonical gauge
    double x1 = 1.0 - G(0, 2) * G(0, 2);
    if (x1 <= 1e-12) throw ReconstructionFailure("n1, n3 nearly parallel");
    Vec3 n3(0, 0, 1);
    Vec3 n1(std::sqrt(x1), 0, G(0, 2));
    double x2 = (G(0, 1) - G(0, 2) * G(1, 2)) / n1.x();
    double y2sq = 1.0 - x2 * x2 - G(1, 2) * G(1, 2);
    if (y2sq <= 1e-12) throw ReconstructionFailure("3x3 sub-Gram not realizable");
    Vec3 n2(x2, std::sqrt(y2sq), G(1, 2));  // +y makes (n1 x n2).n3 > 0

    double trip = n1.cross(n2).dot(n3);
    Vec3 N4s = (G(3, 0) * n2.cross(n3) + G(3, 1) * n3.cross(n1) + G(3, 2) * n1.cross(n2)) / trip;
    double N0sq = (1.0 - N4s.squaredNorm()) / s;
    if (N0sq <= 0) throw ReconstructionFailure("classification and N4 norm disagree");

    std::array<Vec4, 4> N;
    N[0] << 0, n1;
    N[1] << 0, n2;
    N[2] << 0, n3;

    // Check-and-select: the two N_4^0 candidates give the mirror pair of
    // tetrahedra; keep the one whose vertex 4 lands at the north pole, which
    // restores the input triple-product orientation at the base vertex.
    EmbeddingMetric g{s};
    double picked = 0;
    int npass = 0;
    for (double cand : {std::sqrt(N0sq), -std::sqrt(N0sq)}) {
        N[3] << cand, N4s;
        VertexSet vs;
        try {
            vs = vertices(N, s);
        } catch (const Error&) {
            continue;
        }
        Mat4 D;
        D.col(0) = vs.v[3];
        for (int c = 0; c < 3; ++c) D.col(c + 1) = N[c];
        if (D.determinant() > 0) {
            picked = cand;
            ++npass;
        }
    }
    if (npass != 1)
        throw ReconstructionFailure("N4 time-component selection not unique (" +
                                    std::to_string(npass) + " candidates)");
    N[3] << picked, N4s;

    Mat4 Nm, gm = g.g();
    for (int l = 0; l < 4; ++l) Nm.col(l) = N[l];
    if ((Nm.transpose() * gm * Nm - G.m).cwiseAbs().maxCoeff() > 1e-9)
        throw ReconstructionFailure("N^T g N does not reproduce Gram");
    return N;
}

VertexSet vertices(const std::array<Vec4, 4>& N, int s) {
    EmbeddingMetric g{s};
    Mat4 Nm;
    for (int l = 0; l < 4; ++l) Nm.col(l) = N[l];
    if (std::abs(Nm.determinant()) <= 1e-10)
        throw SingularNormalMatrix("det N = " + std::to_string(Nm.determinant()));
    Mat4 W = -g.g() * Nm.inverse().transpose();

    VertexSet out;
    for (int l = 0; l < 4; ++l) {
        Vec4 w = W.col(l);
        double q = g.dot(w, w);
        if (s == -1 && q >= 0)
            throw TimelikeViolation("vertex " + std::to_string(l) + " not timelike");
        Vec4 v = w / std::sqrt(std::abs(q));
        if (g.dot(N[l], v) > 0) v = -v;
        out.v[l] = v;
        out.sheets[l] = (s == -1 && v[0] < 0) ? -1 : 1;
    }
    return out;
}

std::array<EdgeLength, 6> edge_lengths(const std::array<Vec4, 4>& V, int s,
                                       const std::array<int, 4>& sheets) {
    EmbeddingMetric g{s};
    std::array<EdgeLength, 6> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            EdgeLength e{i, j, 0.0, EdgeKind::Regular};
            double c = g.dot(V[i], V[j]);
            if (s == 1) {
                e.length = std::acos(clamp1(c));
                if (e.length < 1e-9) throw CoincidentVertices("vertices " + std::to_string(i) + "," + std::to_string(j));
                if (kPi - e.length < 1e-9) e.kind = EdgeKind::BoundaryDegenerate;
            } else if (sheets[i] == sheets[j]) {
                e.length = std::acosh(std::max(1.0, -c));
                if (e.length < 1e-9) throw CoincidentVertices("vertices " + std::to_string(i) + "," + std::to_string(j));
            } else {
                // metric length is infinite; record the conjugate boost parameter
                e.kind = EdgeKind::Generalized;
                e.length = std::acosh(std::max(1.0, c));
            }
            out[edge_slot(i, j)] = e;
        }
    return out;
}

FaceData face_data(const GramMatrix& G, int s, const std::array<int, 4>& sheets) {
    // Vertex figure at vertex l: a spherical triangle whose angles are the
    // internal dihedral angles gamma along the edges at l and whose sides are
    // the face angles alpha. The dual law converts angles to sides on the
    // infinitesimal sphere regardless of the ambient curvature.
    FaceData fd{};
    std::array<std::array<double, 4>, 4> gamma{};  // [vertex][other-end]
    for (int l = 0; l < 4; ++l) {
        double sum = 0;
        for (int x = 0; x < 4; ++x) {
            if (x == l) continue;
            int y = -1, z = -1;
            for (int t = 0; t < 4; ++t)
                if (t != l && t != x) (y < 0 ? y : z) = t;
            gamma[l][x] = kPi - std::acos(clamp1(G(y, z)));
            sum += gamma[l][x];
        }
        if (sum <= kPi + 1e-9)
            throw VertexFigureDegenerate("dihedral angle sum at vertex " + std::to_string(l));
    }
    for (int l = 0; l < 4; ++l)
        for (int p = 0; p < 4; ++p) {
            if (p == l) continue;
            int m = -1, q = -1;
            for (int t = 0; t < 4; ++t)
                if (t != l && t != p) (m < 0 ? m : q) = t;
            double A = gamma[l][m], B = gamma[l][q], C = gamma[l][p];
            double cs = (std::cos(C) + std::cos(A) * std::cos(B)) / (std::sin(A) * std::sin(B));
            fd.face_angle[p][l] = std::acos(clamp1(cs));
        }

    for (int p = 0; p < 4; ++p) {
        double sum = 0;
        int ref_sheet = 0;
        bool mixed = false, first = true;
        for (int l = 0; l < 4; ++l) {
            if (l == p) continue;
            sum += fd.face_angle[p][l];
            if (first) { ref_sheet = sheets[l]; first = false; }
            else if (sheets[l] != ref_sheet) mixed = true;
        }
        if (s == 1)
            fd.area[p] = sum - kPi;
        else if (!mixed)
            fd.area[p] = kPi - sum;
        else
            fd.area[p] = 3.0 * kPi - sum;  // holonomy area of a two-sheeted face
    }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int p = -1, v = -1;  // p: a face containing edge (i,j); v: its third vertex
            for (int t = 0; t < 4; ++t)
                if (t != i && t != j) (p < 0 ? p : v) = t;
            double A = fd.face_angle[p][i], B = fd.face_angle[p][j], C = fd.face_angle[p][v];
            double rhs = (std::cos(C) + std::cos(A) * std::cos(B)) / (std::sin(A) * std::sin(B));
            EdgeLength e{i, j, 0.0, EdgeKind::Regular};
            if (s == 1) {
                e.length = std::acos(clamp1(rhs));
            } else if (sheets[i] == sheets[j]) {
                e.length = std::acosh(std::max(1.0, rhs));
            } else {
                e.kind = EdgeKind::Generalized;
                e.length = std::acosh(std::max(1.0, -rhs));
            }
            fd.edges[edge_slot(i, j)] = e;
        }
    return fd;
}

CurvedTetrahedron reconstruct(const ClosureConfig& cfg_in) {
    const bool relabel = cfg_in.special_edge == SpecialEdge::edge13;
    ClosureConfig cfg = to_edge24(cfg_in);

    SignedNormals sn = fix_signs(cfg);
    GramMatrix G = gram(sn);
    Classification cl = classify(G, sn);

    CurvedTetrahedron tet;
    tet.metric.s = cl.s;
    tet.radius = cfg.radius;
    tet.gram = G;
    tet.normals = normals4(G, cl.s);
    VertexSet vs = vertices(tet.normals, cl.s);
    tet.vertices = vs.v;
    tet.sheets = vs.sheets;
    tet.edges = edge_lengths(tet.vertices, cl.s, tet.sheets);

    FaceData fd = face_data(G, cl.s, tet.sheets);
    tet.face_angle = fd.face_angle;
    tet.areas = fd.area;
    tet.closure_areas = sn.area;

    tet.dihedral = Mat4::Zero();
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            if (l != m) tet.dihedral(l, m) = std::acos(clamp1(G(l, m)));

    // Theorem consistency: areas encoded by the holonomies must match the
    // reconstructed geometry. On H^3 the sign-fixed pair (a, n) reads the
    // geometric data as (2pi - a, -n).
    for (int l = 0; l < 4; ++l) {
        double a_geom = cl.s == 1 ? sn.area[l] : kTwoPi - sn.area[l];
        if (std::abs(a_geom - tet.areas[l]) > 1e-8)
            throw AreaMismatch("face " + std::to_string(l) + ": holonomy " +
                               std::to_string(a_geom) + " vs reconstructed " +
                               std::to_string(tet.areas[l]));
    }
    // Cosine-law cross-check of the two edge-length routes (for generalized
    // edges both routes report the conjugate boost parameter).
    for (int k = 0; k < 6; ++k) {
        if (std::abs(tet.edges[k].length - fd.edges[k].length) > 1e-8)
            throw ReconstructionFailure("edge-length routes disagree on edge " +
                                        std::to_string(k));
    }

    if (relabel) {
        // map results back to the caller's labels: sigma = (1<->2, 3<->4)
        static constexpr int sig[4] = {1, 0, 3, 2};
        CurvedTetrahedron r = tet;
        for (int l = 0; l < 4; ++l) {
            r.normals[l] = tet.normals[sig[l]];
            r.vertices[l] = tet.vertices[sig[l]];
            r.sheets[l] = tet.sheets[sig[l]];
            r.areas[l] = tet.areas[sig[l]];
            r.closure_areas[l] = tet.closure_areas[sig[l]];
            for (int m = 0; m < 4; ++m) {
                r.dihedral(l, m) = tet.dihedral(sig[l], sig[m]);
                r.gram.m(l, m) = tet.gram.m(sig[l], sig[m]);
                r.face_angle[l][m] = tet.face_angle[sig[l]][sig[m]];
            }
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                int si = std::min(sig[i], sig[j]), sj = std::max(sig[i], sig[j]);
                r.edges[edge_slot(i, j)] = tet.edges[edge_slot(si, sj)];
                r.edges[edge_slot(i, j)].i = i;
                r.edges[edge_slot(i, j)].j = j;
            }
        return r;
    }
    return tet;
}

}  // namespace curvedtet
