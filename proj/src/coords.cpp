#include "nst/coords.hpp"

namespace nst {

MatchingSystem buildQMatching(const Skeleton& skel) {
    const int t = skel.tri().size();
    std::vector<int> interior;
    for (int e = 0; e < skel.countEdges(); ++e)
        if (!skel.edge(e).boundary) interior.push_back(e);

    MatchingSystem sys;
    sys.rows = IntMat::Zero(static_cast<int>(interior.size()), 3 * t);
    for (int r = 0; r < static_cast<int>(interior.size()); ++r) {
        const EdgeClass& cls = skel.edge(interior[r]);
        for (auto [tet, e] : cls.incidences) {
            sys.rows(r, quadIndexQ(tet, kQuadSlope[e][0])) += 1;
            sys.rows(r, quadIndexQ(tet, kQuadSlope[e][1])) -= 1;
        }
        sys.provenance.push_back("edge:" + std::to_string(interior[r]));
    }
    return sys;
}

MatchingSystem buildStdMatching(const Skeleton& skel) {
    const Triangulation& tri = skel.tri();
    const int t = tri.size();
    MatchingSystem sys;
    std::vector<IntVec> rows;
    for (int i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& g = tri.gluing(i, f);
            if (!g) continue;
            // canonical side of the face pair
            if (g->tet < i || (g->tet == i && g->perm[f] < f)) continue;
            // one arc type per vertex v of the face: near side has the
            // triangle at v and the quad sharing that arc
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                IntVec row = IntVec::Zero(7 * t);
                row[triIndexStd(i, v)] += 1;
                row[quadIndexStd(i, quadTypeOfPair(v, f))] += 1;
                int i2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
                row[triIndexStd(i2, v2)] -= 1;
                row[quadIndexStd(i2, quadTypeOfPair(v2, f2))] -= 1;
                rows.push_back(row);
                sys.provenance.push_back("face:" + std::to_string(i) + "." + std::to_string(f) +
                                         ":arc" + std::to_string(v));
            }
        }
    }
    sys.rows = IntMat::Zero(static_cast<int>(rows.size()), 7 * t);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) sys.rows.row(r) = rows[r].transpose();
    return sys;
}

IntVec projectStdToQ(const IntVec& x) {
    if (x.size() % 7 != 0)
        throw std::invalid_argument("standard vector length must be 7t");
    const int t = static_cast<int>(x.size() / 7);
    IntVec q(3 * t);
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < 3; ++k) q[quadIndexQ(i, k)] = x[quadIndexStd(i, k)];
    return q;
}

namespace {

bool admissibleImpl(const IntVec& x, int stride, int quadOffset) {
    if (x.size() % stride != 0) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] < 0) return false;
    const int t = static_cast<int>(x.size() / stride);
    for (int i = 0; i < t; ++i) {
        int pos = 0;
        for (int k = 0; k < 3; ++k)
            if (x[stride * i + quadOffset + k] > 0) ++pos;
        if (pos > 1) return false;
    }
    return true;
}

} // namespace

bool isAdmissibleQ(const IntVec& x) { return admissibleImpl(x, 3, 0); }
bool isAdmissibleStd(const IntVec& x) { return admissibleImpl(x, 7, 4); }

RatVec eulerFunctional(const Skeleton& skel) {
    const Triangulation& tri = skel.tri();
    if (tri.ideal())
        throw std::invalid_argument("euler functional requires a compact triangulation");
    for (int v = 0; v < skel.countVertices(); ++v)
        if (isIdealVertex(skel, v))
            throw std::invalid_argument("euler functional requires a compact triangulation");

    const int t = tri.size();
    RatVec chi = RatVec::Zero(7 * t);

    auto arcWeight = [&](int tet, int f) -> Rational {
        return tri.isBoundaryFace(tet, f) ? Rational(1) : Rational(1, 2);
    };
    auto cornerWeight = [&](int tet, int a, int b) -> Rational {
        const EdgeClass& e = skel.edge(skel.edgeClassOf(tet, edgeIndexOf(a, b)));
        return Rational(1, e.degree);
    };

    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < 4; ++v) {  // triangle at corner v
            Rational c = 1;
            for (int f = 0; f < 4; ++f)
                if (f != v) c -= arcWeight(i, f);
            for (int w = 0; w < 4; ++w)
                if (w != v) c += cornerWeight(i, v, w);
            chi[triIndexStd(i, v)] = c;
        }
        for (int k = 0; k < 3; ++k) {  // quad type k
            Rational c = 1;
            for (int f = 0; f < 4; ++f) c -= arcWeight(i, f);
            for (int e = 0; e < 6; ++e) {
                if (e == k || e == 5 - k) continue;  // avoided edges
                c += cornerWeight(i, kEdgeVertices[e][0], kEdgeVertices[e][1]);
            }
            chi[quadIndexStd(i, k)] = c;
        }
    }
    return chi;
}

bool discTouchesBoundary(const Skeleton& skel, int tet, bool isQuad, int which,
                         int boundaryComp) {
    auto edgeOnComp = [&](int e) {
        int cls = skel.edgeClassOf(tet, e);
        return skel.edge(cls).boundary && skel.boundaryComponentOfEdge(cls) == boundaryComp;
    };
    if (isQuad) {
        for (int e = 0; e < 6; ++e) {
            if (e == which || e == 5 - which) continue;
            if (edgeOnComp(e)) return true;
        }
        return false;
    }
    for (int w = 0; w < 4; ++w) {
        if (w == which) continue;
        if (edgeOnComp(edgeIndexOf(which, w))) return true;
    }
    return false;
}

std::vector<int> discsTouchingBoundary(const Skeleton& skel, int boundaryComp) {
    std::vector<int> out;
    for (int i = 0; i < skel.tri().size(); ++i) {
        for (int v = 0; v < 4; ++v)
            if (discTouchesBoundary(skel, i, false, v, boundaryComp))
                out.push_back(triIndexStd(i, v));
        for (int k = 0; k < 3; ++k)
            if (discTouchesBoundary(skel, i, true, k, boundaryComp))
                out.push_back(quadIndexStd(i, k));
    }
    return out;
}

} // namespace nst
