#include "nst/surface.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nst {

namespace {

constexpr long kDiscLimit = 2'000'000;

int asInt(const Integer& v, const char* what) {
    if (v < 0 || v > kDiscLimit)
        throw std::invalid_argument(std::string("surface coordinate out of range for ") + what);
    return static_cast<int>(v);
}

/// does quad type k have its arc in face f cutting corner v?
bool quadArcCutsCorner(int k, int f, int v) { return quadTypeOfPair(v, f) == k; }

/// corner v is on the canonical (level-0) end of quad type k's stack
bool ascendingFrom(int k, int v) { return v == kEdgeVertices[k][0] || v == kEdgeVertices[k][1]; }

} // namespace

NormalSurface::NormalSurface(const Skeleton& skel, IntVec stdCoords)
    : skel_(&skel), std_(std::move(stdCoords)) {
    if (std_.size() != 7 * skel.tri().size())
        throw std::invalid_argument("standard vector length must be 7t");
    if (!isAdmissibleStd(std_))
        throw std::invalid_argument("surface coordinates are not admissible");
    buildDiscs();
    buildArcs();
    buildSides();
}

void NormalSurface::buildDiscs() {
    const int t = skel_->tri().size();
    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < 4; ++v) {
            int n = asInt(std_[triIndexStd(i, v)], "triangle");
            for (int l = 0; l < n; ++l) discs_.push_back({i, false, v, l});
        }
        for (int k = 0; k < 3; ++k) {
            int n = asInt(std_[quadIndexStd(i, k)], "quad");
            for (int l = 0; l < n; ++l) discs_.push_back({i, true, k, l});
        }
    }
    if (static_cast<long>(discs_.size()) > kDiscLimit)
        throw std::invalid_argument("surface has too many discs to realise explicitly");
}

int NormalSurface::discIndex(int tet, bool quad, int which, int level) const {
    int lo = 0, hi = static_cast<int>(discs_.size());
    auto key = [&](const DiscInstance& d) {
        return std::tuple<int, int, int, int>(d.tet, d.quad ? 1 : 0, d.which, d.level);
    };
    std::tuple<int, int, int, int> target(tet, quad ? 1 : 0, which, level);
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (key(discs_[mid]) < target)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo >= static_cast<int>(discs_.size()) || key(discs_[lo]) != target)
        throw std::logic_error("disc instance not found");
    return lo;
}

void NormalSurface::buildArcs() {
    const Triangulation& tri = skel_->tri();
    const int t = tri.size();
    arcOf_.assign(4 * discs_.size(), -1);

    auto triCount = [&](int i, int v) { return static_cast<int>(std_[triIndexStd(i, v)]); };
    auto quadInfo = [&](int i) -> std::pair<int, int> {  // (type, count); type -1 if none
        for (int k = 0; k < 3; ++k)
            if (std_[quadIndexStd(i, k)] > 0)
                return {k, static_cast<int>(std_[quadIndexStd(i, k)])};
        return {-1, 0};
    };

    // arcs of type (face f, corner v) in tet i, ordered by distance from v
    auto stack = [&](int i, int f, int v) {
        std::vector<int> out;
        int tv = triCount(i, v);
        for (int l = 0; l < tv; ++l) out.push_back(discIndex(i, false, v, l));
        auto [k, q] = quadInfo(i);
        if (k >= 0 && quadArcCutsCorner(k, f, v)) {
            for (int r = 0; r < q; ++r) {
                int level = ascendingFrom(k, v) ? r : q - 1 - r;
                out.push_back(discIndex(i, true, k, level));
            }
        }
        return out;
    };

    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& g = tri.gluing(i, f);
            bool canonical = !g || (g->tet > i) || (g->tet == i && g->perm[f] > f);
            if (!canonical) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                std::vector<int> near = stack(i, f, v);
                if (!g) {
                    for (int d : near) {
                        int id = static_cast<int>(arcs_.size());
                        arcs_.push_back(Arc{d, f, -1, -1});
                        arcOf_[4 * d + f] = id;
                        closed_ = false;
                    }
                    continue;
                }
                std::vector<int> far = stack(g->tet, g->perm[f], g->perm[v]);
                if (near.size() != far.size())
                    throw std::invalid_argument(
                        "coordinates violate the standard matching equations");
                for (size_t s = 0; s < near.size(); ++s) {
                    int id = static_cast<int>(arcs_.size());
                    arcs_.push_back(Arc{near[s], f, far[s], g->perm[f]});
                    arcOf_[4 * near[s] + f] = id;
                    arcOf_[4 * far[s] + g->perm[f]] = id;
                }
            }
        }

    // intersection points with the edges
    edgePoints_.assign(skel_->countEdges(), 0);
    std::vector<int> seen(skel_->countEdges(), 0);
    for (int i = 0; i < t; ++i)
        for (int e = 0; e < 6; ++e) {
            int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
            auto [k, q] = quadInfo(i);
            int crossing = triCount(i, a) + triCount(i, b);
            if (k >= 0 && k != e && 5 - k != e) crossing += q;
            int cls = skel_->edgeClassOf(i, e);
            if (!seen[cls]) {
                seen[cls] = 1;
                edgePoints_[cls] = crossing;
            } else if (edgePoints_[cls] != crossing) {
                throw std::invalid_argument(
                    "coordinates do not describe a consistent surface (edge weights)");
            }
        }

    // connected components over glued arcs
    compOf_.assign(discs_.size(), -1);
    nComponents_ = 0;
    for (size_t start = 0; start < discs_.size(); ++start) {
        if (compOf_[start] >= 0) continue;
        int comp = nComponents_++;
        std::vector<int> stk{static_cast<int>(start)};
        compOf_[start] = comp;
        while (!stk.empty()) {
            int d = stk.back();
            stk.pop_back();
            for (int f = 0; f < 4; ++f) {
                int a = arcOf_[4 * d + f];
                if (a < 0) continue;
                const Arc& arc = arcs_[a];
                if (arc.boundary()) continue;
                int other = (arc.disc0 == d && arc.face0 == f) ? arc.disc1 : arc.disc0;
                if (compOf_[other] < 0) {
                    compOf_[other] = comp;
                    stk.push_back(other);
                }
            }
        }
    }
}

void NormalSurface::buildSides() {
    // Side 0 of a triangle faces its vertex; side 0 of a quad faces its
    // lower avoided edge.  Across a glued arc the transverse orientation is
    // continuous, so the sides facing the cut corner must correspond.
    auto faceVside = [&](int d, int v) -> int {
        const DiscInstance& di = discs_[d];
        if (!di.quad) return 0;
        return ascendingFrom(di.which, v) ? 0 : 1;
    };
    sideBit_.assign(discs_.size(), -1);
    twoSided_ = true;
    const Triangulation& tri = skel_->tri();
    for (size_t start = 0; start < discs_.size(); ++start) {
        if (sideBit_[start] >= 0) continue;
        sideBit_[start] = 0;
        std::vector<int> stk{static_cast<int>(start)};
        while (!stk.empty()) {
            int d = stk.back();
            stk.pop_back();
            const DiscInstance& di = discs_[d];
            for (int f = 0; f < 4; ++f) {
                int a = arcOf_[4 * d + f];
                if (a < 0) continue;
                const Arc& arc = arcs_[a];
                if (arc.boundary()) continue;
                bool isFirst = (arc.disc0 == d && arc.face0 == f);
                int other = isFirst ? arc.disc1 : arc.disc0;
                int v = di.quad ? -1 : di.which;
                if (di.quad)
                    for (int w = 0; w < 4; ++w)
                        if (w != f && quadArcCutsCorner(di.which, f, w)) v = w;
                const FaceSlot& g = tri.gluing(di.tet, f);
                int v2 = g->perm[v];
                int want = sideBit_[d] ^ faceVside(d, v) ^ faceVside(other, v2);
                if (sideBit_[other] < 0) {
                    sideBit_[other] = want;
                    stk.push_back(other);
                } else if (sideBit_[other] != want) {
                    twoSided_ = false;
                }
            }
        }
    }
}

bool NormalSurface::connected() const { return nComponents_ <= 1; }

std::vector<NormalSurface> NormalSurface::components() const {
    std::vector<NormalSurface> out;
    for (int c = 0; c < nComponents_; ++c) {
        IntVec x = IntVec::Zero(std_.size());
        for (size_t d = 0; d < discs_.size(); ++d) {
            if (compOf_[d] != c) continue;
            const DiscInstance& di = discs_[d];
            int idx = di.quad ? quadIndexStd(di.tet, di.which) : triIndexStd(di.tet, di.which);
            x[idx] += 1;
        }
        out.emplace_back(*skel_, std::move(x));
    }
    return out;
}

Integer NormalSurface::weight() const {
    Integer w = 0;
    for (int e = 0; e < skel_->countEdges(); ++e) w += edgePoints_[e];
    return w;
}

Integer NormalSurface::chi() const {
    Integer v = 0;
    for (int e = 0; e < skel_->countEdges(); ++e) v += edgePoints_[e];
    return v - Integer(arcs_.size()) + Integer(discs_.size());
}

bool isVertexLinkVector(const Skeleton& skel, const IntVec& stdCoords) {
    const int t = skel.tri().size();
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < 3; ++k)
            if (stdCoords[quadIndexStd(i, k)] != 0) return false;
    for (int vc = 0; vc < skel.countVertices(); ++vc) {
        const auto& corners = skel.vertex(vc).corners;
        Integer c = stdCoords[triIndexStd(corners[0].first, corners[0].second)];
        for (const auto& [tet, v] : corners)
            if (stdCoords[triIndexStd(tet, v)] != c) return false;
    }
    return true;
}

SurfaceClass classify(const NormalSurface& s) {
    SurfaceClass out;
    if (s.empty()) {
        out.closed = true;
        out.connected = true;
        out.orientable = true;
        out.chi = 0;
        out.genus = 0;
        out.components = 0;
        return out;
    }
    out.closed = s.closed();
    out.connected = s.connected();
    int maxComp = -1;
    for (int d = 0; d < s.countDiscs(); ++d) maxComp = std::max(maxComp, s.componentOf(d));
    out.components = maxComp + 1;
    out.orientable = s.twoSided();  // two-sided iff orientable: ambient is oriented
    out.chi = s.chi();
    out.weight = s.weight();
    out.isVertexLink = isVertexLinkVector(s.skeleton(), s.std());
    if (out.closed && out.connected)
        out.genus = out.orientable ? (2 - out.chi) / 2 : 2 - out.chi;
    return out;
}

ReconstructResult reconstructFromQ(const Skeleton& skel, const MatchingSystem& qMatching,
                                   const IntVec& x) {
    const Triangulation& tri = skel.tri();
    const int t = tri.size();
    if (x.size() != 3 * t) throw std::invalid_argument("quad vector length must be 3t");
    if (!isAdmissibleQ(x)) throw std::invalid_argument("quad vector is not admissible");
    for (Eigen::Index r = 0; r < qMatching.rows.rows(); ++r) {
        Integer v = 0;
        for (Eigen::Index j = 0; j < x.size(); ++j) v += qMatching.rows(r, j) * x[j];
        if (v != 0)
            throw std::invalid_argument("quad vector violates the Q-matching equations");
    }

    SpunReport report;
    report.quadCoords = x;
    for (int vc = 0; vc < skel.countVertices(); ++vc) {
        if (!isIdealVertex(skel, vc)) continue;
        VertexLink link(skel, vc);
        if (!link.isTorus())
            throw std::invalid_argument("reconstruction supports torus cusps only");
        std::vector<CuspCurve> basis = boundaryBasis(link, qMatching);
        Integer n0 = boundaryFunctional(link, qMatching, basis[0]).evaluate(x);
        Integer n1 = boundaryFunctional(link, qMatching, basis[1]).evaluate(x);
        if (n0 != 0 || n1 != 0) report.cusps.push_back({vc, n0, n1});
    }
    if (!report.cusps.empty()) return report;

    // minimal nonnegative triangle coordinates by breadth-first offset
    // propagation across face gluings, one vertex class at a time
    std::vector<Integer> offset(4 * t);
    std::vector<int> state(4 * t, 0);
    for (int i0 = 0; i0 < t; ++i0)
        for (int v0 = 0; v0 < 4; ++v0) {
            if (state[4 * i0 + v0]) continue;
            std::vector<std::pair<int, int>> queue{{i0, v0}};
            state[4 * i0 + v0] = 1;
            offset[4 * i0 + v0] = 0;
            Integer lo = 0;
            std::vector<int> members{4 * i0 + v0};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                auto [i, v] = queue[qi];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const FaceSlot& g = tri.gluing(i, f);
                    if (!g) continue;
                    int i2 = g->tet, v2 = g->perm[v], f2 = g->perm[f];
                    Integer q1 = x[quadIndexQ(i, quadTypeOfPair(v, f))];
                    Integer q2 = x[quadIndexQ(i2, quadTypeOfPair(v2, f2))];
                    Integer val = offset[4 * i + v] + q1 - q2;
                    if (!state[4 * i2 + v2]) {
                        state[4 * i2 + v2] = 1;
                        offset[4 * i2 + v2] = val;
                        lo = std::min(lo, val);
                        members.push_back(4 * i2 + v2);
                        queue.emplace_back(i2, v2);
                    } else if (offset[4 * i2 + v2] != val) {
                        throw std::logic_error(
                            "triangle offset propagation inconsistency (internal error)");
                    }
                }
            }
            for (int m : members) offset[m] -= lo;
        }

    IntVec stdv = IntVec::Zero(7 * t);
    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < 4; ++v) stdv[triIndexStd(i, v)] = offset[4 * i + v];
        for (int k = 0; k < 3; ++k) stdv[quadIndexStd(i, k)] = x[quadIndexQ(i, k)];
    }
    return NormalSurface(skel, std::move(stdv));
}

RaySurface realizeRaySurface(const Skeleton& skel, const MatchingSystem& qMatching,
                             const IntVec& primitiveRay) {
    ReconstructResult res = reconstructFromQ(skel, qMatching, primitiveRay);
    if (std::holds_alternative<SpunReport>(res))
        throw std::invalid_argument("ray surface is spun; expected a closed-surface ray");
    NormalSurface s = std::get<NormalSurface>(std::move(res));
    if (s.twoSided()) return RaySurface{std::move(s), false};
    IntVec doubled = primitiveRay * Integer(2);
    ReconstructResult res2 = reconstructFromQ(skel, qMatching, doubled);
    NormalSurface s2 = std::get<NormalSurface>(std::move(res2));
    if (!s2.twoSided())
        throw std::logic_error("doubled one-sided surface is not two-sided (internal error)");
    return RaySurface{std::move(s2), true};
}

SlopeResult boundarySlope(const SpunReport& report, const VertexLink& link,
                          const MatchingSystem& qMatching, const CuspCurve& mu,
                          const CuspCurve& lambda) {
    Integer numu = boundaryFunctional(link, qMatching, mu).evaluate(report.quadCoords);
    Integer nula = boundaryFunctional(link, qMatching, lambda).evaluate(report.quadCoords);
    if (numu == 0 && nula == 0)
        throw std::invalid_argument("surface is not spun at this cusp (nu = 0)");
    SlopeResult out;
    if (numu == 0) {
        out.infinite = true;
        return out;
    }
    out.value = -Rational(nula) / Rational(numu);
    return out;
}

} // namespace nst
