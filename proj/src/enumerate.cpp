#include "nst/enumerate.hpp"

#include "nst/cusp.hpp"
#include "nst/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nst {

ConeSpec qConeSpec(const Skeleton& skel, const MatchingSystem& qMatching) {
    ConeSpec spec;
    spec.dimension = 3 * skel.tri().size();
    spec.equalities = qMatching.rows;
    if (spec.equalities.cols() == 0)
        spec.equalities = IntMat::Zero(0, spec.dimension);
    for (int i = 0; i < skel.tri().size(); ++i)
        spec.triples.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    return spec;
}

ConeSpec q0ConeSpec(const Skeleton& skel, const MatchingSystem& qMatching) {
    ConeSpec spec = qConeSpec(skel, qMatching);
    std::vector<IntVec> nuRows;
    for (int v = 0; v < skel.countVertices(); ++v) {
        if (!isIdealVertex(skel, v)) continue;
        VertexLink link(skel, v);
        if (!link.isTorus())
            throw std::invalid_argument("Q0 cone requires torus links at all ideal vertices");
        for (const CuspCurve& c : boundaryBasis(link, qMatching))
            nuRows.push_back(boundaryFunctional(link, qMatching, c).raw);
    }
    IntMat eq(spec.equalities.rows() + static_cast<Eigen::Index>(nuRows.size()),
              spec.dimension);
    eq.topRows(spec.equalities.rows()) = spec.equalities;
    for (size_t i = 0; i < nuRows.size(); ++i)
        eq.row(spec.equalities.rows() + static_cast<Eigen::Index>(i)) = nuRows[i].transpose();
    spec.equalities = std::move(eq);
    return spec;
}

namespace {

std::vector<int> supportOf(const IntVec& v) {
    std::vector<int> s;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

bool lexLess(const IntVec& a, const IntVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// rank of [equalities; activeIneqs] restricted to the support columns
bool extremeCertified(const ConeSpec& spec, const IntVec& r) {
    std::vector<int> supp = supportOf(r);
    if (supp.empty()) return false;
    std::vector<IntVec> rows;
    for (Eigen::Index i = 0; i < spec.equalities.rows(); ++i)
        rows.push_back(spec.equalities.row(i).transpose());
    for (Eigen::Index i = 0; i < spec.inequalities.rows(); ++i) {
        Integer v = 0;
        for (Eigen::Index j = 0; j < r.size(); ++j) v += spec.inequalities(i, j) * r[j];
        if (v == 0) rows.push_back(spec.inequalities.row(i).transpose());
    }
    IntMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(supp.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < supp.size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][supp[j]];
    return rankOf(m) == static_cast<int>(supp.size()) - 1;
}

struct DDRay {
    IntVec v;
};

/// exact adjacency in the intermediate cone cut out by the constraints
/// processed so far: the minimal face containing both rays must be
/// 2-dimensional
bool adjacent(const std::vector<IntVec>& processedEq, const std::vector<IntVec>& processedIneq,
              const DDRay& a, const DDRay& b) {
    const Eigen::Index n = a.v.size();
    std::vector<IntVec> rows = processedEq;
    for (const IntVec& w : processedIneq) {
        Integer va = dotII(w, a.v), vb = dotII(w, b.v);
        if (va == 0 && vb == 0) rows.push_back(w);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a.v[i] == 0 && b.v[i] == 0) {
            IntVec e = IntVec::Zero(n);
            e[i] = 1;
            rows.push_back(e);
        }
    }
    IntMat m(static_cast<Eigen::Index>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    return rankOf(m) == static_cast<int>(n) - 2;
}

std::vector<DDRay> insertConstraint(const ConeSpec& spec,
                                    const std::vector<IntVec>& processedEq,
                                    const std::vector<IntVec>& processedIneq,
                                    std::vector<DDRay> rays, const IntVec& row,
                                    bool equality) {
    std::vector<DDRay> zero, plus, minus;
    std::vector<Integer> vals;
    for (DDRay& r : rays) {
        Integer v = dotII(row, r.v);
        if (v == 0)
            zero.push_back(std::move(r));
        else if (v > 0)
            plus.push_back(std::move(r));
        else
            minus.push_back(std::move(r));
    }
    std::vector<DDRay> out = std::move(zero);
    if (!equality)
        for (DDRay& r : plus) out.push_back(r);

    // candidate combinations; admissibility-violating intermediates are
    // discarded (a combined ray's support contains both parents', so such a
    // ray can never produce an admissible descendant)
    std::vector<DDRay> all;
    all.reserve(plus.size() + minus.size());
    for (const DDRay& r : plus) all.push_back(r);
    for (const DDRay& r : minus) all.push_back(r);

    for (const DDRay& p : plus)
        for (const DDRay& m : minus) {
            if (!adjacent(processedEq, processedIneq, p, m)) continue;
            Integer vp = dotII(row, p.v), vm = dotII(row, m.v);
            IntVec comb = IntVec::Zero(p.v.size());
            for (Eigen::Index i = 0; i < comb.size(); ++i)
                comb[i] = vp * m.v[i] - vm * p.v[i];
            comb = makePrimitive(comb);
            if (!spec.admissible(comb)) continue;
            out.push_back(DDRay{std::move(comb)});
        }

    // dedupe
    std::sort(out.begin(), out.end(), [](const DDRay& x, const DDRay& y) { return lexLess(x.v, y.v); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DDRay& x, const DDRay& y) { return x.v == y.v; }),
              out.end());
    return out;
}

} // namespace

std::vector<Ray> enumerateAdmissibleRays(const ConeSpec& spec) {
    const int n = spec.dimension;
    std::vector<DDRay> rays;
    for (int i = 0; i < n; ++i) {
        IntVec e = IntVec::Zero(n);
        e[i] = 1;
        rays.push_back(DDRay{std::move(e)});
    }
    std::vector<IntVec> processedEq, processedIneq;
    for (Eigen::Index r = 0; r < spec.equalities.rows(); ++r) {
        IntVec row = spec.equalities.row(r).transpose();
        rays = insertConstraint(spec, processedEq, processedIneq, std::move(rays), row, true);
        processedEq.push_back(row);
    }
    for (Eigen::Index r = 0; r < spec.inequalities.rows(); ++r) {
        IntVec row = spec.inequalities.row(r).transpose();
        rays = insertConstraint(spec, processedEq, processedIneq, std::move(rays), row, false);
        processedIneq.push_back(row);
    }

    std::vector<Ray> out;
    for (DDRay& r : rays) {
        if (!spec.admissible(r.v)) continue;
        if (!extremeCertified(spec, r.v)) continue;
        Ray ray;
        ray.support = supportOf(r.v);
        ray.vector = std::move(r.v);
        out.push_back(std::move(ray));
    }
    std::sort(out.begin(), out.end(),
              [](const Ray& a, const Ray& b) { return lexLess(a.vector, b.vector); });
    return out;
}

std::vector<Ray> bruteForceRays(const ConeSpec& spec, int dimensionGuard) {
    const int n = spec.dimension;
    if (n > dimensionGuard)
        throw std::invalid_argument("brute force ray enumeration is guarded to dimension " +
                                    std::to_string(dimensionGuard));
    std::vector<Ray> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> supp;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) supp.push_back(i);
        // solve equalities restricted to the support
        IntMat m(spec.equalities.rows(), static_cast<Eigen::Index>(supp.size()));
        for (Eigen::Index i = 0; i < spec.equalities.rows(); ++i)
            for (size_t j = 0; j < supp.size(); ++j)
                m(i, static_cast<Eigen::Index>(j)) = spec.equalities(i, supp[j]);
        std::vector<IntVec> kernel = kernelBasis(m);
        if (kernel.size() != 1) continue;
        const IntVec& k = kernel[0];
        bool allPos = true, allNeg = true, anyZero = false;
        for (Eigen::Index j = 0; j < k.size(); ++j) {
            if (k[j] == 0) anyZero = true;
            if (k[j] < 0) allPos = false;
            if (k[j] > 0) allNeg = false;
        }
        if (anyZero || (!allPos && !allNeg)) continue;
        IntVec full = IntVec::Zero(n);
        for (size_t j = 0; j < supp.size(); ++j)
            full[supp[j]] = allPos ? k[static_cast<Eigen::Index>(j)] : -k[static_cast<Eigen::Index>(j)];
        bool ok = spec.admissible(full);
        for (Eigen::Index i = 0; ok && i < spec.inequalities.rows(); ++i) {
            Integer v = 0;
            for (int j : supp) v += spec.inequalities(i, j) * full[j];
            if (v < 0) ok = false;
        }
        if (!ok) continue;
        if (!extremeCertified(spec, full)) continue;
        Ray ray;
        ray.vector = makePrimitive(full);
        ray.support = supp;
        out.push_back(std::move(ray));
    }
    std::sort(out.begin(), out.end(),
              [](const Ray& a, const Ray& b) { return lexLess(a.vector, b.vector); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace nst
