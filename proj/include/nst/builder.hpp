#pragma once

// Assembles triangulations from raw gluing data whose permutations may have
// either parity, relabelling tetrahedra so that the result is coherently
// oriented (all gluing permutations odd).

#include "nst/triangulation.hpp"

#include <vector>

namespace nst {

class ComplexBuilder {
public:
    /// Add an empty tetrahedron; returns its index.
    int addTet() {
        glue_.push_back({});
        return static_cast<int>(glue_.size()) - 1;
    }

    /// Glue face fa of tet a to face (p[fa]) of tet b via vertex map p.
    /// Records the inverse gluing as well.  p may be even.
    void glue(int a, int fa, int b, const Perm4& p) {
        glue_[a][fa] = Gluing{b, p};
        glue_[b][p[fa]] = Gluing{a, p.inverse()};
    }

    bool isGlued(int a, int fa) const { return glue_[a][fa].has_value(); }
    int size() const { return static_cast<int>(glue_.size()); }

    /// Build the oriented triangulation.  Tetrahedra whose labelling was
    /// flipped are recorded in `flipped` (vertices 2 and 3 swapped); face f
    /// of an original tet is face relabel(tet)[f] of the result.
    Triangulation build(bool ideal, std::vector<Perm4>* relabelOut = nullptr) const;

private:
    std::vector<std::array<FaceSlot, 4>> glue_;
};

} // namespace nst
