#include "nst/builder.hpp"

#include <stdexcept>
#include <vector>

namespace nst {

Triangulation ComplexBuilder::build(bool ideal, std::vector<Perm4>* relabelOut) const {
    const int n = size();
    // Decide which tetrahedra to flip (swap vertices 2,3) so that every
    // gluing permutation becomes odd.  flip_a XOR flip_b must equal 1
    // exactly when the recorded permutation is even.
    std::vector<int> flip(n, -1);
    for (int start = 0; start < n; ++start) {
        if (flip[start] >= 0) continue;
        flip[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const FaceSlot& g = glue_[i][f];
                if (!g) continue;
                int want = flip[i] ^ (g->perm.isOdd() ? 0 : 1);
                if (flip[g->tet] < 0) {
                    flip[g->tet] = want;
                    stack.push_back(g->tet);
                } else if (flip[g->tet] != want) {
                    throw TriangulationError("complex is not orientable");
                }
            }
        }
    }

    const Perm4 swap23 = Perm4::transposition(2, 3);
    std::vector<Perm4> rho(n);
    for (int i = 0; i < n; ++i)
        if (flip[i]) rho[i] = swap23;

    std::vector<std::array<FaceSlot, 4>> out(n);
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& g = glue_[i][f];
            if (!g) continue;
            Perm4 p = rho[g->tet].after(g->perm).after(rho[i].inverse());
            out[i][rho[i][f]] = Gluing{g->tet, p};
        }
    if (relabelOut) *relabelOut = rho;
    return Triangulation(std::move(out), ideal);
}

} // namespace nst
