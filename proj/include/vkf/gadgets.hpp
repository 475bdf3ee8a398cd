#pragma once

#include "vkf/cnf.hpp"
#include "vkf/simplicial_complex.hpp"

namespace vkf {

struct GadgetParams {
    int k = 2;   // complex dimension, >= 2
    int ell = 1; // 0 <= ell < k

    int ambient_dim() const { return k + ell + 1; }
    void validate(bool theorem_regime = false) const;
};

// The auxiliary complex F: complete k-skeleton on k+ell+3 numbered vertices
// plus an apex vertex p carried by all faces of dimension <= ell+1 through it.
// Marks: "sigma_1..3" (closed (ell+1)-simplices through p), "S_1..3"
// (complementary k-spheres), "p".
SimplicialComplex build_F(const GadgetParams& params);

// F with the open simplices sigma_1..sigma_width removed.  In the result the
// marks "sigma_j" hold the boundary spheres (the ell-faces of sigma_j) for
// every j in [3]; "S_1..3" and "p" are kept.
SimplicialComplex build_gadget(const GadgetParams& params, int width);

// Staircase triangulation of the product of two copies of the boundary of an
// (ell+1)-simplex.  Marks: meridian "a", parallel "b" (both simplicially
// isomorphic to that boundary, meeting in the single base vertex), "base".
SimplicialComplex build_torus(int ell);

// The reduction complex: one gadget per clause (width = clause width), one
// torus per conflict pair, glued along the boundary spheres.  Phi must be
// normalized.
SimplicialComplex build_reduction(const CnfFormula& phi, const GadgetParams& params);

} // namespace vkf
