#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vkf/simplicial_complex.hpp"

namespace vkf {

using Rational = mpq_class;

struct RationalPoint {
    std::vector<Rational> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Linear-on-vertices realization of a complex in R^d, with a record of how
// genericity was obtained.
struct CoordMap {
    int ambient = 0;
    std::map<VertexId, RationalPoint> points;
    std::string certificate; // "moment" or "seed:<s>/sub:<m>"
    std::optional<std::uint64_t> seed;
    std::uint64_t subseed = 0;

    const RationalPoint& at(VertexId v) const;
    std::vector<RationalPoint> points_of(const Face& f) const;
};

// Vertex i (ascending id order) -> (t, t^2, ..., t^d) with t = i+1.
CoordMap moment_coords(const SimplicialComplex& k, int d);
// Same, with explicit curve parameters (must be pairwise distinct).
CoordMap moment_coords_from_params(const SimplicialComplex& k, int d,
                                   const std::vector<Rational>& params);

// Pseudorandom integer coordinates, certified generic on every disjoint pair
// with dim sigma + dim tau in {d-1, d}; bounded re-draws on failure.
CoordMap seeded_coords(const SimplicialComplex& k, int d, std::uint64_t seed);

// 1 iff the open simplices spanned by the two point sets meet.  Requires
// |sigma_pts| + |tau_pts| = d + 2; throws DegeneracyError unless the combined
// set has a unique affine dependence with all coefficients nonzero.
int pair_crossing(const std::vector<RationalPoint>& sigma_pts,
                  const std::vector<RationalPoint>& tau_pts);

// true iff the points are affinely independent.
bool affinely_independent(const std::vector<RationalPoint>& pts);

struct VkResult {
    int v = 0;
    std::size_t pairs_checked = 0;
    // every crossing pair, in enumeration order; XOR over it equals v
    std::vector<std::pair<Face, Face>> ledger;
};

// Parity of crossings over all unordered disjoint pairs with
// dim sigma + dim tau = d.
VkResult van_kampen_number(const SimplicialComplex& k, int d, const CoordMap& coords);

// Independent combinatorial oracle for the moment-curve realization: a
// disjoint pair crosses iff its vertices strictly alternate along the curve.
VkResult moment_crossing_oracle(const SimplicialComplex& k, int d);

struct ParityReport {
    bool ok = true;
    // populated on failure
    Face sigma, tau;
    std::size_t extensions_of_sigma = 0, extensions_of_tau = 0;
};

// The extension-parity hypothesis making the van Kampen number map-independent:
// for every disjoint pair with dim sigma + dim tau = d-1, the number of
// one-higher cofaces of sigma avoiding tau and of tau avoiding sigma agree
// mod 2.
ParityReport check_extension_parity(const SimplicialComplex& k, int d);

// A mod-2 cycle realized by a coordinate map: every codimension-1 face lies
// in an even number of top faces.
struct PLCycle {
    std::vector<Face> top_faces;
    const CoordMap* coords = nullptr;

    int dim() const;
    void validate() const; // cycle condition + coords cover
};

// Mod-2 linking number: parity of transversal intersections between the cone
// over A from the apex and the top faces of B.  Requires
// dim A + dim B = d - 1 and disjoint images.
int lk2(const PLCycle& a, const PLCycle& b, const RationalPoint& apex);

struct Lk2Result {
    int value = 0;
    std::uint64_t seed = 0, subseed = 0;
    RationalPoint apex;
};

// lk2 with the apex drawn from a seeded generator, re-drawn on degeneracy.
Lk2Result lk2_seeded(const PLCycle& a, const PLCycle& b, std::uint64_t seed);

} // namespace vkf
