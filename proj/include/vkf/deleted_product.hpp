#pragma once

#include <cstddef>
#include <vector>

#include "vkf/gf2.hpp"
#include "vkf/simplicial_complex.hpp"

namespace vkf {

// An ordered pair of disjoint faces of the source complex.
struct ProductCell {
    Face first;
    Face second;

    int dim() const {
        return static_cast<int>(first.size()) + static_cast<int>(second.size()) - 2;
    }
    ProductCell swapped() const { return ProductCell{second, first}; }

    friend bool operator==(const ProductCell&, const ProductCell&) = default;
    friend bool operator<(const ProductCell& a, const ProductCell& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

struct InvolutionReport {
    bool free = true;
    bool boundary_commutes = true;
    std::vector<std::size_t> orbits_by_dim;
    std::size_t total_orbits = 0;
};

// Cell complex of all ordered pairs of disjoint faces, graded by
// dim sigma + dim tau, with the product boundary rule.
class DeletedProductComplex {
public:
    DeletedProductComplex(const SimplicialComplex& source, int max_dim = -1);

    int dim() const { return static_cast<int>(cells_by_dim_.size()) - 1; }
    bool truncated() const { return truncated_; }
    const std::vector<ProductCell>& cells(int d) const;
    const std::vector<std::vector<ProductCell>>& cells_by_dim() const { return cells_by_dim_; }
    std::vector<std::size_t> cell_counts() const;
    std::size_t total_cells() const;

    const ChainComplexZ2& chain_complex() const { return chain_; }

    // Verifies the factor-exchange involution is a fixed-point-free cell
    // bijection commuting with the boundary.  Throws InternalError on a
    // fixed cell.
    InvolutionReport check_free_involution() const;

private:
    std::vector<std::vector<ProductCell>> cells_by_dim_; // sorted within each dim
    ChainComplexZ2 chain_;
    bool truncated_ = false;
};

DeletedProductComplex deleted_product(const SimplicialComplex& k, int max_dim = -1);

} // namespace vkf
