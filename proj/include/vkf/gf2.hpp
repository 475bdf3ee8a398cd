#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vkf/simplicial_complex.hpp"

namespace vkf {

// Dense matrix over GF(2), bit-packed row-major into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c);

    // row r += row s (XOR)
    void add_row(std::size_t r, std::size_t s);

    Gf2Matrix transposed() const;
    bool is_zero() const;

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t rank_gf2(Gf2Matrix m); // by value: elimination is destructive

// Graded chain complex over GF(2).  boundary(i) maps dimension-i chains to
// dimension-(i-1) chains, shape n_{i-1} x n_i; defined for 1 <= i <= top.
class ChainComplexZ2 {
public:
    ChainComplexZ2() = default;
    ChainComplexZ2(std::vector<std::size_t> basis_sizes, std::vector<Gf2Matrix> boundaries);

    int top_dim() const { return static_cast<int>(basis_sizes_.size()) - 1; }
    std::size_t basis_size(int i) const { return basis_sizes_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::size_t>& basis_sizes() const { return basis_sizes_; }
    const Gf2Matrix& boundary(int i) const; // 1 <= i <= top_dim

    bool boundary_squares_to_zero() const;

private:
    std::vector<std::size_t> basis_sizes_;
    std::vector<Gf2Matrix> boundaries_; // boundaries_[i-1] = partial_i
};

// Simplicial boundary maps in the complex's deterministic face order.
ChainComplexZ2 boundary_complex(const SimplicialComplex& k);

// Mod-2 Betti numbers b_0..b_top.  Throws InternalError when dd != 0.
std::vector<std::size_t> betti_mod2(const ChainComplexZ2& c);

} // namespace vkf
