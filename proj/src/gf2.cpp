#include "vkf/gf2.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "vkf/errors.hpp"

namespace vkf {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(rows * words_per_row_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
    const std::uint64_t m = 1ull << (c % 64);
    if (v) w |= m; else w &= ~m;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_per_row_ + c / 64] ^= 1ull << (c % 64);
}

void Gf2Matrix::add_row(std::size_t r, std::size_t s) {
    std::uint64_t* dst = bits_.data() + r * words_per_row_;
    const std::uint64_t* src = bits_.data() + s * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("gf2 multiply: shape mismatch");
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(r, k)) continue;
            for (std::size_t w = 0; w < out.words_per_row_; ++w)
                out.bits_[r * out.words_per_row_ + w] ^= b.bits_[k * b.words_per_row_ + w];
        }
    }
    return out;
}

std::size_t rank_gf2(Gf2Matrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) m.add_row(rank, pivot), m.add_row(pivot, rank), m.add_row(rank, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.add_row(r, rank);
        ++rank;
    }
    return rank;
}

ChainComplexZ2::ChainComplexZ2(std::vector<std::size_t> basis_sizes,
                               std::vector<Gf2Matrix> boundaries)
    : basis_sizes_(std::move(basis_sizes)), boundaries_(std::move(boundaries)) {
    if (basis_sizes_.empty()) throw PreconditionError("chain complex: no basis");
    if (boundaries_.size() + 1 != basis_sizes_.size())
        throw PreconditionError("chain complex: boundary count mismatch");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != basis_sizes_[i] ||
            boundaries_[i].cols() != basis_sizes_[i + 1])
            throw PreconditionError("chain complex: boundary shape mismatch at dimension " +
                                    std::to_string(i + 1));
    }
}

const Gf2Matrix& ChainComplexZ2::boundary(int i) const {
    if (i < 1 || i > top_dim())
        throw PreconditionError("chain complex: no boundary map at dimension " +
                                std::to_string(i));
    return boundaries_[static_cast<std::size_t>(i - 1)];
}

bool ChainComplexZ2::boundary_squares_to_zero() const {
    for (int i = 2; i <= top_dim(); ++i)
        if (!(boundary(i - 1) * boundary(i)).is_zero()) return false;
    return true;
}

ChainComplexZ2 boundary_complex(const SimplicialComplex& k) {
    const int top = k.dim();
    if (top < 0) throw PreconditionError("boundary_complex: empty complex");
    std::vector<std::size_t> sizes;
    for (int i = 0; i <= top; ++i) sizes.push_back(k.faces(i).size());

    std::vector<Gf2Matrix> boundaries;
    for (int i = 1; i <= top; ++i) {
        const auto& lower = k.faces(i - 1);
        const auto& upper = k.faces(i);
        std::map<Face, std::size_t> index;
        for (std::size_t r = 0; r < lower.size(); ++r) index[lower[r]] = r;
        Gf2Matrix d(lower.size(), upper.size());
        for (std::size_t c = 0; c < upper.size(); ++c) {
            const Face& f = upper[c];
            Face g(f.begin() + 1, f.end());
            for (std::size_t drop = 0;; ++drop) {
                d.flip(index.at(g), c);
                if (drop + 1 == f.size()) break;
                g[drop] = f[drop];
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplexZ2(std::move(sizes), std::move(boundaries));
}

std::vector<std::size_t> betti_mod2(const ChainComplexZ2& c) {
    if (!c.boundary_squares_to_zero())
        throw InternalError("betti_mod2: boundary does not square to zero");
    const int top = c.top_dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int i = 1; i <= top; ++i)
        ranks[static_cast<std::size_t>(i)] = rank_gf2(c.boundary(i));
    std::vector<std::size_t> betti;
    for (int i = 0; i <= top; ++i) {
        std::size_t n = c.basis_size(i);
        betti.push_back(n - ranks[static_cast<std::size_t>(i)] -
                        ranks[static_cast<std::size_t>(i) + 1]);
    }
    return betti;
}

} // namespace vkf
