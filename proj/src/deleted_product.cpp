#include "vkf/deleted_product.hpp"

#include <algorithm>
#include <map>

#include "vkf/errors.hpp"

namespace vkf {

namespace {

bool faces_disjoint(const Face& a, const Face& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

} // namespace

DeletedProductComplex::DeletedProductComplex(const SimplicialComplex& source, int max_dim) {
    const int source_dim = source.dim();
    int top = 2 * source_dim;
    if (max_dim >= 0 && max_dim < top) {
        top = max_dim;
        truncated_ = true;
    }

    cells_by_dim_.assign(static_cast<std::size_t>(top) + 1, {});
    for (int s = 0; s <= source_dim; ++s) {
        for (int t = 0; t <= source_dim; ++t) {
            if (s + t > top) continue;
            for (const Face& sigma : source.faces(s)) {
                for (const Face& tau : source.faces(t)) {
                    if (faces_disjoint(sigma, tau))
                        cells_by_dim_[static_cast<std::size_t>(s + t)].push_back({sigma, tau});
                }
            }
        }
    }
    while (!cells_by_dim_.empty() && cells_by_dim_.back().empty()) cells_by_dim_.pop_back();
    for (auto& cells : cells_by_dim_) std::sort(cells.begin(), cells.end());
    if (cells_by_dim_.empty()) return;

    // product boundary rule over GF(2)
    std::vector<std::size_t> sizes;
    for (const auto& cells : cells_by_dim_) sizes.push_back(cells.size());
    std::vector<Gf2Matrix> boundaries;
    for (int d = 1; d < static_cast<int>(cells_by_dim_.size()); ++d) {
        const auto& lower = cells_by_dim_[static_cast<std::size_t>(d - 1)];
        const auto& upper = cells_by_dim_[static_cast<std::size_t>(d)];
        std::map<ProductCell, std::size_t> index;
        for (std::size_t r = 0; r < lower.size(); ++r) index[lower[r]] = r;
        Gf2Matrix bd(lower.size(), upper.size());
        for (std::size_t c = 0; c < upper.size(); ++c) {
            const ProductCell& cell = upper[c];
            auto emit = [&](ProductCell face) {
                auto it = index.find(face);
                if (it == index.end())
                    throw InternalError("deleted product: boundary cell missing "
                                        "(closure violated)");
                bd.flip(it->second, c);
            };
            if (cell.first.size() > 1) {
                for (std::size_t drop = 0; drop < cell.first.size(); ++drop) {
                    ProductCell face = cell;
                    face.first.erase(face.first.begin() + static_cast<std::ptrdiff_t>(drop));
                    emit(std::move(face));
                }
            }
            if (cell.second.size() > 1) {
                for (std::size_t drop = 0; drop < cell.second.size(); ++drop) {
                    ProductCell face = cell;
                    face.second.erase(face.second.begin() + static_cast<std::ptrdiff_t>(drop));
                    emit(std::move(face));
                }
            }
        }
        boundaries.push_back(std::move(bd));
    }
    chain_ = ChainComplexZ2(std::move(sizes), std::move(boundaries));
}

const std::vector<ProductCell>& DeletedProductComplex::cells(int d) const {
    static const std::vector<ProductCell> empty;
    if (d < 0 || d >= static_cast<int>(cells_by_dim_.size())) return empty;
    return cells_by_dim_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> DeletedProductComplex::cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& cells : cells_by_dim_) out.push_back(cells.size());
    return out;
}

std::size_t DeletedProductComplex::total_cells() const {
    std::size_t n = 0;
    for (const auto& cells : cells_by_dim_) n += cells.size();
    return n;
}

InvolutionReport DeletedProductComplex::check_free_involution() const {
    InvolutionReport report;
    for (int d = 0; d < static_cast<int>(cells_by_dim_.size()); ++d) {
        const auto& cells = cells_by_dim_[static_cast<std::size_t>(d)];
        std::map<ProductCell, std::size_t> index;
        for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
        for (const ProductCell& cell : cells) {
            if (cell.first == cell.second)
                throw InternalError("deleted product: fixed cell under the exchange "
                                    "involution (disjointness bug)");
            if (!index.count(cell.swapped())) {
                report.free = false;
                return report;
            }
        }
        if (cells.size() % 2 != 0) {
            report.free = false;
            return report;
        }
        report.orbits_by_dim.push_back(cells.size() / 2);
        report.total_orbits += cells.size() / 2;
    }

    // swap is a chain automorphism: boundary(swap(c)) = swap(boundary(c)),
    // checked as permutation-conjugated boundary matrices
    for (int d = 1; d < static_cast<int>(cells_by_dim_.size()); ++d) {
        const auto& lower = cells_by_dim_[static_cast<std::size_t>(d - 1)];
        const auto& upper = cells_by_dim_[static_cast<std::size_t>(d)];
        std::map<ProductCell, std::size_t> lower_index, upper_index;
        for (std::size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = i;
        for (std::size_t i = 0; i < upper.size(); ++i) upper_index[upper[i]] = i;
        const Gf2Matrix& bd = chain_.boundary(d);
        for (std::size_t c = 0; c < upper.size(); ++c) {
            const std::size_t cs = upper_index.at(upper[c].swapped());
            for (std::size_t r = 0; r < lower.size(); ++r) {
                const std::size_t rs = lower_index.at(lower[r].swapped());
                if (bd.get(r, c) != bd.get(rs, cs)) {
                    report.boundary_commutes = false;
                    return report;
                }
            }
        }
    }
    return report;
}

DeletedProductComplex deleted_product(const SimplicialComplex& k, int max_dim) {
    return DeletedProductComplex(k, max_dim);
}

} // namespace vkf
