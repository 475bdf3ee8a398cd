#pragma once

#include <cstdint>
#include <vector>

#include "vkf/simplicial_complex.hpp"

namespace vkf::fixtures {

inline SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
}

inline SimplicialComplex full_triangle() {
    return SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1, 2}});
}

inline SimplicialComplex tetra_boundary() {
    return SimplicialComplex::from_facets({"a", "b", "c", "d"},
                                          {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SimplicialComplex k5() {
    std::vector<Face> edges;
    for (VertexId i = 0; i < 5; ++i)
        for (VertexId j = i + 1; j < 5; ++j) edges.push_back({i, j});
    auto k = SimplicialComplex::from_facets({"1", "2", "3", "4", "5"}, edges);
    k.set_name("K5");
    return k;
}

inline SimplicialComplex two_disjoint_edges() {
    return SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
}

inline SimplicialComplex two_points() {
    return SimplicialComplex::from_facets({"a", "b"}, {{0}, {1}});
}

// n choose m
inline std::uint64_t binom(int n, int m) {
    if (m < 0 || m > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) r = r * static_cast<std::uint64_t>(n - i) /
                                     static_cast<std::uint64_t>(i + 1);
    return r;
}

} // namespace vkf::fixtures
