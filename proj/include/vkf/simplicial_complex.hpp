#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vkf {

using VertexId = int;

// A face is a strictly increasing, nonempty sequence of vertex ids.
using Face = std::vector<VertexId>;

struct Vertex {
    VertexId id = 0;
    std::string label;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : f) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

// Identifies vertices of a marked subcomplex of one part with vertices of a
// marked subcomplex of another part.  The induced vertex map must restrict to
// a simplicial isomorphism between the two marked subcomplexes.
struct Identification {
    std::size_t part_a = 0;
    std::size_t part_b = 0;
    std::string mark_a;
    std::string mark_b;
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

// Finite abstract simplicial complex, stored by facets with the full face set
// derived on construction.  Immutable after construction apart from marks.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Vertex ids are 0..labels.size()-1 in label order.
    static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                         const std::vector<Face>& facets);
    static SimplicialComplex from_vertices_and_facets(std::vector<Vertex> vertices,
                                                      const std::vector<Face>& facets);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    // Faces of dimension m, sorted lexicographically.  Empty vector when no
    // such faces exist.
    const std::vector<Face>& faces(int m) const;
    // All faces grouped by dimension.
    const std::vector<std::vector<Face>>& faces_by_dim() const { return faces_by_dim_; }

    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
    std::size_t face_count() const;
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    bool has_face(const Face& f) const { return face_set_.count(f) > 0; }
    const Vertex& vertex(VertexId id) const;
    bool has_vertex(VertexId id) const;

    SimplicialComplex skeleton(int m) const;

    // Unordered pairs {sigma, tau} with dim sigma = s, dim tau = t and
    // disjoint vertex sets, in deterministic lexicographic order.  When
    // s != t the first element has dimension s.
    std::vector<std::pair<Face, Face>> disjoint_simplex_pairs(int s, int t) const;

    // Marks: named subcomplexes given by generating simplices (closure implied).
    void set_mark(const std::string& mark_name, std::vector<Face> simplices);
    const std::map<std::string, std::vector<Face>>& marks() const { return marks_; }
    bool has_mark(const std::string& mark_name) const { return marks_.count(mark_name) > 0; }
    const std::vector<Face>& mark(const std::string& mark_name) const;
    // Downward closure of a mark's simplices, as a face set.
    FaceSet mark_closure(const std::string& mark_name) const;
    // The mark as a standalone complex (vertex ids re-densified, labels kept).
    SimplicialComplex mark_subcomplex(const std::string& mark_name) const;

private:
    void build_closure();

    std::string name_;
    std::vector<Vertex> vertices_;          // sorted by id
    std::vector<Face> facets_;              // sorted lexicographically
    std::vector<std::vector<Face>> faces_by_dim_;
    FaceSet face_set_;
    std::map<std::string, std::vector<Face>> marks_;
    std::map<VertexId, std::size_t> vertex_index_;

    friend SimplicialComplex glue(const std::vector<SimplicialComplex>&,
                                  const std::vector<Identification>&);
};

// Quotient of the disjoint union of the parts under the transitive closure of
// the identifications.  Vertex ids of the result are re-densified; merged
// vertex labels are joined with '='.
SimplicialComplex glue(const std::vector<SimplicialComplex>& parts,
                       const std::vector<Identification>& idents);

// Copy with every vertex label and mark name prefixed.
SimplicialComplex prefixed(const SimplicialComplex& k, const std::string& prefix);

} // namespace vkf
