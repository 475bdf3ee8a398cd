#include "vkf/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vkf/errors.hpp"

namespace vkf {

namespace {

const std::vector<Face> kNoFaces;

Face sorted_checked(const Face& f, const char* what) {
    if (f.empty()) throw PreconditionError(std::string(what) + ": empty simplex");
    Face g = f;
    std::sort(g.begin(), g.end());
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i] == g[i - 1])
            throw PreconditionError(std::string(what) + ": duplicate vertex " +
                                    std::to_string(g[i]) + " inside a simplex");
    return g;
}

// all nonempty proper and improper subsets of f
void add_subsets(const Face& f, FaceSet& out) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Face g;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) g.push_back(f[i]);
        out.insert(std::move(g));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& labels,
                                                 const std::vector<Face>& facets) {
    std::vector<Vertex> verts;
    verts.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        verts.push_back({static_cast<VertexId>(i), labels[i]});
    return from_vertices_and_facets(std::move(verts), facets);
}

SimplicialComplex SimplicialComplex::from_vertices_and_facets(std::vector<Vertex> vertices,
                                                 const std::vector<Face>& facets) {
    SimplicialComplex k;
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::set<std::string> labels;
    for (const Vertex& v : vertices) {
        if (v.id < 0) throw PreconditionError("negative vertex id");
        if (k.vertex_index_.count(v.id))
            throw PreconditionError("duplicate vertex id " + std::to_string(v.id));
        if (!labels.insert(v.label).second)
            throw PreconditionError("duplicate vertex label '" + v.label + "'");
        k.vertex_index_[v.id] = k.vertices_.size();
        k.vertices_.push_back(v);
    }
    for (const Face& f : facets) {
        Face g = sorted_checked(f, "from_facets");
        for (VertexId v : g)
            if (!k.vertex_index_.count(v))
                throw PreconditionError("unknown vertex id " + std::to_string(v));
        k.facets_.push_back(std::move(g));
    }
    k.build_closure();
    return k;
}

void SimplicialComplex::build_closure() {
    face_set_.clear();
    for (const Face& f : facets_) add_subsets(f, face_set_);

    // drop non-maximal input faces
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<Face> maximal;
    for (const Face& f : facets_) {
        bool strict_superset = false;
        for (const Face& g : facets_) {
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                strict_superset = true;
                break;
            }
        }
        if (!strict_superset) maximal.push_back(f);
    }
    facets_ = std::move(maximal);

    for (const Vertex& v : vertices_)
        if (!face_set_.count({v.id}))
            throw PreconditionError("vertex " + std::to_string(v.id) +
                                    " ('" + v.label + "') appears in no face");

    faces_by_dim_.clear();
    for (const Face& f : face_set_) {
        std::size_t d = f.size() - 1;
        if (faces_by_dim_.size() <= d) faces_by_dim_.resize(d + 1);
        faces_by_dim_[d].push_back(f);
    }
    for (auto& fs : faces_by_dim_) std::sort(fs.begin(), fs.end());
}

const std::vector<Face>& SimplicialComplex::faces(int m) const {
    if (m < 0 || m >= static_cast<int>(faces_by_dim_.size())) return kNoFaces;
    return faces_by_dim_[static_cast<std::size_t>(m)];
}

std::size_t SimplicialComplex::face_count() const { return face_set_.size(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> fv;
    fv.reserve(faces_by_dim_.size());
    for (const auto& fs : faces_by_dim_) fv.push_back(fs.size());
    return fv;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (const auto& fs : faces_by_dim_) {
        chi += sign * static_cast<long>(fs.size());
        sign = -sign;
    }
    return chi;
}

const Vertex& SimplicialComplex::vertex(VertexId id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw PreconditionError("no vertex with id " + std::to_string(id));
    return vertices_[it->second];
}

bool SimplicialComplex::has_vertex(VertexId id) const { return vertex_index_.count(id) > 0; }

SimplicialComplex SimplicialComplex::skeleton(int m) const {
    if (m < 0) throw PreconditionError("skeleton: negative dimension");
    if (m >= dim()) return *this;
    std::vector<Face> new_facets;
    for (const Face& f : facets_) {
        if (static_cast<int>(f.size()) - 1 <= m) {
            new_facets.push_back(f);
        }
    }
    for (const Face& f : faces(m)) new_facets.push_back(f);
    SimplicialComplex k = from_vertices_and_facets(vertices_, new_facets);
    k.name_ = name_;
    for (const auto& [mark_name, simplices] : marks_) {
        std::vector<Face> kept;
        FaceSet closure;
        for (const Face& s : simplices) add_subsets(s, closure);
        for (const Face& f : closure)
            if (static_cast<int>(f.size()) - 1 <= m) kept.push_back(f);
        std::sort(kept.begin(), kept.end());
        if (!kept.empty()) k.set_mark(mark_name, std::move(kept));
    }
    return k;
}

std::vector<std::pair<Face, Face>>
SimplicialComplex::disjoint_simplex_pairs(int s, int t) const {
    if (s < 0 || t < 0) throw PreconditionError("disjoint_simplex_pairs: negative dimension");
    std::vector<std::pair<Face, Face>> out;
    const auto& fs = faces(s);
    const auto& ft = faces(t);
    auto disjoint = [](const Face& a, const Face& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i; else ++j;
        }
        return true;
    };
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::size_t j0 = (s == t) ? i + 1 : 0;
        for (std::size_t j = j0; j < ft.size(); ++j) {
            if (disjoint(fs[i], ft[j])) out.emplace_back(fs[i], ft[j]);
        }
    }
    return out;
}

void SimplicialComplex::set_mark(const std::string& mark_name, std::vector<Face> simplices) {
    for (Face& f : simplices) {
        f = sorted_checked(f, "set_mark");
        if (!has_face(f)) throw PreconditionError("mark '" + mark_name + "': not a face");
    }
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    marks_[mark_name] = std::move(simplices);
}

const std::vector<Face>& SimplicialComplex::mark(const std::string& mark_name) const {
    auto it = marks_.find(mark_name);
    if (it == marks_.end()) throw PreconditionError("no mark named '" + mark_name + "'");
    return it->second;
}

FaceSet SimplicialComplex::mark_closure(const std::string& mark_name) const {
    FaceSet out;
    for (const Face& f : mark(mark_name)) add_subsets(f, out);
    return out;
}

SimplicialComplex SimplicialComplex::mark_subcomplex(const std::string& mark_name) const {
    const auto& simplices = mark(mark_name);
    std::set<VertexId> used;
    for (const Face& f : simplices) used.insert(f.begin(), f.end());
    std::map<VertexId, VertexId> remap;
    std::vector<Vertex> verts;
    for (VertexId v : used) {
        remap[v] = static_cast<VertexId>(verts.size());
        verts.push_back({static_cast<VertexId>(verts.size()), vertex(v).label});
    }
    std::vector<Face> new_facets;
    for (const Face& f : simplices) {
        Face g;
        for (VertexId v : f) g.push_back(remap[v]);
        new_facets.push_back(std::move(g));
    }
    SimplicialComplex k = from_vertices_and_facets(std::move(verts), new_facets);
    k.set_name(name_ + "/" + mark_name);
    return k;
}

SimplicialComplex prefixed(const SimplicialComplex& k, const std::string& prefix) {
    std::vector<Vertex> verts = k.vertices();
    for (Vertex& v : verts) v.label = prefix + v.label;
    SimplicialComplex out = SimplicialComplex::from_vertices_and_facets(std::move(verts), k.facets());
    out.set_name(prefix + k.name());
    for (const auto& [mark_name, simplices] : k.marks())
        out.set_mark(prefix + mark_name, simplices);
    return out;
}

SimplicialComplex glue(const std::vector<SimplicialComplex>& parts,
                       const std::vector<Identification>& idents) {
    if (parts.empty()) throw PreconditionError("glue: no parts");

    // global ids: part offset + local id position
    std::vector<std::size_t> offset(parts.size() + 1, 0);
    for (std::size_t p = 0; p < parts.size(); ++p)
        offset[p + 1] = offset[p] + parts[p].vertices().size();
    const std::size_t total = offset.back();

    auto global_of = [&](std::size_t p, VertexId v) -> std::size_t {
        const auto& k = parts[p];
        if (!k.has_vertex(v))
            throw PreconditionError("glue: part " + std::to_string(p) +
                                    " has no vertex " + std::to_string(v));
        // vertices are sorted by id; binary search by id
        const auto& vs = k.vertices();
        auto it = std::lower_bound(vs.begin(), vs.end(), v,
                                   [](const Vertex& a, VertexId b) { return a.id < b; });
        return offset[p] + static_cast<std::size_t>(it - vs.begin());
    };

    // union-find
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a; // representative = smallest global id
    };

    for (const Identification& id : idents) {
        if (id.part_a >= parts.size() || id.part_b >= parts.size())
            throw PreconditionError("glue: identification references a missing part");
        const SimplicialComplex& ka = parts[id.part_a];
        const SimplicialComplex& kb = parts[id.part_b];

        std::map<VertexId, VertexId> vmap;
        for (auto [va, vb] : id.pairs) {
            ka.vertex(va); kb.vertex(vb); // existence
            if (!vmap.emplace(va, vb).second)
                throw PreconditionError("glue: vertex " + std::to_string(va) +
                                        " identified twice");
        }

        // the induced map must be a simplicial isomorphism between the marked
        // subcomplexes
        FaceSet closure_a = ka.mark_closure(id.mark_a);
        FaceSet closure_b = kb.mark_closure(id.mark_b);
        if (closure_a.size() != closure_b.size())
            throw PreconditionError("glue: marks '" + id.mark_a + "' and '" + id.mark_b +
                                    "' have different face counts");
        for (const Face& f : closure_a) {
            Face g;
            for (VertexId v : f) {
                auto it = vmap.find(v);
                if (it == vmap.end())
                    throw PreconditionError("glue: mark '" + id.mark_a +
                                            "' vertex not covered by identification");
                g.push_back(it->second);
            }
            std::sort(g.begin(), g.end());
            if (std::adjacent_find(g.begin(), g.end()) != g.end() || !closure_b.count(g))
                throw PreconditionError("glue: identification is not a simplicial isomorphism "
                                        "between '" + id.mark_a + "' and '" + id.mark_b + "'");
        }

        for (auto [va, vb] : id.pairs)
            unite(global_of(id.part_a, va), global_of(id.part_b, vb));
    }

    // quotient vertex classes, re-densified in representative order
    std::map<std::size_t, VertexId> rep_to_new;
    for (std::size_t g = 0; g < total; ++g) {
        std::size_t r = find(g);
        if (!rep_to_new.count(r)) rep_to_new[r] = 0;
    }
    {
        VertexId next = 0;
        for (auto& [rep, id] : rep_to_new) id = next++;
    }

    auto new_id = [&](std::size_t g) { return rep_to_new.at(find(g)); };

    // merged labels: unique labels of the class, in global-id order, joined by '='
    std::map<VertexId, std::vector<std::string>> class_labels;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& vs = parts[p].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            auto& ls = class_labels[new_id(offset[p] + i)];
            if (std::find(ls.begin(), ls.end(), vs[i].label) == ls.end())
                ls.push_back(vs[i].label);
        }
    }
    std::vector<Vertex> verts;
    std::set<std::string> seen_labels;
    for (const auto& [id, ls] : class_labels) {
        std::string label = ls[0];
        for (std::size_t i = 1; i < ls.size(); ++i) label += "=" + ls[i];
        if (!seen_labels.insert(label).second)
            throw PreconditionError("glue: label collision after quotient: '" + label +
                                    "'; prefix the parts to keep labels unique");
        verts.push_back({id, label});
    }

    // map faces; detect intra-part collapse
    FaceSet all_faces;
    std::vector<Face> facet_candidates;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        FaceSet part_images;
        std::map<Face, Face> image_to_source;
        for (const auto& fs : parts[p].faces_by_dim()) {
            for (const Face& f : fs) {
                Face g;
                for (VertexId v : f) g.push_back(new_id(global_of(p, v)));
                std::sort(g.begin(), g.end());
                if (std::adjacent_find(g.begin(), g.end()) != g.end())
                    throw PreconditionError("glue: a simplex of part " + std::to_string(p) +
                                            " acquires a repeated vertex under the quotient");
                auto [it, inserted] = image_to_source.emplace(g, f);
                if (!inserted && it->second != f)
                    throw PreconditionError("glue: two distinct faces of part " +
                                            std::to_string(p) + " collapse to one face");
                part_images.insert(g);
            }
        }
        for (const Face& g : part_images) all_faces.insert(g);
        for (const Face& f : parts[p].facets()) {
            Face g;
            for (VertexId v : f) g.push_back(new_id(global_of(p, v)));
            std::sort(g.begin(), g.end());
            facet_candidates.push_back(std::move(g));
        }
    }

    SimplicialComplex out = SimplicialComplex::from_vertices_and_facets(std::move(verts), facet_candidates);
    if (out.face_count() != all_faces.size())
        throw InternalError("glue: closure of glued facets disagrees with face union");

    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const auto& [mark_name, simplices] : parts[p].marks()) {
            std::vector<Face> mapped;
            for (const Face& f : simplices) {
                Face g;
                for (VertexId v : f) g.push_back(new_id(global_of(p, v)));
                std::sort(g.begin(), g.end());
                mapped.push_back(std::move(g));
            }
            if (out.has_mark(mark_name))
                throw PreconditionError("glue: duplicate mark name '" + mark_name +
                                        "' across parts");
            out.set_mark(mark_name, std::move(mapped));
        }
    }
    return out;
}

} // namespace vkf
