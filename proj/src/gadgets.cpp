#include "vkf/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "vkf/errors.hpp"

namespace vkf {

namespace {

// all m-element subsets of {0..n-1}, lexicographic
std::vector<Face> subsets(int n, int m) {
    std::vector<Face> out;
    if (m < 0 || m > n) return out;
    Face cur(static_cast<std::size_t>(m));
    // iterative combinations
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace

void GadgetParams::validate(bool theorem_regime) const {
    if (k < 2) throw PreconditionError("gadget params: k must be at least 2");
    if (ell < 0 || ell >= k)
        throw PreconditionError("gadget params: need 0 <= ell < k, got ell = " +
                                std::to_string(ell) + ", k = " + std::to_string(k));
    if (theorem_regime && k != 2 * ell)
        throw PreconditionError("gadget params: theorem regime needs k = 2*ell "
                                "(d = 3k/2 + 1)");
}

SimplicialComplex build_F(const GadgetParams& params) {
    params.validate();
    const int k = params.k, ell = params.ell;
    const int n = k + ell + 3;          // numbered vertices, ids 0..n-1 labeled "1".."n"
    const VertexId p = n;               // apex

    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    labels.push_back("p");

    std::vector<Face> facets;
    for (Face f : subsets(n, k + 1)) facets.push_back(std::move(f)); // complete k-skeleton
    for (Face f : subsets(n, ell + 1)) {                             // (ell+1)-simplices through p
        f.push_back(p);
        facets.push_back(std::move(f));
    }

    SimplicialComplex out = SimplicialComplex::from_facets(labels, facets);
    out.set_name("F(" + std::to_string(k) + "," + std::to_string(ell) + ")");

    for (int j = 1; j <= 3; ++j) {
        // sigma_j: {p} union [ell+2] - {j}; vertex "i" has id i-1
        Face sigma;
        for (int i = 1; i <= ell + 2; ++i)
            if (i != j) sigma.push_back(i - 1);
        sigma.push_back(p);
        out.set_mark("sigma_" + std::to_string(j), {sigma});

        // S_j: all k-simplices on the numbered vertices avoiding sigma_j
        std::vector<Face> sphere;
        for (const Face& f : subsets(n, k + 1)) {
            bool meets = false;
            for (VertexId v : f)
                if (std::find(sigma.begin(), sigma.end(), v) != sigma.end()) { meets = true; break; }
            if (!meets) sphere.push_back(f);
        }
        out.set_mark("S_" + std::to_string(j), std::move(sphere));
    }
    out.set_mark("p", {{p}});
    return out;
}

SimplicialComplex build_gadget(const GadgetParams& params, int width) {
    params.validate();
    if (width < 1 || width > 3)
        throw PreconditionError("build_gadget: width must be in 1..3");
    SimplicialComplex f = build_F(params);

    FaceSet removed;
    for (int j = 1; j <= width; ++j) {
        const Face& sigma = f.mark("sigma_" + std::to_string(j)).front();
        bool maximal = std::find(f.facets().begin(), f.facets().end(), sigma) != f.facets().end();
        if (!maximal)
            throw InternalError("build_gadget: sigma_" + std::to_string(j) +
                                " is not maximal in F");
        removed.insert(sigma);
    }

    std::vector<Face> facets;
    for (const Face& fc : f.facets())
        if (!removed.count(fc)) facets.push_back(fc);
    // boundaries of the removed simplices stay; their ell-faces lie in other
    // facets through p, so no facet needs to be added back

    SimplicialComplex out = SimplicialComplex::from_vertices_and_facets(f.vertices(), facets);
    out.set_name("G(" + std::to_string(params.k) + "," + std::to_string(params.ell) +
                 ";w" + std::to_string(width) + ")");
    for (int j = 1; j <= 3; ++j) {
        const Face& sigma = f.mark("sigma_" + std::to_string(j)).front();
        // mark the boundary sphere: all ell-faces of sigma_j
        std::vector<Face> bd;
        for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
            Face g;
            for (std::size_t i = 0; i < sigma.size(); ++i)
                if (i != drop) g.push_back(sigma[i]);
            std::sort(g.begin(), g.end());
            bd.push_back(std::move(g));
        }
        out.set_mark("sigma_" + std::to_string(j), std::move(bd));
        out.set_mark("S_" + std::to_string(j), f.mark("S_" + std::to_string(j)));
    }
    out.set_mark("p", f.mark("p"));
    return out;
}

SimplicialComplex build_torus(int ell) {
    if (ell < 1) throw PreconditionError("build_torus: ell must be at least 1");
    const int m = ell + 2; // vertices per factor sphere

    auto vid = [m](int u, int v) { return u * m + v; };

    std::vector<std::string> labels;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            labels.push_back(std::to_string(u) + "." + std::to_string(v));

    // facets of the boundary of an (ell+1)-simplex: drop one vertex
    std::vector<std::vector<int>> sphere_facets;
    for (int drop = 0; drop < m; ++drop) {
        std::vector<int> f;
        for (int i = 0; i < m; ++i)
            if (i != drop) f.push_back(i);
        sphere_facets.push_back(std::move(f));
    }

    // staircase top cells: monotone lattice paths through A x B
    std::vector<Face> facets;
    const int steps = 2 * ell; // path of 2*ell+1 vertices
    for (const auto& A : sphere_facets) {
        for (const auto& B : sphere_facets) {
            // enumerate bitmasks choosing which steps advance in A
            for (std::uint32_t mask = 0; mask < (1u << steps); ++mask) {
                if (std::popcount(mask) != ell) continue;
                Face cell;
                int i = 0, j = 0;
                cell.push_back(vid(A[0], B[0]));
                for (int s = 0; s < steps; ++s) {
                    if (mask & (1u << s)) ++i; else ++j;
                    cell.push_back(vid(A[static_cast<std::size_t>(i)],
                                       B[static_cast<std::size_t>(j)]));
                }
                std::sort(cell.begin(), cell.end());
                facets.push_back(std::move(cell));
            }
        }
    }

    SimplicialComplex out = SimplicialComplex::from_facets(labels, facets);
    out.set_name("T(" + std::to_string(ell) + ")");

    // meridian a = sphere x {0}, parallel b = {0} x sphere; base vertex (0,0)
    std::vector<Face> a_facets, b_facets;
    for (const auto& A : sphere_facets) {
        Face fa, fb;
        for (int u : A) fa.push_back(vid(u, 0));
        for (int v : A) fb.push_back(vid(0, v));
        std::sort(fa.begin(), fa.end());
        std::sort(fb.begin(), fb.end());
        a_facets.push_back(std::move(fa));
        b_facets.push_back(std::move(fb));
    }
    out.set_mark("a", std::move(a_facets));
    out.set_mark("b", std::move(b_facets));
    out.set_mark("base", {{vid(0, 0)}});
    return out;
}

SimplicialComplex build_reduction(const CnfFormula& phi, const GadgetParams& params) {
    params.validate();
    const CnfFormula norm = normalize(phi);
    if (norm.clauses != phi.clauses)
        throw PreconditionError("build_reduction: formula is not normalized");
    const int t = norm.num_clauses();
    if (t == 0) throw PreconditionError("build_reduction: empty formula");

    const std::vector<ConflictPair> conflicts = conflict_pairs(norm);
    const int ell = params.ell;
    if (ell < 1 && !conflicts.empty())
        throw PreconditionError("build_reduction: tori require ell >= 1");

    std::vector<SimplicialComplex> parts;
    parts.reserve(static_cast<std::size_t>(t) + conflicts.size());
    for (int s = 1; s <= t; ++s) {
        int width = norm.clauses[static_cast<std::size_t>(s - 1)].width();
        parts.push_back(prefixed(build_gadget(params, width), "g" + std::to_string(s) + "/"));
    }
    std::vector<std::string> torus_prefix;
    for (const ConflictPair& c : conflicts) {
        std::string prefix = "t" + std::to_string(c.q_clause) + "." + std::to_string(c.q_pos) +
                             "-" + std::to_string(c.r_clause) + "." + std::to_string(c.r_pos) + "/";
        torus_prefix.push_back(prefix);
        parts.push_back(prefixed(build_torus(ell), prefix));
    }

    // canonical vertex orders for the identifications:
    //   boundary of sigma_j: p first, then numeric ascending
    //   a: (0,0),(1,0),...   b: (0,0),(0,1),...
    const int n = params.k + ell + 3;
    const VertexId p_id = n;
    auto sigma_order = [&](int j) {
        std::vector<VertexId> order{p_id};
        for (int i = 1; i <= ell + 2; ++i)
            if (i != j) order.push_back(i - 1);
        return order;
    };
    const int m = ell + 2;
    std::vector<VertexId> a_order, b_order;
    for (int u = 0; u < m; ++u) a_order.push_back(u * m);
    for (int v = 0; v < m; ++v) b_order.push_back(v);

    std::vector<Identification> idents;
    for (std::size_t ci = 0; ci < conflicts.size(); ++ci) {
        const ConflictPair& c = conflicts[ci];
        const std::size_t torus_part = static_cast<std::size_t>(t) + ci;
        auto check_width = [&](int clause, int pos) {
            if (pos > norm.clauses[static_cast<std::size_t>(clause - 1)].width())
                throw PreconditionError("build_reduction: conflict references literal "
                                        "position beyond clause width");
        };
        check_width(c.q_clause, c.q_pos);
        check_width(c.r_clause, c.r_pos);

        Identification ia;
        ia.part_a = static_cast<std::size_t>(c.q_clause - 1);
        ia.part_b = torus_part;
        ia.mark_a = "g" + std::to_string(c.q_clause) + "/sigma_" + std::to_string(c.q_pos);
        ia.mark_b = torus_prefix[ci] + "a";
        const auto so_q = sigma_order(c.q_pos);
        for (int i = 0; i < m; ++i)
            ia.pairs.emplace_back(so_q[static_cast<std::size_t>(i)],
                                  a_order[static_cast<std::size_t>(i)]);
        idents.push_back(std::move(ia));

        Identification ib;
        ib.part_a = static_cast<std::size_t>(c.r_clause - 1);
        ib.part_b = torus_part;
        ib.mark_a = "g" + std::to_string(c.r_clause) + "/sigma_" + std::to_string(c.r_pos);
        ib.mark_b = torus_prefix[ci] + "b";
        const auto so_r = sigma_order(c.r_pos);
        for (int i = 0; i < m; ++i)
            ib.pairs.emplace_back(so_r[static_cast<std::size_t>(i)],
                                  b_order[static_cast<std::size_t>(i)]);
        idents.push_back(std::move(ib));
    }

    SimplicialComplex out = glue(parts, idents);
    out.set_name("K(phi)");
    return out;
}

} // namespace vkf
