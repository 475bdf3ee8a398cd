// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is exact; the runtime bounds are wall-clock caps.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "vkf/cnf.hpp"
#include "vkf/deleted_product.hpp"
#include "vkf/errors.hpp"
#include "vkf/gadgets.hpp"
#include "vkf/geometry.hpp"
#include "vkf/gf2.hpp"

using namespace vkf;
using namespace vkf::fixtures;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string label;
    bool pass = true;
    std::string detail;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
    void require_under(double seconds_cap) {
        const double elapsed = seconds();
        if (elapsed > seconds_cap)
            require(false, "runtime " + std::to_string(elapsed) + "s exceeds cap");
    }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
    ~Criterion() {
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                    label.c_str(), seconds(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!pass) ++failures;
    }
};

CnfFormula phi_neg() { return normalize(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")); }

CnfFormula random_3cnf(int t, unsigned seed) {
    CnfFormula phi{t, {}};
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<unsigned>(state >> 33);
    };
    for (int c = 0; c < t; ++c) {
        Clause clause;
        while (clause.width() < 3) {
            int var = static_cast<int>(next() % static_cast<unsigned>(t)) + 1;
            int sign = static_cast<int>(next() % 2);
            bool dup = false;
            for (const auto& l : clause.literals)
                if (l.var == var) dup = true;
            if (!dup) clause.literals.push_back({var, sign});
        }
        phi.clauses.push_back(clause);
    }
    return normalize(phi);
}

void criterion_1() {
    Criterion c{1, "v(F(k,l)) = 1 under moment and 5 seeded maps each"};
    for (auto [k, ell] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
        auto f = build_F({k, ell});
        const int d = k + ell + 1;
        c.require(van_kampen_number(f, d, moment_coords(f, d)).v == 1,
                  "moment map v != 1 at (" + std::to_string(k) + "," + std::to_string(ell) + ")");
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            c.require(van_kampen_number(f, d, seeded_coords(f, d, seed)).v == 1,
                      "seeded map v != 1 at (" + std::to_string(k) + "," +
                          std::to_string(ell) + "), seed " + std::to_string(seed));
    }
    c.require_under(60.0);
}

void criterion_2() {
    Criterion c{2, "extension-parity hypothesis on F and K5, refuted on the path"};
    for (auto [k, ell] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
        c.require(check_extension_parity(build_F({k, ell}), k + ell + 1).ok,
                  "parity fails on F(" + std::to_string(k) + "," + std::to_string(ell) + ")");
    }
    c.require(check_extension_parity(k5(), 2).ok, "parity fails on K5");
    auto path = SimplicialComplex::from_facets({"u", "v", "w"}, {{0, 1}, {1, 2}});
    auto rep = check_extension_parity(path, 1);
    c.require(!rep.ok, "path should fail");
    c.require(rep.sigma == Face{0} && rep.tau == Face{1} &&
                  rep.extensions_of_sigma == 0 && rep.extensions_of_tau == 1,
              "path witness mismatch");
    c.require_under(5.0);
}

void criterion_3() {
    Criterion c{3, "map independence across 20 seeded maps and the moment map"};
    for (auto [k, d] : {std::pair<SimplicialComplex, int>{k5(), 2},
                        {build_F({2, 1}), 4}}) {
        const int v0 = van_kampen_number(k, d, moment_coords(k, d)).v;
        for (std::uint64_t seed = 1; seed <= 20; ++seed)
            c.require(van_kampen_number(k, d, seeded_coords(k, d, seed)).v == v0,
                      "disagreement at seed " + std::to_string(seed));
    }
    c.require_under(60.0);
}

void criterion_4() {
    Criterion c{4, "combinatorial oracle equals geometric van Kampen number"};
    const std::vector<std::pair<SimplicialComplex, int>> fixtures = {
        {k5(), 2},           {triangle_boundary(), 1}, {tetra_boundary(), 2},
        {build_F({2, 1}), 4}, {build_F({3, 1}), 5},    {two_disjoint_edges(), 1},
        {full_triangle(), 2},
    };
    for (const auto& [k, d] : fixtures) {
        auto oracle = moment_crossing_oracle(k, d);
        auto geo = van_kampen_number(k, d, moment_coords(k, d));
        c.require(oracle.v == geo.v && oracle.ledger == geo.ledger,
                  "disagreement on " + k.name() + " at d=" + std::to_string(d));
    }
}

void criterion_5() {
    Criterion c{5, "gadget f-vectors, sphere/torus homology, sigma maximality"};
    c.require(build_F({2, 1}).f_vector() == std::vector<std::size_t>{7, 21, 35},
              "F(2,1) f-vector");
    c.require(build_gadget({2, 1}, 3).f_vector() == std::vector<std::size_t>{7, 21, 32},
              "G(2,1) width 3 f-vector");
    c.require(build_gadget({2, 1}, 1).f_vector() == std::vector<std::size_t>{7, 21, 34},
              "G(2,1) width 1 f-vector");
    c.require(build_torus(1).f_vector() == std::vector<std::size_t>{9, 27, 18},
              "T(1) f-vector");
    {
        auto f = build_F({2, 1});
        for (int j = 1; j <= 3; ++j)
            c.require(betti_mod2(boundary_complex(
                          f.mark_subcomplex("S_" + std::to_string(j)))) ==
                          std::vector<std::size_t>{1, 0, 1},
                      "S_j Betti at (2,1)");
    }
    {
        auto f = build_F({4, 2});
        for (int j = 1; j <= 3; ++j)
            c.require(betti_mod2(boundary_complex(
                          f.mark_subcomplex("S_" + std::to_string(j)))) ==
                          std::vector<std::size_t>{1, 0, 0, 0, 1},
                      "S_j Betti at (4,2)");
        for (int j = 1; j <= 3; ++j) {
            const Face& sigma = f.mark("sigma_" + std::to_string(j)).front();
            bool maximal = false;
            for (const Face& fc : f.facets()) maximal = maximal || fc == sigma;
            c.require(maximal, "sigma_j not maximal in F(4,2)");
        }
    }
    c.require(betti_mod2(boundary_complex(build_torus(1))) ==
                  std::vector<std::size_t>{1, 2, 1},
              "T(1) Betti");
    c.require(betti_mod2(boundary_complex(build_torus(2))) ==
                  std::vector<std::size_t>{1, 0, 2, 0, 1},
              "T(2) Betti");
    c.require_under(120.0);
}

void criterion_6() {
    Criterion c{6, "reduction on phi_neg and the two-clause conflict formula"};
    auto k = build_reduction(phi_neg(), {2, 1});
    c.require(k.f_vector() == std::vector<std::size_t>{17, 63, 86}, "K(phi_neg) f-vector");
    c.require(k.dim() == 2, "K(phi_neg) dimension");
    std::size_t tori = 0;
    for (const auto& [name, _] : k.marks())
        if (name.size() > 2 && name.substr(name.size() - 2) == "/a") ++tori;
    c.require(tori == 1, "expected exactly one torus");
    c.require(k.mark("g2/sigma_1") == k.mark("t2.1-1.1/a"), "glued marks differ (a side)");
    c.require(k.mark("g1/sigma_1") == k.mark("t2.1-1.1/b"), "glued marks differ (b side)");

    auto phi2 = normalize(parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n"));
    c.require(conflict_pairs(phi2).size() == 2, "|P| != 2");
    auto k2 = build_reduction(phi2, {2, 1});
    // inclusion-exclusion: each torus loses the glued a and b spheres (6 + 6
    // faces meeting in the base vertex); the two gadget apexes merge
    const std::size_t expected = 2 * 60 + 2 * (54 - 6 - 6 + 1) - 1;
    c.require(k2.face_count() == expected, "inclusion-exclusion count mismatch");
}

void criterion_7() {
    Criterion c{7, "polynomial growth of the reduction"};
    const GadgetParams params{2, 1};
    auto count_at = [&](int t) {
        return build_reduction(random_3cnf(t, 7), params).face_count();
    };
    const double c5 = static_cast<double>(count_at(5));
    const double lin = c5 / 5.0, quad = c5 / 25.0;
    for (int t : {10, 20}) {
        c.require(static_cast<double>(count_at(t)) <= lin * t + quad * t * t,
                  "super-quadratic growth at t=" + std::to_string(t));
    }
    const auto t0 = std::chrono::steady_clock::now();
    const double c40 = static_cast<double>(count_at(40));
    const double secs40 = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    c.require(c40 <= lin * 40 + quad * 1600, "super-quadratic growth at t=40");
    c.require(secs40 < 10.0, "reduction at t=40 took " + std::to_string(secs40) + "s");
}

void criterion_8() {
    Criterion c{8, "deleted products and the free exchange involution"};
    auto hex = deleted_product(triangle_boundary());
    c.require(hex.total_cells() == 12, "triangle-boundary cell count");
    c.require(betti_mod2(hex.chain_complex()) == std::vector<std::size_t>{1, 1},
              "triangle-boundary Betti");
    auto sph = deleted_product(tetra_boundary());
    c.require(betti_mod2(sph.chain_complex()) == std::vector<std::size_t>{1, 0, 1},
              "tetrahedron-boundary Betti");
    auto pts = deleted_product(two_points());
    c.require(betti_mod2(pts.chain_complex()) == std::vector<std::size_t>{2},
              "two-point Betti");
    for (auto* dp : {&hex, &sph, &pts}) {
        auto rep = dp->check_free_involution();
        c.require(rep.free && rep.boundary_commutes, "involution check failed");
    }
}

void criterion_9() {
    Criterion c{9, "mod-2 linking of the explicit triangle pair"};
    CoordMap cm;
    cm.ambient = 3;
    auto set = [&cm](VertexId v, long x, long y, long z) {
        cm.points[v] = RationalPoint{{Rational(x), Rational(y), Rational(z)}};
    };
    set(0, 2, 0, 0);
    set(1, -1, 2, 0);
    set(2, -1, -2, 0);
    set(3, 0, 0, 2);
    set(4, 0, 0, -2);
    set(5, 5, 1, 1);
    PLCycle a{{{0, 1}, {1, 2}, {0, 2}}, &cm};
    PLCycle b{{{3, 4}, {4, 5}, {3, 5}}, &cm};
    c.require(lk2_seeded(a, b, 1).value == 1, "linked pair gives 0");
    c.require(lk2_seeded(b, a, 1).value == 1, "symmetry fails on the linked pair");

    CoordMap far = cm;
    for (VertexId v : {3, 4, 5}) far.points[v].coords[0] += 100;
    PLCycle a2{a.top_faces, &far};
    PLCycle b2{b.top_faces, &far};
    c.require(lk2_seeded(a2, b2, 1).value == 0, "separated pair gives 1");
    c.require(lk2_seeded(b2, a2, 1).value == 0, "symmetry fails on the separated pair");
}

void criterion_10() {
    Criterion c{10, "CNF parsing, normalization and brute-force SAT"};
    for (const char* text : {"p cnf 2 2\n1 2 0\n-1 -2 0\n", "p cnf 1 2\n1 0\n-1 0\n",
                             "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"}) {
        auto phi = parse_dimacs(text);
        c.require(parse_dimacs(write_dimacs(phi)) == phi, "round trip failed");
    }
    c.require(!brute_force_sat(phi_neg()).satisfiable, "phi_neg should be UNSAT");
    {
        std::string text = "p cnf 3 8\n";
        for (int m = 0; m < 8; ++m) {
            for (int i = 0; i < 3; ++i)
                text += std::to_string((m >> i) & 1 ? i + 1 : -(i + 1)) + " ";
            text += "0\n";
        }
        c.require(!brute_force_sat(parse_dimacs(text)).satisfiable,
                  "8-clause formula should be UNSAT");
    }
    {
        CnfFormula phi{3, {Clause{{{1, 1}, {1, 0}, {2, 1}}}, Clause{{{2, 1}, {3, 1}}}}};
        auto norm = normalize(phi);
        c.require(norm.num_clauses() == 1 &&
                      norm.clauses[0].literals == std::vector<Literal>{{2, 1}, {3, 1}},
                  "tautological clause not removed");
    }
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
        criterion_10();
    } catch (const std::exception& e) {
        std::printf("FAIL unexpected exception: %s\n", e.what());
        return 1;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
