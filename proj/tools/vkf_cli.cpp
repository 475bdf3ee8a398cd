// vkf: build and interrogate the CNF-to-complex reduction and its invariants.
// JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 usage, 2 parse/IO, 3 precondition violation, 4 internal.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vkf/cnf.hpp"
#include "vkf/deleted_product.hpp"
#include "vkf/errors.hpp"
#include "vkf/gadgets.hpp"
#include "vkf/geometry.hpp"
#include "vkf/gf2.hpp"
#include "vkf/json_io.hpp"
#include "vkf/simplicial_complex.hpp"

using nlohmann::json;
using namespace vkf;

namespace {

CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_dimacs(in);
}

json stats_json(const SimplicialComplex& k) {
    json j;
    j["name"] = k.name();
    j["f_vector"] = k.f_vector();
    j["dimension"] = k.dim();
    j["euler_characteristic"] = k.euler_characteristic();
    json marks = json::object();
    for (const auto& [name, simplices] : k.marks()) marks[name] = simplices.size();
    j["marks"] = marks;
    return j;
}

CoordMap coords_for(const SimplicialComplex& k, int d, bool moment,
                    std::optional<std::uint64_t> seed) {
    if (moment && seed)
        throw PreconditionError("choose either --moment or --seed, not both");
    if (moment) return moment_coords(k, d);
    return seeded_coords(k, d, seed.value_or(1));
}

json face_json(const Face& f) { return json(f); }

// ---- verify suites -------------------------------------------------------

struct CheckList {
    json checks = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"pass", pass}});
        if (!pass) all_pass = false;
    }
};

void verify_gadgets(CheckList& cl) {
    SimplicialComplex f21 = build_F({2, 1});
    cl.add("F(2,1) f-vector (7,21,35)",
           f21.f_vector() == std::vector<std::size_t>{7, 21, 35});
    SimplicialComplex f42 = build_F({4, 2});
    cl.add("F(4,2) f-vector (10,45,120,210,126)",
           f42.f_vector() == std::vector<std::size_t>{10, 45, 120, 210, 126});
    cl.add("G(2,1) width 3 f-vector (7,21,32)",
           build_gadget({2, 1}, 3).f_vector() == std::vector<std::size_t>{7, 21, 32});
    cl.add("G(2,1) width 1 f-vector (7,21,34)",
           build_gadget({2, 1}, 1).f_vector() == std::vector<std::size_t>{7, 21, 34});
    for (int j = 1; j <= 3; ++j) {
        auto sphere = f21.mark_subcomplex("S_" + std::to_string(j));
        cl.add("S_" + std::to_string(j) + " of F(2,1) is a 2-sphere",
               betti_mod2(boundary_complex(sphere)) == std::vector<std::size_t>{1, 0, 1});
    }
    CnfFormula phi_neg = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    SimplicialComplex kphi = build_reduction(normalize(phi_neg), {2, 1});
    cl.add("K(phi_neg) f-vector (17,63,86)",
           kphi.f_vector() == std::vector<std::size_t>{17, 63, 86});
}

void verify_torus(CheckList& cl) {
    SimplicialComplex t1 = build_torus(1);
    cl.add("T(1) f-vector (9,27,18)",
           t1.f_vector() == std::vector<std::size_t>{9, 27, 18});
    cl.add("T(1) Betti mod 2 (1,2,1)",
           betti_mod2(boundary_complex(t1)) == std::vector<std::size_t>{1, 2, 1});
    cl.add("T(1) marks a, b are circles",
           betti_mod2(boundary_complex(t1.mark_subcomplex("a"))) ==
                   std::vector<std::size_t>{1, 1} &&
           betti_mod2(boundary_complex(t1.mark_subcomplex("b"))) ==
                   std::vector<std::size_t>{1, 1});
}

void verify_vk(CheckList& cl) {
    SimplicialComplex k5 = SimplicialComplex::from_facets(
        {"1", "2", "3", "4", "5"},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    k5.set_name("K5");
    cl.add("v(K5, d=2) = 1 on moment coords",
           van_kampen_number(k5, 2, moment_coords(k5, 2)).v == 1);
    cl.add("K5 oracle agrees", moment_crossing_oracle(k5, 2).v == 1);
    cl.add("K5 extension parity holds", check_extension_parity(k5, 2).ok);
    SimplicialComplex f21 = build_F({2, 1});
    cl.add("v(F(2,1), d=4) = 1 on moment coords",
           van_kampen_number(f21, 4, moment_coords(f21, 4)).v == 1);
    cl.add("F(2,1) extension parity holds", check_extension_parity(f21, 4).ok);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduction from 3-CNF to simplicial complexes, with exact "
                 "van Kampen / homology / linking computations"};
    app.require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build K(phi) from a DIMACS CNF file");
    std::string cnf_path, out_path;
    int opt_k = 2;
    std::optional<int> opt_ell;
    bool theorem_regime = false;
    reduce->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
    reduce->add_option("--k", opt_k, "complex dimension k")->required();
    reduce->add_option("--ell", opt_ell, "parameter ell (default k/2)");
    reduce->add_flag("--theorem-regime", theorem_regime, "require k = 2*ell");
    reduce->add_option("-o,--output", out_path, "output complex JSON")->required();

    // gadget
    auto* gadget = app.add_subcommand("gadget", "emit a named gadget complex");
    std::string which_gadget;
    int g_k = 2, g_ell = 1, g_width = 3;
    std::string gadget_out;
    gadget->add_option("name", which_gadget, "F, G or torus")->required();
    gadget->add_option("--k", g_k, "complex dimension k");
    gadget->add_option("--ell", g_ell, "parameter ell")->required();
    gadget->add_option("--width", g_width, "clause width for G (1..3)");
    gadget->add_option("-o,--output", gadget_out, "write to file instead of stdout");

    // stats
    auto* stats = app.add_subcommand("stats", "f-vector, dimension, marks, Euler characteristic");
    std::string stats_path;
    stats->add_option("file", stats_path, "complex JSON")->required();

    // homology
    auto* homology = app.add_subcommand("homology", "Betti numbers mod 2");
    std::string hom_path, hom_sub;
    homology->add_option("file", hom_path, "complex JSON")->required();
    homology->add_option("--subcomplex", hom_sub, "restrict to a marked subcomplex");

    // deleted-product
    auto* delprod = app.add_subcommand("deleted-product", "deleted product cell counts");
    std::string dp_path;
    bool dp_betti = false;
    int dp_max_dim = -1;
    delprod->add_option("file", dp_path, "complex JSON")->required();
    delprod->add_flag("--betti", dp_betti, "also compute Betti mod 2");
    delprod->add_option("--max-dim", dp_max_dim, "cap cell dimension");

    // vk
    auto* vk = app.add_subcommand("vk", "van Kampen number of a generic linear map");
    std::string vk_path;
    int vk_dim = 0;
    bool vk_moment = false, vk_ledger = false;
    std::optional<std::uint64_t> vk_seed;
    vk->add_option("--complex", vk_path, "complex JSON")->required();
    vk->add_option("--dim", vk_dim, "ambient dimension d")->required();
    vk->add_flag("--moment", vk_moment, "use moment-curve coordinates");
    vk->add_option("--seed", vk_seed, "seed for a random generic map");
    vk->add_flag("--ledger", vk_ledger, "list every crossing pair");

    // check-parity
    auto* parity = app.add_subcommand("check-parity", "extension-parity hypothesis");
    std::string parity_path;
    int parity_dim = 0;
    parity->add_option("--complex", parity_path, "complex JSON")->required();
    parity->add_option("--dim", parity_dim, "ambient dimension d")->required();

    // lk2
    auto* lk = app.add_subcommand("lk2", "mod-2 linking number of two marked cycles");
    std::string lk_path, lk_a, lk_b;
    int lk_dim = 0;
    bool lk_moment = false;
    std::optional<std::uint64_t> lk_seed;
    lk->add_option("--complex", lk_path, "complex JSON")->required();
    lk->add_option("--cycle-a", lk_a, "mark name of the first cycle")->required();
    lk->add_option("--cycle-b", lk_b, "mark name of the second cycle")->required();
    lk->add_option("--dim", lk_dim, "ambient dimension d")->required();
    lk->add_flag("--moment", lk_moment, "use moment-curve coordinates");
    lk->add_option("--seed", lk_seed, "seed for coordinates and apex");

    // sat
    auto* sat = app.add_subcommand("sat", "brute-force satisfiability");
    std::string sat_path;
    int max_sat_vars = 24;
    sat->add_option("file", sat_path, "DIMACS CNF input")->required();
    sat->add_option("--max-sat-vars", max_sat_vars, "cap on variable count");

    // verify
    auto* verify = app.add_subcommand("verify", "run built-in invariant fixtures");
    std::string suite = "all";
    verify->add_option("--suite", suite, "gadgets, torus, vk or all")
        ->check(CLI::IsMember({"gadgets", "torus", "vk", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    json out;
    try {
        if (*reduce) {
            int ell = opt_ell.value_or(opt_k / 2);
            if (!opt_ell && opt_k % 2 != 0)
                throw PreconditionError("default ell = k/2 needs even k; pass --ell");
            GadgetParams params{opt_k, ell};
            params.validate(theorem_regime);
            CnfFormula phi = normalize(load_cnf(cnf_path));
            SimplicialComplex k = build_reduction(phi, params);
            save_complex(k, out_path);
            out["output"] = out_path;
            out["f_vector"] = k.f_vector();
            out["dimension"] = k.dim();
            out["tori"] = conflict_pairs(phi).size();
        } else if (*gadget) {
            SimplicialComplex k;
            if (which_gadget == "F") k = build_F({g_k, g_ell});
            else if (which_gadget == "G") k = build_gadget({g_k, g_ell}, g_width);
            else if (which_gadget == "torus") k = build_torus(g_ell);
            else throw PreconditionError("unknown gadget '" + which_gadget + "'");
            if (gadget_out.empty()) {
                std::cout << complex_to_json(k).dump(2) << '\n';
                return 0;
            }
            save_complex(k, gadget_out);
            out["output"] = gadget_out;
            out["f_vector"] = k.f_vector();
        } else if (*stats) {
            out = stats_json(load_complex(stats_path));
        } else if (*homology) {
            SimplicialComplex k = load_complex(hom_path);
            if (!hom_sub.empty()) k = k.mark_subcomplex(hom_sub);
            out["name"] = k.name();
            out["betti"] = betti_mod2(boundary_complex(k));
        } else if (*delprod) {
            SimplicialComplex k = load_complex(dp_path);
            DeletedProductComplex dp(k, dp_max_dim);
            out["cells"] = dp.cell_counts();
            out["truncated"] = dp.truncated();
            InvolutionReport rep = dp.check_free_involution();
            out["involution"] = {{"free", rep.free},
                                 {"boundary_commutes", rep.boundary_commutes},
                                 {"orbits", rep.orbits_by_dim}};
            if (dp_betti) out["betti"] = betti_mod2(dp.chain_complex());
        } else if (*vk) {
            SimplicialComplex k = load_complex(vk_path);
            CoordMap cm = coords_for(k, vk_dim, vk_moment, vk_seed);
            VkResult r = van_kampen_number(k, vk_dim, cm);
            out["v"] = r.v;
            out["pairs_checked"] = r.pairs_checked;
            out["crossings"] = r.ledger.size();
            out["seed"] = cm.certificate;
            if (vk_ledger) {
                json ledger = json::array();
                for (const auto& [s, t] : r.ledger)
                    ledger.push_back({face_json(s), face_json(t)});
                out["ledger"] = ledger;
            }
        } else if (*parity) {
            SimplicialComplex k = load_complex(parity_path);
            ParityReport r = check_extension_parity(k, parity_dim);
            out["ok"] = r.ok;
            if (!r.ok) {
                out["witness"] = {{"sigma", face_json(r.sigma)},
                                  {"tau", face_json(r.tau)},
                                  {"extensions_of_sigma", r.extensions_of_sigma},
                                  {"extensions_of_tau", r.extensions_of_tau}};
            }
        } else if (*lk) {
            SimplicialComplex k = load_complex(lk_path);
            CoordMap cm = coords_for(k, lk_dim, lk_moment, lk_seed);
            PLCycle ca{k.mark(lk_a), &cm};
            PLCycle cb{k.mark(lk_b), &cm};
            Lk2Result r = lk2_seeded(ca, cb, lk_seed.value_or(1));
            out["lk2"] = r.value;
            out["coords"] = cm.certificate;
            out["apex_subseed"] = r.subseed;
        } else if (*sat) {
            CnfFormula phi = load_cnf(sat_path);
            SatResult r = brute_force_sat(phi, max_sat_vars);
            out["satisfiable"] = r.satisfiable;
            if (r.witness) out["witness"] = *r.witness;
        } else if (*verify) {
            CheckList cl;
            if (suite == "gadgets" || suite == "all") verify_gadgets(cl);
            if (suite == "torus" || suite == "all") verify_torus(cl);
            if (suite == "vk" || suite == "all") verify_vk(cl);
            out["suite"] = suite;
            out["checks"] = cl.checks;
            out["all_pass"] = cl.all_pass;
            if (!cl.all_pass) {
                std::cout << out.dump(2) << '\n';
                return 4;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }

    // duration goes to stderr so identical requests stay byte-identical on stdout
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "done in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    std::cout << out.dump(2) << '\n';
    return 0;
}
