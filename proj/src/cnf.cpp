#include "vkf/cnf.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "vkf/errors.hpp"

namespace vkf {

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula phi;
    int declared_clauses = -1;
    bool header_seen = false;
    Clause cur;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == 'c') continue;
        if (first == "p") {
            if (header_seen) throw ParseError("dimacs: duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> phi.num_vars >> declared_clauses) || fmt != "cnf")
                throw ParseError("dimacs: malformed header");
            if (phi.num_vars < 0 || declared_clauses < 0)
                throw ParseError("dimacs: negative counts in header");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("dimacs: clause before header");
        ls.clear();
        ls.str(line);
        int x;
        while (ls >> x) {
            if (x == 0) {
                if (cur.literals.empty()) throw ParseError("dimacs: empty clause");
                phi.clauses.push_back(std::move(cur));
                cur = Clause{};
                continue;
            }
            int var = x > 0 ? x : -x;
            if (var > phi.num_vars)
                throw ParseError("dimacs: variable " + std::to_string(var) +
                                 " out of range (n = " + std::to_string(phi.num_vars) + ")");
            cur.literals.push_back({var, x > 0 ? 1 : 0});
        }
        if (!ls.eof()) throw ParseError("dimacs: non-integer token in clause line");
    }
    if (!header_seen) throw ParseError("dimacs: missing header");
    if (!cur.literals.empty()) throw ParseError("dimacs: last clause not 0-terminated");
    if (phi.num_clauses() != declared_clauses)
        throw ParseError("dimacs: header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(phi.num_clauses()));
    return phi;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string write_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.num_clauses() << '\n';
    for (const Clause& c : phi.clauses) {
        for (const Literal& l : c.literals) out << (l.sign ? l.var : -l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula normalize(const CnfFormula& phi) {
    CnfFormula out;
    out.num_vars = phi.num_vars;
    for (const Clause& c : phi.clauses) {
        Clause kept;
        bool tautological = false;
        for (const Literal& l : c.literals) {
            if (l.var < 1 || l.var > phi.num_vars)
                throw PreconditionError("normalize: literal variable out of range");
            bool dup = false;
            for (const Literal& m : kept.literals) {
                if (m.var == l.var && m.sign == l.sign) dup = true;
                if (m.var == l.var && m.sign != l.sign) tautological = true;
            }
            if (tautological) break;
            if (!dup) kept.literals.push_back(l);
        }
        if (tautological) continue;
        if (kept.width() > 3)
            throw PreconditionError("normalize: clause of width " +
                                    std::to_string(kept.width()) + " (max 3)");
        if (kept.width() == 0) throw PreconditionError("normalize: empty clause");
        out.clauses.push_back(std::move(kept));
    }
    return out;
}

std::vector<ConflictPair> conflict_pairs(const CnfFormula& phi) {
    std::vector<ConflictPair> out;
    const int t = phi.num_clauses();
    for (int q1 = 1; q1 <= t; ++q1) {
        const Clause& cq = phi.clauses[static_cast<std::size_t>(q1 - 1)];
        for (int q2 = 1; q2 <= cq.width(); ++q2) {
            const Literal& lq = cq.literals[static_cast<std::size_t>(q2 - 1)];
            if (lq.sign != 0) continue;
            for (int r1 = 1; r1 <= t; ++r1) {
                if (r1 == q1) continue;
                const Clause& cr = phi.clauses[static_cast<std::size_t>(r1 - 1)];
                for (int r2 = 1; r2 <= cr.width(); ++r2) {
                    const Literal& lr = cr.literals[static_cast<std::size_t>(r2 - 1)];
                    if (lr.sign == 1 && lr.var == lq.var)
                        out.push_back({q1, q2, r1, r2});
                }
            }
        }
    }
    // enumeration above is already lexicographic on (q1,q2,r1,r2)
    return out;
}

SatResult brute_force_sat(const CnfFormula& phi, int max_vars) {
    if (phi.num_vars > max_vars)
        throw PreconditionError("brute_force_sat: " + std::to_string(phi.num_vars) +
                                " variables exceeds cap " + std::to_string(max_vars));
    const int n = phi.num_vars;
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
        bool ok = true;
        for (const Clause& c : phi.clauses) {
            bool sat = false;
            for (const Literal& l : c.literals) {
                int val = static_cast<int>((a >> (l.var - 1)) & 1u);
                if (val == l.sign) { sat = true; break; }
            }
            if (!sat) { ok = false; break; }
        }
        if (ok) {
            std::vector<int> witness;
            for (int i = 0; i < n; ++i) witness.push_back(static_cast<int>((a >> i) & 1u));
            return {true, witness};
        }
    }
    return {false, std::nullopt};
}

} // namespace vkf
