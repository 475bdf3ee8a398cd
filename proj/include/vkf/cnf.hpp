#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vkf {

// sign = 1 means the positive literal x_var, sign = 0 means the negation.
struct Literal {
    int var = 1;  // 1-based
    int sign = 1; // 0 or 1

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    std::vector<Literal> literals;

    int width() const { return static_cast<int>(literals.size()); }
    friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// A pair of literal positions holding x_m (at r) and its negation (at q) in
// different clauses.  Indices are 1-based, matching clause/literal numbering.
struct ConflictPair {
    int q_clause = 0, q_pos = 0; // the sign-0 occurrence
    int r_clause = 0, r_pos = 0; // the sign-1 occurrence

    friend bool operator==(const ConflictPair&, const ConflictPair&) = default;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& phi);

// Drops tautological clauses, deduplicates repeated literals, enforces
// width <= 3.  Idempotent.
CnfFormula normalize(const CnfFormula& phi);

// The conflict set P, ordered lexicographically on (q_clause, q_pos, r_clause, r_pos).
std::vector<ConflictPair> conflict_pairs(const CnfFormula& phi);

struct SatResult {
    bool satisfiable = false;
    // witness[i] is the value of x_{i+1}; present iff satisfiable.
    std::optional<std::vector<int>> witness;
};

// Exhaustive evaluation over all 2^n assignments; smallest witness returned.
SatResult brute_force_sat(const CnfFormula& phi, int max_vars = 24);

} // namespace vkf
