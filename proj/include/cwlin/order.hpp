#pragma once

#include <string>
#include <vector>

#include "cwlin/monomial.hpp"

namespace cwlin {

enum class OrderKind { Lex, DegRevLex, BlockElim };

// A monomial order: lex or degrevlex along an explicit priority chain
// (perm[0] is the greatest variable), or a block elimination order whose
// first `elim` chain entries are compared before the rest.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::vector<int> perm;  // permutation of 0..nvars-1
    int elim = 0;           // BlockElim only: size of the eliminated block
    OrderKind inner = OrderKind::DegRevLex;  // BlockElim only: per-block order

    static MonomialOrder lex(int nvars);
    static MonomialOrder lex(std::vector<int> chain);
    static MonomialOrder degrevlex(int nvars);
    static MonomialOrder degrevlex(std::vector<int> chain);
    // Eliminated variables first (in declared order), then the rest.
    static MonomialOrder block_elim(int nvars, const std::vector<int>& elim_vars,
                                    OrderKind inner = OrderKind::DegRevLex);

    // Stable identity string, used as the Groebner cache key.
    std::string key() const;

    void validate(int nvars) const;
};

// Three-way comparison: >0 iff a > b under ord.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

} // namespace cwlin
