#pragma once

#include "cwlin/idealops.hpp"

namespace cwlin {

// Presentation of the Rees algebra of an ideal: T = S[y_1..y_m] maps onto
// R(I) by y_j -> f_j, and `kernel` is the kernel of that map.
struct ReesPresentation {
    RingPtr base;               // S
    RingPtr ext;                // T = S[y_1..y_m]
    std::vector<Poly> images;   // f_1..f_m, in S
    Ideal kernel;               // J, in T, interreduced and monic
};

// Kernel via elimination of the auxiliary variable from (y_j - w f_j : j).
ReesPresentation rees_ideal(const Ideal& ideal, const GBLimits& lim = {});

// Every kernel generator must vanish identically under y_j -> w f_j.
// Returns the indices of generators that fail (empty = sound).
std::vector<int> substitution_defects(const ReesPresentation& p);

struct XConditionResult {
    bool holds = false;
    MonomialIdeal initial;            // in(J) under lex, x-block first
    std::vector<Monomial> offending;  // minimal generators of x-degree >= 2
};

// Lex order with every base variable greater than every presentation
// variable; the condition asks all minimal generators of in(J) to have
// degree <= 1 in the base block.
XConditionResult x_condition(const ReesPresentation& p, const GBLimits& lim = {});

} // namespace cwlin
