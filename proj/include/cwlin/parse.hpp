#pragma once

#include <string>
#include <vector>

#include "cwlin/poly.hpp"

namespace cwlin {

// Parses "+ - * ^ ( )" expressions over the declared variables with integer
// or a/b rational coefficients.  Canonical under ord; parse-print-parse is
// the identity.
Poly parse_poly(const std::string& text, const RingCtx& ring, const MonomialOrder& ord);

// "ring x1 x2 | y1 y2 ; char=7"  -- the | split and char are optional.
RingPtr parse_ring_line(const std::string& line);

struct IdealFile {
    RingPtr ring;
    std::vector<Poly> gens;   // one generator per non-empty, non-# line
};

IdealFile parse_ideal_text(const std::string& text, const MonomialOrder* ord = nullptr);
IdealFile load_ideal_file(const std::string& path);

// Semicolon-separated list of polynomials ("x1; x2+x4; x2").
std::vector<Poly> parse_poly_list(const std::string& text, const RingCtx& ring,
                                  const MonomialOrder& ord);

} // namespace cwlin
