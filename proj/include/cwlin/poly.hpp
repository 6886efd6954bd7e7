#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwlin/coeff.hpp"
#include "cwlin/order.hpp"

namespace cwlin {

struct Term {
    Coeff c;
    Monomial m;

    bool operator==(const Term& o) const { return c == o.c && m == o.m; }
};

// Sparse polynomial: terms with nonzero coefficients, strictly decreasing
// under the ambient order the polynomial was built with.  Zero is the empty
// term list.
class Poly {
public:
    Poly() = default;

    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lt() const { return terms_.front(); }
    const Coeff& lc() const { return terms_.front().c; }
    const Monomial& lm() const { return terms_.front().m; }

    int32_t total_degree() const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Construction from an arbitrary term list: sorts, merges duplicates,
    // drops zeros.
    static Poly make(std::vector<Term> ts, const CoeffField& F, const MonomialOrder& ord);

    // Trusted constructor: `ts` already canonical for ord.
    static Poly from_sorted(std::vector<Term> ts);

private:
    std::vector<Term> terms_;
};

Poly poly_zero();
Poly poly_const(const RingCtx& ring, const Coeff& c);
Poly poly_var(const RingCtx& ring, int i);
Poly poly_term(const Coeff& c, const Monomial& m);

Poly poly_add(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord);
Poly poly_sub(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord);
Poly poly_neg(const Poly& a, const CoeffField& F);
Poly poly_mul_term(const Poly& a, const Coeff& c, const Monomial& m, const CoeffField& F);
Poly poly_mul(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord);
Poly poly_pow(const Poly& a, int k, const CoeffField& F, const MonomialOrder& ord);

// a - c * x^m * b in one merge pass; the workhorse of polynomial reduction.
Poly poly_axpy(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b,
               const CoeffField& F, const MonomialOrder& ord);

// Divide out denominators and integer content, normalize the leading
// coefficient to be positive (char 0) resp. 1 (char p).
Poly poly_primitive(const Poly& a, const CoeffField& F);
Poly poly_monic(const Poly& a, const CoeffField& F);

// Exact division; throws internal_error if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord);

// Re-sorts the terms of `a` under a (possibly different) order.
Poly poly_resort(const Poly& a, const CoeffField& F, const MonomialOrder& ord);

// Substitute images[i] (when present) for variable i; identity otherwise.
// Images live in the same ring; result is canonical under ord.
Poly poly_substitute(const Poly& a, const std::vector<std::optional<Poly>>& images,
                     const RingCtx& ring, const CoeffField& F, const MonomialOrder& ord);

// Substitute 0 for the listed variables: drops every term touching them.
Poly poly_kill_vars(const Poly& a, const std::vector<int>& vars);

// Append `extra` zero exponents to every term (ring extension embedding).
Poly poly_lift(const Poly& a, int extra);
// Drop the last `extra` exponents; requires them to be zero.
Poly poly_project(const Poly& a, int extra);

bool poly_is_monomial_times_scalar(const Poly& a);
// True if every term is linear and supported on the x-block.
bool poly_is_linear_form(const Poly& a, const RingCtx& ring);

// y-degree (resp. x-degree) homogeneity over the ring's block split.
bool poly_homogeneous_in_range(const Poly& a, int lo, int hi);

std::string poly_to_string(const Poly& a, const RingCtx& ring);

} // namespace cwlin
