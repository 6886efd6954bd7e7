#include "cwlin/idealops.hpp"

#include <algorithm>

namespace cwlin {

namespace {

void ensure_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring() == b.ring()) return;
    if (a.ring() && b.ring() && a.ring()->names() == b.ring()->names() &&
        a.ring()->characteristic() == b.ring()->characteristic())
        return;
    throw input_error("ideals live in different rings");
}

MonomialOrder natural_order(const Ideal& a) {
    return MonomialOrder::degrevlex(a.ring()->nvars());
}

} // namespace

MonomialIdeal to_monomial_ideal(const Ideal& a) {
    std::vector<Monomial> ms;
    ms.reserve(a.gens().size());
    for (const Poly& g : a.gens()) {
        if (g.nterms() != 1) throw input_error("ideal is not monomial");
        ms.push_back(g.lm());
    }
    return MonomialIdeal(a.ring(), std::move(ms));
}

Ideal from_monomial_ideal(const MonomialIdeal& a) {
    std::vector<Poly> gens;
    gens.reserve(a.gens().size());
    for (const Monomial& m : a.gens()) gens.push_back(poly_term(Coeff(1), m));
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    ensure_same_ring(a, b);
    if (a.is_monomial() && b.is_monomial())
        return from_monomial_ideal(monomial_sum(to_monomial_ideal(a), to_monomial_ideal(b)));
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    ensure_same_ring(a, b);
    if (a.is_monomial() && b.is_monomial())
        return from_monomial_ideal(monomial_product(to_monomial_ideal(a), to_monomial_ideal(b)));
    CoeffField F(a.ring()->characteristic());
    MonomialOrder ord = natural_order(a);
    std::vector<Poly> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Poly& f : a.gens())
        for (const Poly& g : b.gens()) gens.push_back(poly_mul(f, g, F, ord));
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
    if (k <= 0) throw input_error("power exponent must be >= 1");
    if (a.is_monomial()) return from_monomial_ideal(monomial_power(to_monomial_ideal(a), k));
    Ideal r = a;
    for (int i = 1; i < k; ++i) r = ideal_product(r, a);
    return r;
}

Ideal ideal_eliminate(const Ideal& a, const std::vector<int>& vars, OrderKind inner,
                      const GBLimits& lim) {
    MonomialOrder ord = MonomialOrder::block_elim(a.ring()->nvars(), vars, inner);
    const GroebnerBasis& gb = a.groebner(ord, lim);
    std::vector<Poly> kept;
    for (const Poly& g : gb.elems) {
        bool free = true;
        for (const Term& t : g.terms()) {
            for (int v : vars)
                if (t.m.exp(v) > 0) {
                    free = false;
                    break;
                }
            if (!free) break;
        }
        if (free) kept.push_back(g);
    }
    return Ideal(a.ring(), std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                      const GBLimits& lim) {
    ensure_same_ring(a, b);
    (void)ord;
    if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
    if (a.is_monomial() && b.is_monomial())
        return from_monomial_ideal(
            monomial_intersect(to_monomial_ideal(a), to_monomial_ideal(b)));
    return ideal_intersect_via_elimination(a, b, lim);
}

Ideal ideal_intersect_via_elimination(const Ideal& a, const Ideal& b, const GBLimits& lim) {
    ensure_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
    const RingPtr& ring = a.ring();
    CoeffField F(ring->characteristic());
    int n = ring->nvars();
    RingPtr ring_w = extend_ring(ring, {fresh_var_name(*ring, "w")}, /*as_y=*/true);
    MonomialOrder drl_w = MonomialOrder::degrevlex(n + 1);
    Poly w = poly_var(*ring_w, n);
    Poly one_minus_w =
        poly_sub(poly_const(*ring_w, Coeff(1)), w, F, drl_w);
    std::vector<Poly> gens;
    gens.reserve(a.gens().size() + b.gens().size());
    for (const Poly& g : a.gens())
        gens.push_back(poly_mul(poly_lift(g, 1), w, F, drl_w));
    for (const Poly& h : b.gens())
        gens.push_back(poly_mul(poly_lift(h, 1), one_minus_w, F, drl_w));
    Ideal aux(ring_w, std::move(gens));
    Ideal elim = ideal_eliminate(aux, {n}, OrderKind::DegRevLex, lim);
    std::vector<Poly> out;
    out.reserve(elim.gens().size());
    for (const Poly& g : elim.gens()) out.push_back(poly_project(g, 1));
    return Ideal(ring, std::move(out));
}

Ideal ideal_colon(const Ideal& a, const Poly& f, const MonomialOrder& ord, const GBLimits& lim) {
    if (f.is_zero()) throw input_error("colon by the zero polynomial");
    if (f.nterms() == 1 && f.lm().is_one()) return a;  // unit divisor
    if (a.is_monomial() && f.nterms() == 1)
        return from_monomial_ideal(monomial_colon(to_monomial_ideal(a), f.lm()));
    return ideal_colon_via_elimination(a, f, ord, lim);
}

Ideal ideal_colon_via_elimination(const Ideal& a, const Poly& f, const MonomialOrder& ord,
                                  const GBLimits& lim) {
    if (f.is_zero()) throw input_error("colon by the zero polynomial");
    CoeffField F(a.ring()->characteristic());
    if (f.nterms() == 1 && f.lm().is_one()) return a;
    Ideal inter = ideal_intersect_via_elimination(a, Ideal(a.ring(), {f}), lim);
    (void)ord;
    MonomialOrder nat = natural_order(a);
    std::vector<Poly> out;
    out.reserve(inter.gens().size());
    for (const Poly& g : inter.gens())
        out.push_back(poly_divexact(poly_resort(g, F, nat), poly_resort(f, F, nat), F, nat));
    return Ideal(a.ring(), std::move(out));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord, const GBLimits& lim) {
    ensure_same_ring(a, b);
    const GroebnerBasis& ga = a.groebner(ord, lim);
    const GroebnerBasis& gb = b.groebner(ord, lim);
    return ga.elems == gb.elems;
}

bool ideal_contained(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                     const GBLimits& lim) {
    ensure_same_ring(a, b);
    CoeffField F(a.ring()->characteristic());
    const GroebnerBasis& gb = b.groebner(ord, lim);
    for (const Poly& g : a.gens())
        if (!normal_form(poly_resort(g, F, ord), gb, F).is_zero()) return false;
    return true;
}

} // namespace cwlin
