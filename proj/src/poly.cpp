#include "cwlin/poly.hpp"

#include <algorithm>

namespace cwlin {

int32_t Poly::total_degree() const {
    int32_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

Poly Poly::make(std::vector<Term> ts, const CoeffField& F, const MonomialOrder& ord) {
    for (Term& t : ts) t.c = F.reduce(t.c);
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ord) > 0; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (Term& t : ts) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = F.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && CoeffField::is_zero(out.back().c)) out.pop_back();
    }
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::from_sorted(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    return p;
}

Poly poly_zero() { return Poly(); }

Poly poly_const(const RingCtx& ring, const Coeff& c) {
    if (CoeffField::is_zero(c)) return Poly();
    return Poly::from_sorted({Term{c, mono_one(ring)}});
}

Poly poly_var(const RingCtx& ring, int i) {
    return Poly::from_sorted({Term{Coeff(1), mono_var(ring, i)}});
}

Poly poly_term(const Coeff& c, const Monomial& m) {
    if (CoeffField::is_zero(c)) return Poly();
    return Poly::from_sorted({Term{c, m}});
}

Poly poly_add(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.nterms() + b.nterms());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = mono_cmp(ta[i].m, tb[j].m, ord);
        if (c > 0)
            out.push_back(ta[i++]);
        else if (c < 0)
            out.push_back(tb[j++]);
        else {
            Coeff s = F.add(ta[i].c, tb[j].c);
            if (!CoeffField::is_zero(s)) out.push_back(Term{std::move(s), ta[i].m});
            ++i, ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return Poly::from_sorted(std::move(out));
}

Poly poly_neg(const Poly& a, const CoeffField& F) {
    std::vector<Term> out = a.terms();
    for (Term& t : out) t.c = F.neg(t.c);
    return Poly::from_sorted(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord) {
    return poly_add(a, poly_neg(b, F), F, ord);
}

Poly poly_mul_term(const Poly& a, const Coeff& c, const Monomial& m, const CoeffField& F) {
    if (CoeffField::is_zero(c)) return Poly();
    std::vector<Term> out;
    out.reserve(a.nterms());
    for (const Term& t : a.terms()) {
        Coeff p = F.mul(t.c, c);
        if (!CoeffField::is_zero(p)) out.push_back(Term{std::move(p), mono_mul(t.m, m)});
    }
    return Poly::from_sorted(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord) {
    std::vector<Term> acc;
    acc.reserve(static_cast<size_t>(a.nterms()) * b.nterms());
    for (const Term& s : a.terms())
        for (const Term& t : b.terms())
            acc.push_back(Term{F.mul(s.c, t.c), mono_mul(s.m, t.m)});
    return Poly::make(std::move(acc), F, ord);
}

Poly poly_pow(const Poly& a, int k, const CoeffField& F, const MonomialOrder& ord) {
    if (k < 0) throw input_error("negative power");
    if (a.is_zero()) {
        if (k == 0) throw input_error("0^0 is undefined");
        return Poly();
    }
    Poly r = Poly::from_sorted({Term{Coeff(1), Monomial(a.lt().m.nvars())}});
    Poly base = a;
    while (k > 0) {
        if (k & 1) r = poly_mul(r, base, F, ord);
        k >>= 1;
        if (k) base = poly_mul(base, base, F, ord);
    }
    return r;
}

Poly poly_axpy(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b,
               const CoeffField& F, const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(a.nterms() + b.nterms());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    Monomial shifted;
    size_t shifted_for = SIZE_MAX;
    while (i < ta.size() || j < tb.size()) {
        if (j < tb.size() && j != shifted_for) {
            shifted = mono_mul(tb[j].m, m);
            shifted_for = j;
        }
        int cv;
        if (i >= ta.size())
            cv = -1;
        else if (j >= tb.size())
            cv = 1;
        else
            cv = mono_cmp(ta[i].m, shifted, ord);
        if (cv > 0) {
            out.push_back(ta[i++]);
        } else if (cv < 0) {
            Coeff v = F.neg(F.mul(c, tb[j].c));
            if (!CoeffField::is_zero(v)) out.push_back(Term{std::move(v), shifted});
            ++j;
        } else {
            Coeff v = F.sub(ta[i].c, F.mul(c, tb[j].c));
            if (!CoeffField::is_zero(v)) out.push_back(Term{std::move(v), ta[i].m});
            ++i, ++j;
        }
    }
    return Poly::from_sorted(std::move(out));
}

Poly poly_primitive(const Poly& a, const CoeffField& F) {
    if (a.is_zero()) return a;
    if (F.characteristic() != 0) return poly_monic(a, F);
    mpz_class den_lcm(1), num_gcd(0);
    for (const Term& t : a.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    }
    Coeff scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(a.lc()) < 0) scale = -scale;
    std::vector<Term> out = a.terms();
    for (Term& t : out) t.c = t.c * scale;
    return Poly::from_sorted(std::move(out));
}

Poly poly_monic(const Poly& a, const CoeffField& F) {
    if (a.is_zero()) return a;
    Coeff ic = F.inv(a.lc());
    std::vector<Term> out = a.terms();
    for (Term& t : out) t.c = F.mul(t.c, ic);
    return Poly::from_sorted(std::move(out));
}

Poly poly_divexact(const Poly& a, const Poly& b, const CoeffField& F, const MonomialOrder& ord) {
    if (b.is_zero()) throw internal_error("division by the zero polynomial");
    Poly r = a;
    std::vector<Term> q;
    while (!r.is_zero()) {
        if (!mono_divides(b.lm(), r.lm()))
            throw internal_error("exact polynomial division failed");
        Coeff c = F.div(r.lc(), b.lc());
        Monomial m = mono_div(r.lm(), b.lm());
        q.push_back(Term{c, m});
        r = poly_axpy(r, c, m, b, F, ord);
    }
    return Poly::make(std::move(q), F, ord);
}

Poly poly_resort(const Poly& a, const CoeffField& F, const MonomialOrder& ord) {
    return Poly::make(a.terms(), F, ord);
}

Poly poly_substitute(const Poly& a, const std::vector<std::optional<Poly>>& images,
                     const RingCtx& ring, const CoeffField& F, const MonomialOrder& ord) {
    Poly acc;
    for (const Term& t : a.terms()) {
        Poly prod = poly_term(t.c, mono_one(ring));
        Monomial rest = mono_one(ring);
        for (int i = 0; i < t.m.nvars(); ++i) {
            int32_t e = t.m.exp(i);
            if (e == 0) continue;
            if (i < static_cast<int>(images.size()) && images[i].has_value()) {
                prod = poly_mul(prod, poly_pow(*images[i], e, F, ord), F, ord);
                if (prod.is_zero()) break;
            } else {
                rest.bump(i, e);
            }
        }
        if (!prod.is_zero() && !rest.is_one()) prod = poly_mul_term(prod, Coeff(1), rest, F);
        acc = poly_add(acc, prod, F, ord);
    }
    return acc;
}

Poly poly_kill_vars(const Poly& a, const std::vector<int>& vars) {
    std::vector<Term> out;
    out.reserve(a.nterms());
    for (const Term& t : a.terms()) {
        bool hit = false;
        for (int v : vars)
            if (t.m.exp(v) > 0) {
                hit = true;
                break;
            }
        if (!hit) out.push_back(t);
    }
    return Poly::from_sorted(std::move(out));
}

Poly poly_lift(const Poly& a, int extra) {
    std::vector<Term> out;
    out.reserve(a.nterms());
    for (const Term& t : a.terms()) {
        std::vector<int32_t> e = t.m.exps();
        e.insert(e.end(), extra, 0);
        out.push_back(Term{t.c, Monomial(std::move(e))});
    }
    return Poly::from_sorted(std::move(out));
}

Poly poly_project(const Poly& a, int extra) {
    std::vector<Term> out;
    out.reserve(a.nterms());
    for (const Term& t : a.terms()) {
        std::vector<int32_t> e = t.m.exps();
        for (int k = 0; k < extra; ++k) {
            if (e.back() != 0) throw internal_error("projection of a non-free variable");
            e.pop_back();
        }
        out.push_back(Term{t.c, Monomial(std::move(e))});
    }
    return Poly::from_sorted(std::move(out));
}

bool poly_is_monomial_times_scalar(const Poly& a) { return a.nterms() == 1; }

bool poly_is_linear_form(const Poly& a, const RingCtx& ring) {
    for (const Term& t : a.terms()) {
        if (t.m.deg() != 1) return false;
        if (mono_deg_range(t.m, 0, ring.x_count()) != 1) return false;
    }
    return !a.is_zero();
}

bool poly_homogeneous_in_range(const Poly& a, int lo, int hi) {
    if (a.is_zero()) return true;
    int32_t d = mono_deg_range(a.terms().front().m, lo, hi);
    for (const Term& t : a.terms())
        if (mono_deg_range(t.m, lo, hi) != d) return false;
    return true;
}

std::string poly_to_string(const Poly& a, const RingCtx& ring) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : a.terms()) {
        Coeff c = t.c;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        Coeff abs_c = negative ? Coeff(-c) : c;
        std::string ms = mono_to_string(t.m, ring);
        if (t.m.is_one()) {
            s += coeff_to_string(abs_c);
        } else if (abs_c == 1) {
            s += ms;
        } else {
            s += coeff_to_string(abs_c) + "*" + ms;
        }
        first = false;
    }
    return s;
}

} // namespace cwlin
