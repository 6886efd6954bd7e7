#include "cwlin/monomial_ideal.hpp"

#include <algorithm>

#include "cwlin/errors.hpp"

namespace cwlin {

namespace {

// Canonical generator order: descending degrevlex along the declared chain.
bool canon_less(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() > b.deg();
    auto ord = MonomialOrder::degrevlex(a.nvars());
    return mono_cmp(a, b, ord) > 0;
}

} // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.exps() < b.exps();
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const Monomial& m : ms) {
        bool redundant = false;
        for (const Monomial& g : out)
            if (mono_divides(g, m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), canon_less);
    return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize_monomials(std::move(gens))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (mono_divides(g, m)) return true;
    return false;
}

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gs = a.gens();
    gs.insert(gs.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ring(), std::move(gs));
}

MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gs;
    gs.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gs.push_back(mono_mul(u, v));
    return MonomialIdeal(a.ring(), std::move(gs));
}

MonomialIdeal monomial_power(const MonomialIdeal& a, int k) {
    if (k <= 0) throw input_error("power exponent must be >= 1");
    MonomialIdeal r = a;
    for (int i = 1; i < k; ++i) r = monomial_product(r, a);
    return r;
}

MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gs;
    gs.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gs.push_back(mono_lcm(u, v));
    return MonomialIdeal(a.ring(), std::move(gs));
}

MonomialIdeal monomial_colon(const MonomialIdeal& a, const Monomial& f) {
    std::vector<Monomial> gs;
    gs.reserve(a.gens().size());
    for (const Monomial& g : a.gens()) gs.push_back(mono_div(g, mono_gcd(g, f)));
    return MonomialIdeal(a.ring(), std::move(gs));
}

std::string monomial_ideal_to_string(const MonomialIdeal& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.gens().size(); ++i) {
        if (i) s += ", ";
        s += mono_to_string(a.gens()[i], *a.ring());
    }
    if (a.gens().empty()) s += "0";
    return s + ")";
}

} // namespace cwlin
