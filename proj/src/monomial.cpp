#include "cwlin/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "cwlin/errors.hpp"

namespace cwlin {

Monomial::Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
    deg_ = 0;
    for (int32_t v : e_) {
        if (v < 0) throw input_error("negative exponent");
        deg_ += v;
    }
}

void Monomial::bump(int i, int32_t delta) {
    e_[i] += delta;
    deg_ += delta;
    if (e_[i] < 0) throw internal_error("exponent went negative");
}

Monomial mono_one(const RingCtx& ring) { return Monomial(ring.nvars()); }

Monomial mono_var(const RingCtx& ring, int i, int32_t k) {
    Monomial m(ring.nvars());
    m.bump(i, k);
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i)
        if (b.exp(i)) r.bump(i, b.exp(i));
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg() > b.deg()) return false;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i)) r.bump(i, -a.exp(i));
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

int32_t mono_deg_range(const Monomial& m, int lo, int hi) {
    int32_t d = 0;
    for (int i = lo; i < hi; ++i) d += m.exp(i);
    return d;
}

std::string mono_to_string(const Monomial& m, const RingCtx& ring) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(i);
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

} // namespace cwlin
