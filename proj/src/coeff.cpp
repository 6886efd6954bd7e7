#include "cwlin/coeff.hpp"

namespace cwlin {

Coeff CoeffField::reduce(const Coeff& a) const {
    if (p_ == 0) return a;
    // Canonical residue 0..p-1; denominators are cleared via inversion.
    mpz_class p(p_);
    mpz_class num = a.get_num(), den = a.get_den();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw input_error("denominator not invertible modulo the characteristic");
    mpz_class r = (num * dinv) % p;
    if (r < 0) r += p;
    return Coeff(r);
}

Coeff CoeffField::add(const Coeff& a, const Coeff& b) const {
    return p_ == 0 ? Coeff(a + b) : reduce(a + b);
}

Coeff CoeffField::sub(const Coeff& a, const Coeff& b) const {
    return p_ == 0 ? Coeff(a - b) : reduce(a - b);
}

Coeff CoeffField::mul(const Coeff& a, const Coeff& b) const {
    return p_ == 0 ? Coeff(a * b) : reduce(a * b);
}

Coeff CoeffField::div(const Coeff& a, const Coeff& b) const {
    if (is_zero(b)) throw internal_error("division by zero coefficient");
    if (p_ == 0) return Coeff(a / b);
    return mul(a, inv(b));
}

Coeff CoeffField::neg(const Coeff& a) const {
    return p_ == 0 ? Coeff(-a) : reduce(-a);
}

Coeff CoeffField::inv(const Coeff& a) const {
    if (is_zero(a)) throw internal_error("inverse of zero coefficient");
    if (p_ == 0) return Coeff(1 / a);
    Coeff r = reduce(a);
    mpz_class p(p_), v;
    if (mpz_invert(v.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("non-invertible residue");
    return Coeff(v);
}

std::string coeff_to_string(const Coeff& a) {
    return a.get_str();
}

} // namespace cwlin
