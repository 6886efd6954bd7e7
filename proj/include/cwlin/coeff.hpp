#pragma once

#include <gmpxx.h>

#include <string>

#include "cwlin/errors.hpp"

namespace cwlin {

// Exact coefficient: a rational in characteristic 0, or a canonical
// representative 0..p-1 (denominator 1) in characteristic p.
using Coeff = mpq_class;

// Coefficient field operations parameterized by the characteristic.
// All results are canonical: mpq-reduced in char 0, reduced mod p otherwise.
class CoeffField {
public:
    explicit CoeffField(unsigned long p = 0) : p_(p) {}

    unsigned long characteristic() const { return p_; }

    Coeff reduce(const Coeff& a) const;
    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;

    static bool is_zero(const Coeff& a) { return sgn(a) == 0; }

private:
    unsigned long p_;
};

std::string coeff_to_string(const Coeff& a);

} // namespace cwlin
