#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwlin/ring.hpp"

namespace cwlin {

// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int32_t> exps);

    int nvars() const { return static_cast<int>(e_.size()); }
    int32_t exp(int i) const { return e_[i]; }
    int32_t deg() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    const std::vector<int32_t>& exps() const { return e_; }

    // x_i -> x_i^(e_i + delta); maintains the degree cache.
    void bump(int i, int32_t delta);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<int32_t> e_;
    int32_t deg_ = 0;
};

Monomial mono_one(const RingCtx& ring);
Monomial mono_var(const RingCtx& ring, int i, int32_t k = 1);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Total degree restricted to a variable range [lo, hi).
int32_t mono_deg_range(const Monomial& m, int lo, int hi);

// Power product in ring syntax ("x1^2*y3"), "1" for the unit.
std::string mono_to_string(const Monomial& m, const RingCtx& ring);

struct MonoHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int32_t v : m.exps()) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace cwlin
