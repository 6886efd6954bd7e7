#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cwlin/monomial_ideal.hpp"
#include "cwlin/poly.hpp"

namespace cwlin {

struct GBLimits {
    uint64_t max_pair_reductions = 1'000'000;
    double max_seconds = 600.0;
};

// Reduced Groebner basis: monic elements, pairwise non-divisible leading
// monomials, no monomial of any element in the initial ideal of the others.
// Elements are sorted descending by leading monomial, so the basis is a
// canonical ideal invariant.
struct GroebnerBasis {
    MonomialOrder ord;
    std::vector<Poly> elems;
};

// Generator list plus a cache of reduced Groebner bases keyed by order.
// Immutable after construction; the cache is shared across copies and
// guarded by a mutex.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);  // zero generators are dropped

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_monomial() const;

    const GroebnerBasis& groebner(const MonomialOrder& ord, const GBLimits& lim = {}) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
    };

    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and normal
// selection (minimal lcm degree, ties by index pair).  Deterministic; throws
// resource_limit_error when a cap is hit.
GroebnerBasis buchberger(const RingCtx& ring, const std::vector<Poly>& gens,
                         const MonomialOrder& ord, const GBLimits& lim = {});

// Full normal form; reduces by the first basis element whose leading
// monomial divides, in the stored order.
Poly normal_form(const Poly& f, const GroebnerBasis& gb, const CoeffField& F);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const CoeffField& F,
                 const MonomialOrder& ord);

// Leading monomials of a reduced basis = minimal generators of in(I).
MonomialIdeal initial_ideal(const RingPtr& ring, const GroebnerBasis& gb);

Poly s_polynomial(const Poly& f, const Poly& g, const CoeffField& F, const MonomialOrder& ord);

} // namespace cwlin
