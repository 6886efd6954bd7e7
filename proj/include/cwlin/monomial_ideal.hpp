#pragma once

#include <vector>

#include "cwlin/monomial.hpp"
#include "cwlin/order.hpp"

namespace cwlin {

// A monomial ideal held by its unique minimal generating set (a divisibility
// antichain, sorted for canonical form).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    int ngens() const { return static_cast<int>(gens_.size()); }

    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;  // minimal, sorted descending under degrevlex
};

// Divisibility-antichain reduction of an arbitrary monomial list.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms);

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_power(const MonomialIdeal& a, int k);
// Pairwise-lcm intersection.
MonomialIdeal monomial_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// Colon by a monomial: generated by g / gcd(g, f).
MonomialIdeal monomial_colon(const MonomialIdeal& a, const Monomial& f);

std::string monomial_ideal_to_string(const MonomialIdeal& a);

} // namespace cwlin
