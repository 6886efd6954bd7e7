#pragma once

#include "cwlin/groebner.hpp"

namespace cwlin {

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// k >= 1; monomial ideals come back minimalized.
Ideal ideal_power(const Ideal& a, int k);

// Intersection.  Monomial ideals go through pairwise lcms; the generic path
// adjoins an auxiliary variable w and eliminates it from w*a + (1-w)*b.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                      const GBLimits& lim = {});

// a : f, computed as (a intersect (f)) / f; when a is monomial and f is a
// term the combinatorial colon is used.
Ideal ideal_colon(const Ideal& a, const Poly& f, const MonomialOrder& ord,
                  const GBLimits& lim = {});

// The elimination routes, bypassing the monomial fast paths.  The fast paths
// must agree with these (property-tested).
Ideal ideal_intersect_via_elimination(const Ideal& a, const Ideal& b, const GBLimits& lim = {});
Ideal ideal_colon_via_elimination(const Ideal& a, const Poly& f, const MonomialOrder& ord,
                                  const GBLimits& lim = {});

// Generators of a n K[vars complement]: block elimination order, keep the
// basis elements free of `vars`.
Ideal ideal_eliminate(const Ideal& a, const std::vector<int>& vars,
                      OrderKind inner = OrderKind::DegRevLex, const GBLimits& lim = {});

// Reduced Groebner bases coincide as sets.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                 const GBLimits& lim = {});

// Every generator of `a` has normal form zero against gb(b).
bool ideal_contained(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                     const GBLimits& lim = {});

// Monomial bridge helpers.
MonomialIdeal to_monomial_ideal(const Ideal& a);
Ideal from_monomial_ideal(const MonomialIdeal& a);

} // namespace cwlin
