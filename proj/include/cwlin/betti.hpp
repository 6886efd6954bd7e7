#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwlin/monomial_ideal.hpp"

namespace cwlin {

struct BettiLimits {
    int max_vars = 8;
    int max_lcm_degree = 24;
    size_t max_lattice = 1 << 16;
};

// Graded Betti numbers beta_{i,j}; only nonzero entries are stored.
class BettiTable {
public:
    std::map<std::pair<int, int>, long> entries;

    long at(int i, int j) const;
    void add(int i, int j, long v);
    int regularity() const;  // max j - i over nonzero entries
    int max_index() const;   // largest homological index i
    std::string to_diagram() const;
};

// Rational simplicial complex, used only for homology ranks.  Faces are
// bitmasks over local vertices 0..nverts-1; the empty face is mask 0.
struct SimplicialComplexQ {
    int nverts = 0;
    std::vector<uint32_t> faces;  // subset-closed, sorted, includes 0 when nonvoid

    std::vector<uint32_t> facets() const;
};

enum class RankMethod { RationalGauss, Bareiss };

// The complex at multidegree b: subsets s of supp(b) with x^(b-s) in M.
SimplicialComplexQ upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

// ranks[k] = dim of reduced homology in dimension k-1 (k = face cardinality),
// k = 0..nverts.  Verified against the reduced Euler characteristic.
std::vector<long> reduced_homology_ranks(const SimplicialComplexQ& K,
                                         RankMethod method = RankMethod::RationalGauss);

// Joins of generator subsets, computed as the closure of the generators
// under pairwise lcm; every multidegree with nonzero homology lies here.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const BettiLimits& lim = {});

BettiTable betti_numbers(const MonomialIdeal& ideal, const BettiLimits& lim = {});

// All generators in one degree d and beta_{i,j} = 0 whenever j != i + d.
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiLimits& lim = {});

// Generators of the degree-j part: degree-j multiples of the generators of
// degree <= j, minimalized.
MonomialIdeal degree_component(const MonomialIdeal& ideal, int j);

struct CwlComponent {
    int degree = 0;
    int ngens = 0;
    bool linear = false;
};

struct CwlResult {
    bool componentwise_linear = false;
    int reg = 0;
    std::vector<CwlComponent> components;
};

// The degree-j component has a linear resolution for every j from the least
// generator degree up to the regularity.
CwlResult is_componentwise_linear(const MonomialIdeal& ideal, const BettiLimits& lim = {});

} // namespace cwlin
