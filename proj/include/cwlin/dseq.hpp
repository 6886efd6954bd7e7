#pragma once

#include <cstdint>
#include <optional>

#include "cwlin/linalg.hpp"
#include "cwlin/rees.hpp"

namespace cwlin {

enum class StepStatus { Pass, Fail, Inconclusive };
enum class Verdict { Pass, Fail, Inconclusive };

// One index of the defining condition on the Rees presentation: with
// A = (z_1..z_{i-1}) + J and M = (x_1..x_n) + J, the step holds iff
// (A : z_i) n M = A.  Since A sits inside both sides, failure is witnessed
// by a generator of the left side outside A.
struct DseqStep {
    int index = 0;
    StepStatus status = StepStatus::Inconclusive;
    std::vector<Poly> lhs_gens;            // generators of (A : z_i) n M
    std::vector<Poly> rhs_gens;            // generators of A
    std::optional<Poly> certificate;       // w z_i in A, w in M, w not in A
    std::string note;
};

struct DseqReport {
    RingPtr base;
    RingPtr ext;
    std::vector<Poly> sequence;            // the tested linear forms, in S
    std::vector<Poly> kernel_gens;         // J, in T
    std::vector<DseqStep> steps;
    Verdict verdict = Verdict::Inconclusive;
    bool generic = false;
    uint64_t seed = 0;                     // generic mode: seed of this trial
    int trial = -1;                        // generic mode: trial number
    std::vector<std::string> warnings;

    bool passed() const { return verdict == Verdict::Pass; }
};

// Tests whether the linear forms z_1..z_n (a K-basis of the degree-one part
// of S) form a d-sequence with respect to the Rees algebra of `ideal`.  A
// pass certifies that every power of the ideal is componentwise linear.
DseqReport is_d_sequence_on_rees(const Ideal& ideal, const std::vector<Poly>& z,
                                 const MonomialOrder* ord = nullptr, const GBLimits& lim = {});

// Same, reusing an already computed presentation of the same ideal.
DseqReport is_d_sequence_on_rees(const Ideal& ideal, const ReesPresentation& pres,
                                 const std::vector<Poly>& z, const MonomialOrder* ord = nullptr,
                                 const GBLimits& lim = {});

// Runs the test on `trials` random bases (seed, seed+1, ...).  Returns the
// first passing report, otherwise the last one.  A pass certifies all powers
// componentwise linear; failed random trials are evidence, not proof.
DseqReport generic_d_sequence(const Ideal& ideal, int trials, uint64_t seed, long bound,
                              const MonomialOrder* ord = nullptr, const GBLimits& lim = {});

// Monomial criterion at one index: every minimal generator divisible by the
// tested variable must be that variable times a y-monomial y^b, with
// x_j y^b in the ideal for every remaining base variable x_j.
bool monomial_step_check(const MonomialIdeal& ideal, int i);  // i is 1-based
bool monomial_step_check_at(const MonomialIdeal& ideal, int tested_var,
                            const std::vector<int>& remaining_vars);

struct PropStep {
    int index = 0;
    bool pass = false;
    MonomialIdeal initial;       // in(J_{i-1}) under the recorded order
    MonomialOrder order_used;
};

struct PropResult {
    bool pass = false;           // sufficient condition only; false is inconclusive
    std::vector<PropStep> steps;
};

// Groebner sufficient criterion along a variable chain: for each i,
// substitute the first i-1 chain variables to zero in the kernel, compute
// the initial ideal under a candidate order, and run the monomial check.
// With no explicit orders, candidates are {degrevlex, lex} x {chain,
// reversed chain}.
PropResult prop_conclusion_check(const ReesPresentation& pres, const std::vector<int>& chain,
                                 const std::vector<MonomialOrder>& orders = {},
                                 const GBLimits& lim = {});

const char* to_string(Verdict v);
const char* to_string(StepStatus s);

} // namespace cwlin
