#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cwlin/betti.hpp"
#include "cwlin/dseq.hpp"
#include "cwlin/graph.hpp"

namespace cwlin {

// star_rees_check lives with the verification helpers to keep the rees
// module free of graph types.
struct StarReesResult {
    bool matches = false;
    ReesPresentation pres;
    std::vector<Poly> expected;  // x_i y_i - (prod of attached t_k) y_{n+1}
};

// Builds the presentation on all n+1 closed-form cover monomials (the full
// product u_{n+1} included even when redundant) and compares the kernel with
// the expected binomials.
StarReesResult star_rees_check(const StarGraph& s, const GBLimits& lim = {});

enum class ClaimStatus { Pass, Fail, Inconclusive };

struct ClaimResult {
    std::string id;
    std::string location;  // example tag, e.g. "[1.9]"
    ClaimStatus status = ClaimStatus::Fail;
    std::string detail;
    double millis = 0.0;
};

struct VerifyOptions {
    std::string data_dir = "data";
    bool long_running = false;   // adds the n = 5, 6 scroll cases
    GBLimits limits;
    BettiLimits betti_limits{8, 30, 1 << 16};
    // When set, only claims whose id contains the filter run.
    std::string filter;
};

struct VerifyReport {
    std::vector<ClaimResult> claims;
    int passed = 0, failed = 0, inconclusive = 0;

    bool all_passed() const { return failed == 0 && inconclusive == 0; }
};

// Reproduces the bundled reference examples end to end, one claim per
// verifiable statement, and reports PASS/FAIL/INCONCLUSIVE per claim.
VerifyReport run_verification(const VerifyOptions& opts);

const char* to_string(ClaimStatus s);

} // namespace cwlin
