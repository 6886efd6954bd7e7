#pragma once

#include <cstdint>

#include "cwlin/dseq.hpp"
#include "cwlin/graph.hpp"

namespace cwlin {

struct ScanOptions {
    int max_vertices = 4;    // guard: <= 8
    int samples = 25;        // per vertex count above the exhaustive range
    uint64_t seed = 1;
    int trials = 3;
    long bound = 100;
    int threads = 0;         // 0 = hardware concurrency
    GBLimits limits;
};

struct ScanRow {
    int index = 0;
    Graph graph;
    int cover_count = 0;
    Verdict verdict = Verdict::Inconclusive;
    uint64_t seed = 0;       // seed handed to the random-basis trials
    int passing_trial = -1;  // trial index that passed, or -1
    std::string note;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    int passed = 0, failed = 0, inconclusive = 0;
    // Potential counterexamples: rows with a definite FAIL verdict.
    std::vector<int> failures;
};

// Connected chordal graphs: exhaustive up to isomorphism for n <= 6
// (canonical adjacency code over all vertex permutations), random samples
// beyond.  Each cover ideal runs through generic_d_sequence.
ScanReport scan_chordal(const ScanOptions& opts);

// Enumeration helper, exposed for tests: all connected chordal graphs on n
// vertices up to isomorphism (n <= 6).
std::vector<Graph> connected_chordal_graphs(int n);

} // namespace cwlin
