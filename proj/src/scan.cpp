#include "cwlin/scan.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "cwlin/idealops.hpp"

namespace cwlin {

namespace {

uint64_t adjacency_code(const Graph& g, const std::vector<int>& perm) {
    uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v, ++bit)
            if (g.has_edge(perm[u], perm[v])) code |= 1ull << bit;
    return code;
}

uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        best = std::min(best, adjacency_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_code(int n, uint64_t code) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1) g.add_edge(u, v);
    return g;
}

// Random connected chordal graph: attach each new vertex to a nonempty
// clique among the previous ones.
Graph random_chordal(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int anchor = static_cast<int>(rng() % v);
        std::vector<int> clique{anchor};
        std::vector<int> cands;
        for (int u = 0; u < v; ++u)
            if (u != anchor && g.has_edge(u, anchor)) cands.push_back(u);
        std::shuffle(cands.begin(), cands.end(), rng);
        for (int u : cands) {
            bool ok = true;
            for (int w : clique)
                if (!g.has_edge(u, w) && u != w) {
                    ok = false;
                    break;
                }
            if (ok && (rng() & 1)) clique.push_back(u);
        }
        for (int u : clique) g.add_edge(u, v);
    }
    return g;
}

} // namespace

std::vector<Graph> connected_chordal_graphs(int n) {
    if (n < 1 || n > 6) throw input_error("exhaustive enumeration is limited to 1..6 vertices");
    int pairs = n * (n - 1) / 2;
    std::vector<uint64_t> seen;
    std::vector<Graph> out;
    for (uint64_t code = 0; code < (1ull << pairs); ++code) {
        Graph g = graph_from_code(n, code);
        if (!g.connected()) continue;
        if (!is_chordal(g).chordal) continue;
        uint64_t canon = canonical_code(g);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
        out.push_back(std::move(g));
    }
    return out;
}

ScanReport scan_chordal(const ScanOptions& opts) {
    if (opts.max_vertices < 1 || opts.max_vertices > 8)
        throw input_error("scan supports 1..8 vertices");

    std::vector<Graph> graphs;
    for (int n = 1; n <= std::min(opts.max_vertices, 6); ++n)
        for (Graph& g : connected_chordal_graphs(n)) graphs.push_back(std::move(g));
    if (opts.max_vertices > 6) {
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
        for (int n = 7; n <= opts.max_vertices; ++n)
            for (int s = 0; s < opts.samples; ++s) graphs.push_back(random_chordal(n, rng));
    }

    ScanReport rep;
    rep.rows.resize(graphs.size());
    std::atomic<size_t> next{0};
    int nthreads = opts.threads > 0 ? opts.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&]() {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= graphs.size()) return;
            ScanRow row;
            row.index = static_cast<int>(k);
            row.graph = graphs[k];
            row.seed = opts.seed + 1000 * static_cast<uint64_t>(k);
            try {
                MonomialIdeal covers = cover_ideal(graphs[k]);
                row.cover_count = covers.ngens();
                if (covers.is_zero()) {
                    // Edgeless graph: the cover ideal is zero, nothing to test.
                    row.verdict = Verdict::Pass;
                    row.note = "no edges";
                } else {
                    DseqReport r = generic_d_sequence(from_monomial_ideal(covers), opts.trials,
                                                      row.seed, opts.bound, nullptr, opts.limits);
                    row.verdict = r.verdict;
                    if (r.passed()) row.passing_trial = r.trial;
                }
            } catch (const resource_limit_error& e) {
                row.verdict = Verdict::Inconclusive;
                row.note = e.what();
            }
            rep.rows[k] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (size_t k = 0; k < rep.rows.size(); ++k) {
        switch (rep.rows[k].verdict) {
            case Verdict::Pass: ++rep.passed; break;
            case Verdict::Fail:
                ++rep.failed;
                rep.failures.push_back(static_cast<int>(k));
                break;
            case Verdict::Inconclusive: ++rep.inconclusive; break;
        }
    }
    return rep;
}

} // namespace cwlin
