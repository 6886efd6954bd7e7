#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cwlin/monomial_ideal.hpp"

namespace cwlin {

// Finite simple graph on vertices 1..n (stored 0-based).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;

    // Edges as 0-based pairs (u < v), sorted.
    std::vector<std::pair<int, int>> edges() const;
    int nedges() const;
    bool connected() const;

    static Graph parse(const std::string& text);
    static Graph load(const std::string& path);
    std::string to_string() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

// Default polynomial ring for an n-vertex graph: x1..xn over the rationals.
RingPtr graph_ring(const Graph& g);

MonomialIdeal edge_ideal(const Graph& g, RingPtr ring = nullptr);

// All inclusion-minimal vertex covers (0-based, each sorted), sorted.
// Enumerated as complements of maximal independent sets; n <= 24.
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

// Alexander dual of the edge ideal: iterated intersection of (x_i, x_j)
// over the edges, minimalized.
MonomialIdeal cover_ideal(const Graph& g, RingPtr ring = nullptr);

bool is_unmixed(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo;              // perfect elimination ordering (0-based)
    std::vector<int> chordless_cycle;  // on failure: an induced cycle, length >= 4
};

// Lex-BFS ordering, verified as a perfect elimination ordering.
ChordalityResult is_chordal(const Graph& g);

// Maximal cliques via Bron-Kerbosch with pivoting; each clique sorted,
// cliques sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct CliqueComplex {
    std::vector<std::vector<int>> facets;
    std::vector<std::vector<int>> free_vertices;  // per facet
};

CliqueComplex clique_complex(const Graph& g);

struct CmChordalResult {
    bool is_cm = false;
    std::vector<std::vector<int>> free_facets;  // facets owning a free vertex
};

// For a chordal graph: true iff the facets with a free vertex partition the
// vertex set.  Throws input_error on non-chordal input.
CmChordalResult is_cm_chordal(const Graph& g);

// Complete graph on 1..n plus pendant vertices n+1..n+m, pendant k attached
// exactly to attach[k-1] (nonempty subsets of 1..n, stored 0-based).
struct StarGraph {
    int base_n = 0;
    std::vector<std::vector<int>> attach;

    int m() const { return static_cast<int>(attach.size()); }
    Graph graph() const;
    // x1..xn for the base, t1..tm for the pendants.
    RingPtr ring() const;
};

StarGraph star_graph(int n, const std::vector<std::vector<int>>& attach);

// Closed-form cover generators: u_i = prod_{j != i} x_j * prod_{pendant k
// at i} t_k for i = 1..n, plus u_{n+1} = x_1..x_n; minimalized.
MonomialIdeal star_cover_generators(const StarGraph& s);

// The same monomials before minimalization, in presentation order u_1..u_{n+1}.
std::vector<Monomial> star_cover_monomials(const StarGraph& s);

} // namespace cwlin
