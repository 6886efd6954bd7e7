#include "cwlin/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "cwlin/errors.hpp"

namespace cwlin {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 64) throw input_error("vertex count out of range (0..64)");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("loops are not allowed");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::nedges() const {
    int c = 0;
    for (int u = 0; u < n_; ++u) c += degree(u);
    return c / 2;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        uint64_t fresh = adj_[v] & ~seen;
        seen |= fresh;
        while (fresh) {
            int w = __builtin_ctzll(fresh);
            fresh &= fresh - 1;
            stack.push_back(w);
        }
    }
    return __builtin_popcountll(seen) == n_;
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_n = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "vertices") {
            int n;
            if (!(ls >> n)) throw parse_error("'vertices' needs a count");
            g = Graph(n);
            have_n = true;
        } else if (word == "edge") {
            if (!have_n) throw parse_error("'edge' before 'vertices'");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("'edge' needs two endpoints");
            g.add_edge(u - 1, v - 1);
        } else {
            throw parse_error("unknown graph directive '" + word + "'");
        }
    }
    if (!have_n) throw parse_error("graph file without a 'vertices' line");
    return g;
}

Graph Graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Graph::to_string() const {
    std::string s = "vertices " + std::to_string(n_) + "\n";
    for (auto [u, v] : edges())
        s += "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

RingPtr graph_ring(const Graph& g) { return make_ring_x(g.n()); }

MonomialIdeal edge_ideal(const Graph& g, RingPtr ring) {
    if (!ring) ring = graph_ring(g);
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        Monomial m(ring->nvars());
        m.bump(u, 1);
        m.bump(v, 1);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
}

namespace {

// Bron-Kerbosch with pivoting on bitmask vertex sets.
void bron_kerbosch(const Graph& g, uint64_t r, uint64_t p, uint64_t x,
                   std::vector<uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    uint64_t it = px;
    while (it) {
        int v = __builtin_ctzll(it);
        it &= it - 1;
        int cnt = __builtin_popcountll(p & g.neighbors(v));
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    uint64_t cand = p & ~g.neighbors(pivot);
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        uint64_t vb = 1ull << v;
        bron_kerbosch(g, r | vb, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~vb;
        x |= vb;
    }
}

std::vector<int> bits_to_list(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

std::vector<uint64_t> maximal_clique_masks(const Graph& g) {
    std::vector<uint64_t> out;
    uint64_t all = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
    bron_kerbosch(g, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (uint64_t m : maximal_clique_masks(g)) out.push_back(bits_to_list(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
    if (g.n() > 24) throw input_error("vertex-cover enumeration is capped at 24 vertices");
    // Minimal covers are exactly complements of maximal independent sets,
    // i.e. of maximal cliques of the complement graph.
    uint64_t all = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
    std::vector<std::vector<int>> covers;
    for (uint64_t mis : maximal_clique_masks(complement(g)))
        covers.push_back(bits_to_list(all & ~mis));
    std::sort(covers.begin(), covers.end());
    return covers;
}

MonomialIdeal cover_ideal(const Graph& g, RingPtr ring) {
    if (!ring) ring = graph_ring(g);
    auto es = g.edges();
    if (es.empty()) return MonomialIdeal(ring, {});
    MonomialIdeal acc;
    bool first = true;
    for (auto [u, v] : es) {
        MonomialIdeal pair_ideal(ring, {mono_var(*ring, u), mono_var(*ring, v)});
        acc = first ? pair_ideal : monomial_intersect(acc, pair_ideal);
        first = false;
    }
    return acc;
}

bool is_unmixed(const Graph& g) {
    auto covers = minimal_vertex_covers(g);
    for (const auto& c : covers)
        if (c.size() != covers.front().size()) return false;
    return true;
}

namespace {

// Lex-BFS: repeatedly visit the unvisited vertex with the lexicographically
// greatest label; ties by smallest index.
std::vector<int> lex_bfs(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> label(n);
    std::vector<bool> used(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (best < 0 || label[v] > label[best]) best = v;
        }
        used[best] = true;
        order.push_back(best);
        for (int w = 0; w < n; ++w)
            if (!used[w] && g.has_edge(best, w)) label[w].push_back(n - step);
    }
    return order;
}

// Search for an induced cycle of length >= 4: non-adjacent a, b in N(v)
// reconnected outside N[v].
std::vector<int> find_chordless_cycle(const Graph& g) {
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        auto nb = bits_to_list(g.neighbors(v));
        for (size_t ai = 0; ai < nb.size(); ++ai)
            for (size_t bi = ai + 1; bi < nb.size(); ++bi) {
                int a = nb[ai], b = nb[bi];
                if (g.has_edge(a, b)) continue;
                uint64_t blocked = (g.neighbors(v) | (1ull << v)) & ~(1ull << a) & ~(1ull << b);
                std::vector<int> prev(n, -2);
                std::queue<int> q;
                q.push(a);
                prev[a] = -1;
                while (!q.empty() && prev[b] == -2) {
                    int u = q.front();
                    q.pop();
                    uint64_t next = g.neighbors(u) & ~blocked;
                    while (next) {
                        int w = __builtin_ctzll(next);
                        next &= next - 1;
                        if (prev[w] == -2) {
                            prev[w] = u;
                            q.push(w);
                        }
                    }
                }
                if (prev[b] == -2) continue;
                std::vector<int> path;
                for (int u = b; u != -1; u = prev[u]) path.push_back(u);
                // Shrink to a shortest (hence induced) path in the allowed graph.
                path.push_back(v);
                return path;
            }
    }
    return {};
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    int n = g.n();
    std::vector<int> order = lex_bfs(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Reverse Lex-BFS order is a PEO iff the graph is chordal: for each v,
    // its earlier-visited neighbors minus the latest one must all see it.
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        int v = order[i];
        int parent = -1;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && pos[w] < i && (parent < 0 || pos[w] > pos[parent]))
                parent = w;
        if (parent < 0) continue;
        for (int w = 0; w < n && ok; ++w)
            if (w != parent && g.has_edge(v, w) && pos[w] < i && !g.has_edge(parent, w))
                ok = false;
    }
    res.chordal = ok;
    if (ok) {
        res.peo.assign(order.rbegin(), order.rend());
    } else {
        res.chordless_cycle = find_chordless_cycle(g);
        if (res.chordless_cycle.size() < 4)
            throw internal_error("non-chordal graph without a chordless cycle");
    }
    return res;
}

CliqueComplex clique_complex(const Graph& g) {
    CliqueComplex cc;
    cc.facets = maximal_cliques(g);
    std::vector<int> count(g.n(), 0);
    for (const auto& f : cc.facets)
        for (int v : f) ++count[v];
    cc.free_vertices.resize(cc.facets.size());
    for (size_t i = 0; i < cc.facets.size(); ++i)
        for (int v : cc.facets[i])
            if (count[v] == 1) cc.free_vertices[i].push_back(v);
    return cc;
}

CmChordalResult is_cm_chordal(const Graph& g) {
    ChordalityResult ch = is_chordal(g);
    if (!ch.chordal) throw input_error("the facet criterion applies to chordal graphs only");
    CliqueComplex cc = clique_complex(g);
    CmChordalResult res;
    uint64_t seen = 0;
    bool disjoint = true;
    for (size_t i = 0; i < cc.facets.size(); ++i) {
        if (cc.free_vertices[i].empty()) continue;
        uint64_t mask = 0;
        for (int v : cc.facets[i]) mask |= 1ull << v;
        if (seen & mask) disjoint = false;
        seen |= mask;
        res.free_facets.push_back(cc.facets[i]);
    }
    uint64_t all = g.n() == 64 ? ~0ull : ((1ull << g.n()) - 1);
    res.is_cm = disjoint && seen == all;
    return res;
}

Graph StarGraph::graph() const {
    Graph g(base_n + m());
    for (int i = 0; i < base_n; ++i)
        for (int j = i + 1; j < base_n; ++j) g.add_edge(i, j);
    for (int k = 0; k < m(); ++k)
        for (int i : attach[k]) g.add_edge(i, base_n + k);
    return g;
}

RingPtr StarGraph::ring() const {
    std::vector<std::string> names;
    for (int i = 1; i <= base_n; ++i) names.push_back("x" + std::to_string(i));
    for (int k = 1; k <= m(); ++k) names.push_back("t" + std::to_string(k));
    return make_ring(std::move(names), base_n + m());
}

StarGraph star_graph(int n, const std::vector<std::vector<int>>& attach) {
    if (n < 1) throw input_error("star graph needs a base vertex");
    if (attach.empty()) throw input_error("star graph needs at least one pendant vertex");
    StarGraph s;
    s.base_n = n;
    for (const auto& a : attach) {
        if (a.empty()) throw input_error("pendant vertex with no attachment disconnects the graph");
        std::vector<int> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v : sorted)
            if (v < 0 || v >= n)
                throw input_error("pendant attachments must land in the base clique");
        s.attach.push_back(std::move(sorted));
    }
    return s;
}

std::vector<Monomial> star_cover_monomials(const StarGraph& s) {
    RingPtr ring = s.ring();
    int n = s.base_n, m = s.m();
    std::vector<Monomial> us;
    for (int i = 0; i < n; ++i) {
        Monomial u(ring->nvars());
        for (int j = 0; j < n; ++j)
            if (j != i) u.bump(j, 1);
        for (int k = 0; k < m; ++k)
            if (std::find(s.attach[k].begin(), s.attach[k].end(), i) != s.attach[k].end())
                u.bump(n + k, 1);
        us.push_back(std::move(u));
    }
    Monomial last(ring->nvars());
    for (int j = 0; j < n; ++j) last.bump(j, 1);
    us.push_back(std::move(last));
    return us;
}

MonomialIdeal star_cover_generators(const StarGraph& s) {
    return MonomialIdeal(s.ring(), star_cover_monomials(s));
}

} // namespace cwlin
