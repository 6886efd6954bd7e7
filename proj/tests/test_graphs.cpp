#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cwlin/graph.hpp"
#include "cwlin/parse.hpp"

using namespace cwlin;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    return g;
}

Monomial mono_of(const std::string& s, const RingCtx& ring) {
    return parse_poly(s, ring, MonomialOrder::degrevlex(ring.nvars())).lm();
}

Graph data_graph(const std::string& name) {
    return Graph::load(std::string(CWLIN_DATA_DIR) + "/" + name);
}

} // namespace

TEST_CASE("edge ideals") {
    Graph e(2);
    e.add_edge(0, 1);
    RingPtr r2 = graph_ring(e);
    CHECK(edge_ideal(e, r2) == MonomialIdeal(r2, {mono_of("x1*x2", *r2)}));

    Graph p3 = path(3);
    RingPtr r3 = graph_ring(p3);
    CHECK(edge_ideal(p3, r3) ==
          MonomialIdeal(r3, {mono_of("x1*x2", *r3), mono_of("x2*x3", *r3)}));

    Graph p4 = data_graph("example-2-1a.graph");
    RingPtr r4 = graph_ring(p4);
    CHECK(edge_ideal(p4, r4) == MonomialIdeal(r4, {mono_of("x1*x2", *r4), mono_of("x2*x3", *r4),
                                                   mono_of("x3*x4", *r4)}));
}

TEST_CASE("minimal vertex covers") {
    Graph e(2);
    e.add_edge(0, 1);
    CHECK(minimal_vertex_covers(e) == std::vector<std::vector<int>>{{0}, {1}});

    CHECK(minimal_vertex_covers(triangle()) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    Graph star = data_graph("example-2-2.graph");
    auto covers = minimal_vertex_covers(star);
    std::set<std::vector<int>> got(covers.begin(), covers.end());
    CHECK(got.count({0, 1, 2}) == 1);
    CHECK(got.count({1, 2, 3, 5}) == 1);
    CHECK_FALSE(is_unmixed(star));
}

TEST_CASE("cover ideals match the bundled references") {
    Graph a = data_graph("example-2-1a.graph");
    RingPtr ra = graph_ring(a);
    CHECK(cover_ideal(a, ra) == MonomialIdeal(ra, {mono_of("x1*x3", *ra), mono_of("x2*x3", *ra),
                                                   mono_of("x2*x4", *ra)}));
    CHECK(is_unmixed(a));

    Graph b = data_graph("example-2-1b.graph");
    RingPtr rb = graph_ring(b);
    CHECK(cover_ideal(b, rb) ==
          MonomialIdeal(rb, {mono_of("x1*x3*x4", *rb), mono_of("x1*x3*x5", *rb),
                             mono_of("x2*x4", *rb), mono_of("x2*x3*x5", *rb)}));
    CHECK_FALSE(is_unmixed(b));

    Graph c = data_graph("example-2-4.graph");
    RingPtr rc = graph_ring(c);
    MonomialIdeal expect(rc, {mono_of("x1*x3*x5*x6", *rc), mono_of("x2*x3*x4*x5*x6", *rc),
                              mono_of("x1*x2*x4*x6*x7", *rc), mono_of("x1*x2*x3*x4*x6", *rc),
                              mono_of("x2*x3*x4*x5*x7", *rc), mono_of("x1*x2*x3*x5*x7", *rc),
                              mono_of("x1*x2*x5*x6*x7", *rc), mono_of("x2*x4*x5*x6*x7", *rc)});
    CHECK(cover_ideal(c, rc) == expect);
}

TEST_CASE("chordality") {
    CHECK(is_chordal(path(5)).chordal);  // trees are chordal

    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    ChordalityResult res = is_chordal(c4);
    CHECK_FALSE(res.chordal);
    REQUIRE(res.chordless_cycle.size() == 4);
    std::set<int> cyc(res.chordless_cycle.begin(), res.chordless_cycle.end());
    CHECK(cyc == std::set<int>{0, 1, 2, 3});

    CHECK(is_chordal(data_graph("example-2-4.graph")).chordal);
}

TEST_CASE("clique complexes and free vertices") {
    CliqueComplex t = clique_complex(triangle());
    REQUIRE(t.facets.size() == 1);
    CHECK(t.facets[0] == std::vector<int>{0, 1, 2});
    CHECK(t.free_vertices[0] == std::vector<int>{0, 1, 2});

    CliqueComplex p = clique_complex(path(3));
    REQUIRE(p.facets.size() == 2);
    CHECK(p.facets[0] == std::vector<int>{0, 1});
    CHECK(p.free_vertices[0] == std::vector<int>{0});
    CHECK(p.free_vertices[1] == std::vector<int>{2});

    // Triangle {1,2,3} + edge {3,4} + edge {4,5}: brute-force the maximal
    // cliques and compare.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    std::vector<std::vector<int>> brute;
    for (uint32_t s = 1; s < 32; ++s) {
        std::vector<int> verts;
        for (int v = 0; v < 5; ++v)
            if ((s >> v) & 1) verts.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < verts.size() && clique; ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (!g.has_edge(verts[i], verts[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        bool maximal = true;
        for (int v = 0; v < 5 && maximal; ++v) {
            if ((s >> v) & 1) continue;
            bool all = true;
            for (int u : verts)
                if (!g.has_edge(u, v)) all = false;
            if (all) maximal = false;
        }
        if (maximal) brute.push_back(verts);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(maximal_cliques(g) == brute);
    CHECK(clique_complex(g).facets == brute);
}

TEST_CASE("disjoint free-facet criterion") {
    Graph e(2);
    e.add_edge(0, 1);
    CHECK(is_cm_chordal(e).is_cm);

    CHECK_FALSE(is_cm_chordal(path(3)).is_cm);

    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    CmChordalResult res = is_cm_chordal(g);
    CHECK(res.is_cm);
    CHECK(res.free_facets.size() == 2);

    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK_THROWS_AS(is_cm_chordal(c4), input_error);
}

TEST_CASE("star graph construction") {
    StarGraph s = star_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph g = s.graph();
    Graph expect = data_graph("example-2-2.graph");
    CHECK(g == expect);

    StarGraph tiny = star_graph(1, {{0}});
    Graph tg = tiny.graph();
    CHECK(tg.n() == 2);
    CHECK(tg.has_edge(0, 1));
}

TEST_CASE("closed-form star cover generators") {
    StarGraph s = star_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    RingPtr ring = s.ring();
    MonomialIdeal closed = star_cover_generators(s);
    MonomialIdeal expected(ring, {mono_of("x2*x3*t1*t3", *ring), mono_of("x1*x3*t1*t2", *ring),
                                  mono_of("x1*x2*t2*t3", *ring), mono_of("x1*x2*x3", *ring)});
    CHECK(closed == expected);
    CHECK(closed == cover_ideal(s.graph(), ring));

    StarGraph tiny = star_graph(1, {{0}});
    RingPtr rt = tiny.ring();
    CHECK(star_cover_generators(tiny) ==
          MonomialIdeal(rt, {mono_of("x1", *rt), mono_of("t1", *rt)}));

    // Vertex 2 has no pendant, so u_2 = x1 divides u_3 = x1*x2 and the full
    // product drops out of the minimal generators.
    StarGraph drop = star_graph(2, {{0}});
    RingPtr rd = drop.ring();
    auto raw = star_cover_monomials(drop);
    CHECK(raw.size() == 3);
    MonomialIdeal min_gens = star_cover_generators(drop);
    CHECK(min_gens == MonomialIdeal(rd, {mono_of("x2*t1", *rd), mono_of("x1", *rd)}));
    CHECK(min_gens == cover_ideal(drop.graph(), rd));
}

TEST_CASE("star covers agree with the dual computation on samples") {
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            std::vector<std::vector<int>> attach(m);
            for (int k = 0; k < m; ++k) {
                int size = 1 + static_cast<int>(rng() % n);
                for (int t = 0; t < size; ++t) attach[k].push_back(static_cast<int>(rng() % n));
            }
            StarGraph s = star_graph(n, attach);
            CHECK(star_cover_generators(s) == cover_ideal(s.graph(), s.ring()));
            CHECK(is_chordal(s.graph()).chordal);
        }
}

TEST_CASE("graph file parsing") {
    CHECK_THROWS_AS(Graph::parse("edge 1 2"), parse_error);
    CHECK_THROWS_AS(Graph::parse("vertices 2\nedge 1 1"), input_error);
    CHECK_THROWS_AS(Graph::parse("vertices 2\nedge 1 5"), input_error);
    Graph g = Graph::parse("vertices 3\n# comment\nedge 1 2\n\nedge 2 3\n");
    CHECK(g.nedges() == 2);
    Graph round = Graph::parse(g.to_string());
    CHECK(g == round);
}

TEST_CASE("cover enumeration guard") {
    Graph big(25);
    CHECK_THROWS_AS(minimal_vertex_covers(big), input_error);
}
