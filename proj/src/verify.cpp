#include "cwlin/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "cwlin/parse.hpp"
#include "cwlin/scan.hpp"

namespace cwlin {

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "PASS";
        case ClaimStatus::Fail: return "FAIL";
        case ClaimStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

StarReesResult star_rees_check(const StarGraph& s, const GBLimits& lim) {
    RingPtr ring = s.ring();
    int n = s.base_n, m = s.m();
    std::vector<Poly> gens;
    for (const Monomial& u : star_cover_monomials(s)) gens.push_back(poly_term(Coeff(1), u));
    Ideal cover(ring, std::move(gens));

    StarReesResult res;
    res.pres = rees_ideal(cover, lim);
    const RingPtr& ext = res.pres.ext;
    CoeffField F(ext->characteristic());
    MonomialOrder drl = MonomialOrder::degrevlex(ext->nvars());
    int y0 = ring->nvars();  // y_1 sits after the base block
    for (int i = 0; i < n; ++i) {
        Monomial lead = mono_var(*ext, i);
        lead.bump(y0 + i, 1);
        Monomial tail = mono_var(*ext, y0 + n);  // y_{n+1}
        for (int k = 0; k < m; ++k)
            if (std::find(s.attach[k].begin(), s.attach[k].end(), i) != s.attach[k].end())
                tail.bump(n + k, 1);
        res.expected.push_back(
            poly_add(poly_term(Coeff(1), lead), poly_term(Coeff(-1), tail), F, drl));
    }
    res.matches = ideal_equal(res.pres.kernel, Ideal(ext, res.expected), drl, lim);
    return res;
}

namespace {

using Runner = std::function<std::pair<bool, std::string>()>;

struct Suite {
    const VerifyOptions& opts;
    VerifyReport rep;

    void claim(const std::string& id, const std::string& location, const Runner& run) {
        if (!opts.filter.empty() && id.find(opts.filter) == std::string::npos) return;
        ClaimResult c;
        c.id = id;
        c.location = location;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [ok, detail] = run();
            c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
            c.detail = detail;
        } catch (const resource_limit_error& e) {
            c.status = ClaimStatus::Inconclusive;
            c.detail = e.what();
        } catch (const std::exception& e) {
            c.status = ClaimStatus::Fail;
            c.detail = e.what();
        }
        c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        switch (c.status) {
            case ClaimStatus::Pass: ++rep.passed; break;
            case ClaimStatus::Fail: ++rep.failed; break;
            case ClaimStatus::Inconclusive: ++rep.inconclusive; break;
        }
        rep.claims.push_back(std::move(c));
    }

    Ideal load_ideal(const std::string& file) const {
        IdealFile f = load_ideal_file(opts.data_dir + "/" + file);
        return Ideal(f.ring, f.gens);
    }

    Graph load_graph(const std::string& file) const {
        return Graph::load(opts.data_dir + "/" + file);
    }
};

Monomial mono_from_string(const std::string& text, const RingCtx& ring) {
    Poly p = parse_poly(text, ring, MonomialOrder::degrevlex(ring.nvars()));
    if (p.nterms() != 1 || p.lc() != 1) throw input_error("expected a monomial: " + text);
    return p.lm();
}

MonomialIdeal mono_ideal_from_strings(const std::vector<std::string>& gens, RingPtr ring) {
    std::vector<Monomial> ms;
    for (const std::string& s : gens) ms.push_back(mono_from_string(s, *ring));
    return MonomialIdeal(std::move(ring), std::move(ms));
}

std::pair<bool, std::string> expect_dseq_pass(const Ideal& ideal, const std::string& seq,
                                              const GBLimits& lim) {
    MonomialOrder base_ord = MonomialOrder::degrevlex(ideal.ring()->nvars());
    std::vector<Poly> z = parse_poly_list(seq, *ideal.ring(), base_ord);
    DseqReport rep = is_d_sequence_on_rees(ideal, z, nullptr, lim);
    std::string detail = "sequence " + seq + " -> " + to_string(rep.verdict);
    if (rep.verdict == Verdict::Inconclusive)
        throw resource_limit_error(detail);
    return {rep.passed(), detail};
}

// ----- property-suite helpers -------------------------------------------

Monomial random_monomial(const RingCtx& ring, std::mt19937_64& rng, int max_deg) {
    Monomial m(ring.nvars());
    int deg = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_deg));
    for (int d = 0; d < deg; ++d) m.bump(static_cast<int>(rng() % ring.nvars()), 1);
    return m;
}

Poly random_poly(const RingCtx& ring, std::mt19937_64& rng, const MonomialOrder& ord,
                 int max_terms, int max_deg) {
    CoeffField F(ring.characteristic());
    std::vector<Term> ts;
    int nterms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
    for (int t = 0; t < nterms; ++t) {
        long c = static_cast<long>(rng() % 11) - 5;
        if (c == 0) c = 1;
        Monomial m(ring.nvars());
        int deg = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
        for (int d = 0; d < deg; ++d) m.bump(static_cast<int>(rng() % ring.nvars()), 1);
        ts.push_back(Term{Coeff(c), m});
    }
    return Poly::make(std::move(ts), F, ord);
}

std::vector<Monomial> all_monomials_up_to(const RingCtx& ring, int max_deg) {
    std::vector<Monomial> out{mono_one(ring)};
    size_t lo = 0;
    for (int d = 1; d <= max_deg; ++d) {
        size_t hi = out.size();
        for (size_t k = lo; k < hi; ++k)
            for (int v = 0; v < ring.nvars(); ++v) {
                Monomial m = out[k];
                m.bump(v, 1);
                out.push_back(std::move(m));
            }
        lo = hi;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps() < b.exps(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<bool, std::string> groebner_property_suite(const GBLimits& lim) {
    std::mt19937_64 rng(0x67b2c3a1);
    int instances = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int nvars = 2 + static_cast<int>(rng() % 3);
        RingPtr ring = make_ring_x(nvars);
        CoeffField F(0);
        MonomialOrder ord = MonomialOrder::degrevlex(nvars);
        int ngens = 2 + static_cast<int>(rng() % 3);
        std::vector<Poly> gens;
        for (int g = 0; g < ngens; ++g) {
            Poly p = random_poly(*ring, rng, ord, 4, 3);
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        if (gens.empty()) continue;
        Ideal ideal(ring, gens);
        const GroebnerBasis& gb = ideal.groebner(ord, lim);
        ++instances;
        for (const Poly& g : gens)
            if (!normal_form(g, gb, F).is_zero())
                return {false, "generator with nonzero normal form (iter " +
                                   std::to_string(iter) + ")"};
        for (size_t i = 0; i < gb.elems.size(); ++i) {
            if (gb.elems[i].lc() != 1) return {false, "non-monic basis element"};
            for (size_t j = i + 1; j < gb.elems.size(); ++j) {
                if (mono_divides(gb.elems[i].lm(), gb.elems[j].lm()) ||
                    mono_divides(gb.elems[j].lm(), gb.elems[i].lm()))
                    return {false, "divisible leading monomials in reduced basis"};
                Poly s = s_polynomial(gb.elems[i], gb.elems[j], F, ord);
                if (!normal_form(s, gb, F).is_zero())
                    return {false, "s-polynomial with nonzero normal form"};
            }
        }
        for (int c = 0; c < 3; ++c) {
            Poly combo;
            for (const Poly& g : gens)
                combo = poly_add(combo, poly_mul(random_poly(*ring, rng, ord, 3, 2), g, F, ord),
                                 F, ord);
            if (!normal_form(combo, gb, F).is_zero())
                return {false, "random ideal member with nonzero normal form"};
        }
        std::vector<Poly> permuted = gens;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        GroebnerBasis gb2 = buchberger(*ring, permuted, ord, lim);
        if (gb2.elems != gb.elems) return {false, "reduced basis depends on generator order"};
    }
    return {instances >= 190, std::to_string(instances) + " random instances checked"};
}

std::pair<bool, std::string> intersect_colon_property_suite(const GBLimits& lim) {
    std::mt19937_64 rng(0x51f15eed);
    int pairs = 0;
    for (int iter = 0; iter < 100; ++iter) {
        int nvars = 3 + static_cast<int>(rng() % 3);
        RingPtr ring = make_ring_x(nvars);
        std::vector<Monomial> ga, gb2;
        for (int k = 0; k < 2 + static_cast<int>(rng() % 3); ++k)
            ga.push_back(random_monomial(*ring, rng, 4));
        for (int k = 0; k < 2 + static_cast<int>(rng() % 3); ++k)
            gb2.push_back(random_monomial(*ring, rng, 4));
        MonomialIdeal A(ring, ga), B(ring, gb2);
        MonomialIdeal I = monomial_intersect(A, B);
        for (const Monomial& m : all_monomials_up_to(*ring, 6)) {
            bool in_fast = I.contains(m);
            bool in_brute = A.contains(m) && B.contains(m);
            if (in_fast != in_brute)
                return {false, "intersection membership mismatch at degree " +
                                   std::to_string(m.deg())};
        }
        Monomial f = random_monomial(*ring, rng, 2);
        MonomialIdeal C = monomial_colon(A, f);
        for (const Monomial& m : all_monomials_up_to(*ring, 6)) {
            bool in_fast = C.contains(m);
            bool in_brute = A.contains(mono_mul(m, f));
            if (in_fast != in_brute)
                return {false, "colon membership mismatch at degree " + std::to_string(m.deg())};
        }
        ++pairs;
        if (iter % 8 == 0) {
            // Fast paths must agree with the generic elimination route.
            MonomialOrder ord = MonomialOrder::degrevlex(nvars);
            Ideal Ap = from_monomial_ideal(A), Bp = from_monomial_ideal(B);
            Ideal gen_int = ideal_intersect_via_elimination(Ap, Bp, lim);
            if (!ideal_equal(gen_int, from_monomial_ideal(I), ord, lim))
                return {false, "generic intersection disagrees with the monomial fast path"};
            Ideal gen_col =
                ideal_colon_via_elimination(Ap, poly_term(Coeff(1), f), ord, lim);
            if (!ideal_equal(gen_col, from_monomial_ideal(C), ord, lim))
                return {false, "generic colon disagrees with the monomial fast path"};
        }
    }
    return {pairs >= 100, std::to_string(pairs) + " random ideal pairs checked"};
}

std::vector<std::vector<int>> brute_minimal_covers(const Graph& g) {
    int n = g.n();
    auto edges = g.edges();
    std::vector<uint32_t> covers;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!((s >> u) & 1) && !((s >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) covers.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (uint32_t s : covers) {
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v) {
            if (!((s >> v) & 1)) continue;
            uint32_t t = s & ~(1u << v);
            for (uint32_t c : covers)
                if (c == t) {
                    minimal = false;
                    break;
                }
        }
        if (!minimal) continue;
        std::vector<int> cover;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) cover.push_back(v);
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_is_chordal(const Graph& g) {
    int n = g.n();
    for (uint32_t s = 0; s < (1u << n); ++s) {
        int size = __builtin_popcount(s);
        if (size < 4) continue;
        bool cycle = true;
        for (int v = 0; v < n && cycle; ++v) {
            if (!((s >> v) & 1)) continue;
            int deg = __builtin_popcountll(g.neighbors(v) & s);
            if (deg != 2) cycle = false;
        }
        if (!cycle) continue;
        // 2-regular induced subgraph: a disjoint union of cycles; connected
        // iff it is a single chordless cycle.
        int start = __builtin_ctz(s);
        uint64_t seen = 1ull << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            uint64_t next = g.neighbors(v) & s & ~seen;
            while (next) {
                int w = __builtin_ctzll(next);
                next &= next - 1;
                seen |= 1ull << w;
                stack.push_back(w);
            }
        }
        if (__builtin_popcountll(seen) == size) return false;
    }
    return true;
}

std::pair<bool, std::string> cover_duality_suite() {
    long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint64_t code = 0; code < (1ull << pairs); ++code) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((code >> bit) & 1) g.add_edge(u, v);
            auto brute = brute_minimal_covers(g);
            if (minimal_vertex_covers(g) != brute) return {false, "cover enumeration mismatch"};
            RingPtr ring = graph_ring(g);
            std::vector<Monomial> expect;
            for (const auto& c : brute) {
                Monomial m(n);
                for (int v : c) m.bump(v, 1);
                expect.push_back(std::move(m));
            }
            if (cover_ideal(g, ring) != MonomialIdeal(ring, expect))
                return {false, "cover ideal disagrees with brute-force covers"};
            ++graphs;
        }
    }
    std::mt19937_64 rng(0xc0ffee11);
    for (int s = 0; s < 50; ++s) {
        Graph g(7);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (rng() & 1) g.add_edge(u, v);
        auto brute = brute_minimal_covers(g);
        if (minimal_vertex_covers(g) != brute)
            return {false, "cover enumeration mismatch on a 7-vertex sample"};
        RingPtr ring = graph_ring(g);
        std::vector<Monomial> expect;
        for (const auto& c : brute) {
            Monomial m(7);
            for (int v : c) m.bump(v, 1);
            expect.push_back(std::move(m));
        }
        if (cover_ideal(g, ring) != MonomialIdeal(ring, expect))
            return {false, "cover ideal mismatch on a 7-vertex sample"};
        ++graphs;
    }
    return {true, std::to_string(graphs) + " graphs checked"};
}

std::pair<bool, std::string> chordality_suite() {
    long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (uint64_t code = 0; code < (1ull << pairs); ++code) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((code >> bit) & 1) g.add_edge(u, v);
            ChordalityResult res = is_chordal(g);
            if (res.chordal != brute_is_chordal(g))
                return {false, "chordality verdict disagrees with brute force"};
            if (res.chordal) {
                // The returned ordering must be a perfect elimination ordering.
                std::vector<int> pos(n);
                for (int i = 0; i < n; ++i) pos[res.peo[i]] = i;
                for (int i = 0; i < n; ++i) {
                    int v = res.peo[i];
                    std::vector<int> later;
                    for (int w = 0; w < n; ++w)
                        if (g.has_edge(v, w) && pos[w] > i) later.push_back(w);
                    for (size_t a = 0; a < later.size(); ++a)
                        for (size_t b = a + 1; b < later.size(); ++b)
                            if (!g.has_edge(later[a], later[b]))
                                return {false, "returned ordering is not an elimination order"};
                }
            } else {
                const auto& cyc = res.chordless_cycle;
                if (cyc.size() < 4) return {false, "missing chordless cycle certificate"};
                for (size_t i = 0; i < cyc.size(); ++i)
                    for (size_t j = i + 1; j < cyc.size(); ++j) {
                        bool adjacent_on_cycle =
                            (j == i + 1) || (i == 0 && j == cyc.size() - 1);
                        if (g.has_edge(cyc[i], cyc[j]) != adjacent_on_cycle)
                            return {false, "certificate is not an induced cycle"};
                    }
            }
            ++graphs;
        }
    }
    return {true, std::to_string(graphs) + " graphs checked"};
}

std::pair<bool, std::string> homology_double_suite(const std::vector<MonomialIdeal>& ideals,
                                                   const BettiLimits& blim) {
    std::mt19937_64 rng(0x50fa7e11);
    std::vector<MonomialIdeal> work = ideals;
    for (int k = 0; k < 20; ++k) {
        RingPtr ring = make_ring_x(3 + static_cast<int>(rng() % 3));
        std::vector<Monomial> gens;
        for (int g = 0; g < 2 + static_cast<int>(rng() % 3); ++g)
            gens.push_back(random_monomial(*ring, rng, 4));
        work.emplace_back(ring, gens);
    }
    long complexes = 0;
    for (const MonomialIdeal& m : work) {
        if (m.is_zero()) continue;
        for (const Monomial& b : lcm_lattice(m, blim)) {
            SimplicialComplexQ K = upper_koszul_complex(m, b);
            if (reduced_homology_ranks(K, RankMethod::RationalGauss) !=
                reduced_homology_ranks(K, RankMethod::Bareiss))
                return {false, "rank methods disagree"};
            ++complexes;
        }
    }
    return {true, std::to_string(complexes) + " complexes double-checked"};
}

std::string scroll_sequence(int n) {
    std::string s = "x;y;a1;a" + std::to_string(n + 1);
    for (int k = n; k >= 2; --k) s += ";a" + std::to_string(k);
    return s;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
    Suite s{opts, {}};
    const GBLimits& lim = opts.limits;

    // ---- Example 1.9: 2-minors of a 2x3 matrix --------------------------
    s.claim("1.9/rees-kernel", "[1.9]", [&]() -> std::pair<bool, std::string> {
        Ideal I = s.load_ideal("example-1-9.ideal");
        ReesPresentation P = rees_ideal(I, lim);
        std::vector<Poly> expected;
        MonomialOrder drl = MonomialOrder::degrevlex(P.ext->nvars());
        for (const char* text : {"-b*y1 + a*y2 - x1*y3", "c*y1 - b*y2 + x2*y3"})
            expected.push_back(parse_poly(text, *P.ext, drl));
        bool ok = ideal_equal(P.kernel, Ideal(P.ext, expected), drl, lim);
        ok = ok && substitution_defects(P).empty();
        return {ok,
                "kernel has " + std::to_string(P.kernel.gens().size()) +
                    " reduced generators; reading note: the first relation's x-term is taken "
                    "as -x1*y3"};
    });

    s.claim("1.9/initial-ideals", "[1.9]", [&]() -> std::pair<bool, std::string> {
        Ideal I = s.load_ideal("example-1-9.ideal");
        ReesPresentation P = rees_ideal(I, lim);
        const RingCtx& base = *P.base;
        std::vector<int> chain = {base.index_of("x1"), base.index_of("x2"), base.index_of("a"),
                                  base.index_of("c"), base.index_of("b")};
        MonomialOrder step_ord = MonomialOrder::degrevlex(P.ext->nvars());
        PropResult pr = prop_conclusion_check(P, chain, {step_ord}, lim);
        MonomialIdeal front = mono_ideal_from_strings({"c*y1", "b*y1", "b^2*y2"}, P.ext);
        MonomialIdeal last = mono_ideal_from_strings({"b*y1", "b*y2"}, P.ext);
        bool ok = pr.pass && pr.steps.size() == 5;
        for (int i = 0; i < 4 && ok; ++i) ok = pr.steps[i].initial == front;
        ok = ok && pr.steps[4].initial == last;
        std::string detail = "in(J_0..J_4) =";
        for (const PropStep& st : pr.steps)
            detail += " " + monomial_ideal_to_string(st.initial);
        return {ok, detail};
    });

    s.claim("1.9/d-sequence", "[1.9]", [&]() {
        return expect_dseq_pass(s.load_ideal("example-1-9.ideal"), "x1;x2;a;c;b", lim);
    });

    // ---- 2-minors of the generic symmetric 3x3 matrix -------------------
    s.claim("sym3x3/d-sequence", "[S1]", [&]() {
        return expect_dseq_pass(s.load_ideal("symmetric-3x3.ideal"), "a;b;e;d+f;c;f", lim);
    });

    // ---- Example 2.1: the two paths --------------------------------------
    s.claim("2.1a/cover-ideal", "[2.1a]", [&]() -> std::pair<bool, std::string> {
        Graph g = s.load_graph("example-2-1a.graph");
        RingPtr ring = graph_ring(g);
        MonomialIdeal got = cover_ideal(g, ring);
        MonomialIdeal expect = mono_ideal_from_strings({"x1*x3", "x2*x3", "x2*x4"}, ring);
        return {got == expect && is_unmixed(g), monomial_ideal_to_string(got) + ", unmixed"};
    });

    s.claim("2.1a/d-sequence", "[2.1a]", [&]() {
        Graph g = s.load_graph("example-2-1a.graph");
        return expect_dseq_pass(from_monomial_ideal(cover_ideal(g)), "x1;x3;x2+x4;x2", lim);
    });

    s.claim("2.1b/cover-ideal", "[2.1b]", [&]() -> std::pair<bool, std::string> {
        Graph g = s.load_graph("example-2-1b.graph");
        RingPtr ring = graph_ring(g);
        MonomialIdeal got = cover_ideal(g, ring);
        MonomialIdeal expect = mono_ideal_from_strings(
            {"x1*x3*x4", "x1*x3*x5", "x2*x4", "x2*x3*x5"}, ring);
        return {got == expect && !is_unmixed(g), monomial_ideal_to_string(got) + ", mixed"};
    });

    s.claim("2.1b/d-sequence", "[2.1b]", [&]() {
        Graph g = s.load_graph("example-2-1b.graph");
        return expect_dseq_pass(from_monomial_ideal(cover_ideal(g)), "x1;x3;x5;x2+x4;x2", lim);
    });

    // ---- Example 2.2: the star graph over the triangle -------------------
    StarGraph star22 = star_graph(3, {{0, 1}, {1, 2}, {0, 2}});

    s.claim("2.2/star-covers", "[2.2]", [&]() -> std::pair<bool, std::string> {
        MonomialIdeal closed = star_cover_generators(star22);
        MonomialIdeal dual = cover_ideal(star22.graph(), star22.ring());
        bool ok = closed == dual && !is_unmixed(star22.graph());
        return {ok, monomial_ideal_to_string(closed)};
    });

    s.claim("2.2/star-rees", "[2.2]", [&]() -> std::pair<bool, std::string> {
        StarReesResult r = star_rees_check(star22, lim);
        return {r.matches,
                "kernel matches the " + std::to_string(r.expected.size()) + " expected binomials"};
    });

    s.claim("2.2/d-sequence", "[2.2]", [&]() {
        Graph g = s.load_graph("example-2-2.graph");
        return expect_dseq_pass(from_monomial_ideal(cover_ideal(g)),
                                "x4;x5;x6;x1+x2+x3;2*x1+3*x2+5*x3;7*x1+11*x2+13*x3", lim);
    });

    // ---- Example 2.4: the 7-vertex chordal graph --------------------------
    s.claim("2.4/cover-ideal", "[2.4]", [&]() -> std::pair<bool, std::string> {
        Graph g = s.load_graph("example-2-4.graph");
        RingPtr ring = graph_ring(g);
        MonomialIdeal got = cover_ideal(g, ring);
        MonomialIdeal expect = mono_ideal_from_strings(
            {"x1*x3*x5*x6", "x2*x3*x4*x5*x6", "x1*x2*x4*x6*x7", "x1*x2*x3*x4*x6",
             "x2*x3*x4*x5*x7", "x1*x2*x3*x5*x7", "x1*x2*x5*x6*x7", "x2*x4*x5*x6*x7"},
            ring);
        bool ok = got == expect && is_chordal(g).chordal;
        return {ok, std::to_string(got.ngens()) + " generators, chordal"};
    });

    s.claim("2.4/generic-d-sequence", "[2.4]", [&]() -> std::pair<bool, std::string> {
        Graph g = s.load_graph("example-2-4.graph");
        Ideal I = from_monomial_ideal(cover_ideal(g));
        DseqReport rep = generic_d_sequence(I, 3, /*seed=*/7, /*bound=*/100, nullptr, lim);
        std::string detail = std::string("trials at seeds 7..9 -> ") + to_string(rep.verdict) +
                             (rep.passed() ? " (trial " + std::to_string(rep.trial) + ")" : "");
        return {rep.passed(), detail};
    });

    // ---- rational scrolls -------------------------------------------------
    std::vector<int> scroll_sizes = {2, 3, 4};
    if (opts.long_running) {
        scroll_sizes.push_back(5);
        scroll_sizes.push_back(6);
    }
    for (int n : scroll_sizes) {
        std::string id = "scroll-n" + std::to_string(n) + "/d-sequence";
        s.claim(id, "[S1]", [&, n]() {
            Ideal I = s.load_ideal("scroll-n" + std::to_string(n) + ".ideal");
            return expect_dseq_pass(I, scroll_sequence(n), lim);
        });
    }

    // ---- disjoint-facet chordal graphs: facet criterion + x-condition ----
    struct CmCase {
        const char* id;
        int n;
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<CmCase> cm_cases = {
        {"cm-1-path4", 4, {{1, 2}, {2, 3}, {3, 4}}},
        {"cm-2-tri-edge", 5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}},
        {"cm-3-two-tri", 6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}}},
        {"cm-4-k4-edge", 6,
         {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}},
        {"cm-5-fused-tri", 5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}},
    };
    for (const CmCase& cc : cm_cases) {
        s.claim(std::string("2.6/") + cc.id, "[2.6]", [&, cc]() -> std::pair<bool, std::string> {
            Graph g = graph_from_edges(cc.n, cc.edges);
            CmChordalResult cm = is_cm_chordal(g);
            if (!cm.is_cm) return {false, "facet partition criterion failed"};
            MonomialIdeal covers = cover_ideal(g);
            size_t degree = covers.gens().empty() ? 0 : covers.gens().front().deg();
            for (const Monomial& m : covers.gens())
                if (static_cast<size_t>(m.deg()) != degree)
                    return {false, "cover ideal is not equigenerated"};
            ReesPresentation P = rees_ideal(from_monomial_ideal(covers), lim);
            XConditionResult x = x_condition(P, lim);
            return {x.holds, std::to_string(cm.free_facets.size()) + " free facets, " +
                                 std::to_string(covers.ngens()) +
                                 " cover generators, x-condition " +
                                 (x.holds ? "holds" : "fails")};
        });
    }

    // ---- oracle cross-checks on powers ------------------------------------
    struct OracleCase {
        const char* id;
        const char* graph_file;
        int kmax;
    };
    std::vector<OracleCase> oracle_cases = {
        {"2.1a", "example-2-1a.graph", 3},
        {"2.1b", "example-2-1b.graph", 3},
        {"2.2", "example-2-2.graph", 3},
        {"2.4", "example-2-4.graph", 2},
    };
    for (const OracleCase& oc : oracle_cases) {
        for (int k = 1; k <= oc.kmax; ++k) {
            std::string id = std::string("oracle/") + oc.id + "-k" + std::to_string(k);
            s.claim(id, "[Intro]", [&, oc, k]() -> std::pair<bool, std::string> {
                Graph g = s.load_graph(oc.graph_file);
                MonomialIdeal I = cover_ideal(g);
                MonomialIdeal Ik = monomial_power(I, k);
                CwlResult r = is_componentwise_linear(Ik, opts.betti_limits);
                std::string detail = "reg " + std::to_string(r.reg) + ", components";
                for (const CwlComponent& c : r.components)
                    detail += " " + std::to_string(c.degree) + (c.linear ? "+" : "-");
                return {r.componentwise_linear, detail};
            });
        }
    }

    // ---- property suites ---------------------------------------------------
    s.claim("prop/groebner-random", "[prop]", [&]() { return groebner_property_suite(lim); });
    s.claim("prop/intersect-colon", "[prop]",
            [&]() { return intersect_colon_property_suite(lim); });
    s.claim("prop/cover-duality", "[prop]", [&]() { return cover_duality_suite(); });
    s.claim("prop/chordality", "[prop]", [&]() { return chordality_suite(); });
    s.claim("prop/homology-double", "[prop]", [&]() -> std::pair<bool, std::string> {
        std::vector<MonomialIdeal> ideals;
        for (const char* f : {"example-2-1a.graph", "example-2-1b.graph", "example-2-2.graph",
                              "example-2-4.graph"})
            ideals.push_back(cover_ideal(s.load_graph(f)));
        return homology_double_suite(ideals, opts.betti_limits);
    });

    // ---- negative controls --------------------------------------------------
    s.claim("neg/monomial-step", "[neg]", [&]() -> std::pair<bool, std::string> {
        RingPtr ring = make_ring({"x1", "y1"}, 1);
        Monomial m = mono_var(*ring, 0, 2);
        m.bump(1, 1);
        MonomialIdeal L(ring, {m});
        bool rejected = !monomial_step_check(L, 1);
        return {rejected, "x1^2*y1 rejected at step 1"};
    });

    s.claim("neg/ideal-equal", "[neg]", [&]() -> std::pair<bool, std::string> {
        RingPtr ring = make_ring_x(1);
        MonomialOrder ord = MonomialOrder::degrevlex(1);
        Ideal a(ring, {poly_var(*ring, 0)});
        Ideal b(ring, {poly_term(Coeff(1), mono_var(*ring, 0, 2))});
        return {!ideal_equal(a, b, ord, lim), "(x1) != (x1^2)"};
    });

    s.claim("neg/corrupted-kernel", "[neg]", [&]() -> std::pair<bool, std::string> {
        Ideal I = s.load_ideal("example-1-9.ideal");
        ReesPresentation P = rees_ideal(I, lim);
        if (P.kernel.gens().empty()) return {false, "kernel unexpectedly zero"};
        std::vector<Poly> tampered = P.kernel.gens();
        std::vector<Term> ts = tampered.front().terms();
        ts.back().c = -ts.back().c;  // sign flip
        CoeffField F(P.ext->characteristic());
        tampered.front() = Poly::make(std::move(ts), F,
                                      MonomialOrder::degrevlex(P.ext->nvars()));
        ReesPresentation bad = P;
        bad.kernel = Ideal(P.ext, tampered);
        std::vector<int> defects = substitution_defects(bad);
        bool caught = !defects.empty() && substitution_defects(P).empty();
        return {caught, "sign flip detected by the substitution soundness check"};
    });

    return s.rep;
}

} // namespace cwlin
