#include "cwlin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "cwlin/parse.hpp"
#include "cwlin/scan.hpp"
#include "cwlin/verify.hpp"
#include "cwlin/version.hpp"

#ifndef CWLIN_DATA_DIR
#define CWLIN_DATA_DIR "data"
#endif

namespace cwlin {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kInternal = 70;
constexpr int kResource = 75;

struct Common {
    bool json = false;
    GBLimits limits;
};

ojson base_report(const std::string& command) {
    ojson r;
    r["tool"] = "cwlin";
    r["version"] = kVersion;
    r["command"] = command;
    r["inputs"] = ojson::object();
    r["warnings"] = ojson::array();
    return r;
}

void finish(ojson& r, const Common& c, double ms, int code) {
    r["timing_ms"] = ms;
    r["exit"] = code;
    if (c.json) std::cout << r.dump(2) << std::endl;
}

MonomialOrder parse_order_spec(const std::string& spec, const RingCtx& ring) {
    std::string kind = spec;
    std::string chain_text;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        kind = spec.substr(0, colon);
        chain_text = spec.substr(colon + 1);
    }
    std::vector<int> chain;
    if (!chain_text.empty()) {
        std::string name;
        std::istringstream in(chain_text);
        while (std::getline(in, name, '>')) {
            name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
            int idx = ring.index_of(name);
            if (idx < 0) throw input_error("unknown variable in order chain: " + name);
            chain.push_back(idx);
        }
        if (static_cast<int>(chain.size()) != ring.nvars())
            throw input_error("order chain must mention every variable");
    }
    if (kind == "lex")
        return chain.empty() ? MonomialOrder::lex(ring.nvars()) : MonomialOrder::lex(chain);
    if (kind == "degrevlex" || kind == "drl")
        return chain.empty() ? MonomialOrder::degrevlex(ring.nvars())
                             : MonomialOrder::degrevlex(chain);
    throw input_error("unknown order kind '" + kind + "' (use lex or degrevlex)");
}

Ideal ideal_from_file(const std::string& path) {
    IdealFile f = load_ideal_file(path);
    return Ideal(f.ring, f.gens);
}

ojson poly_list_json(const std::vector<Poly>& ps, const RingCtx& ring) {
    ojson arr = ojson::array();
    for (const Poly& p : ps) arr.push_back(poly_to_string(p, ring));
    return arr;
}

ojson dseq_report_json(const DseqReport& rep) {
    ojson r;
    r["verdict"] = to_string(rep.verdict);
    r["mode"] = rep.generic ? "generic" : "explicit";
    if (rep.generic) {
        r["seed"] = rep.seed;
        r["trial"] = rep.trial;
    }
    r["sequence"] = poly_list_json(rep.sequence, *rep.base);
    r["kernel"] = poly_list_json(rep.kernel_gens, *rep.ext);
    ojson steps = ojson::array();
    for (const DseqStep& st : rep.steps) {
        ojson s;
        s["i"] = st.index;
        s["status"] = to_string(st.status);
        s["lhs"] = poly_list_json(st.lhs_gens, *rep.ext);
        s["rhs"] = poly_list_json(st.rhs_gens, *rep.ext);
        if (st.certificate) s["certificate"] = poly_to_string(*st.certificate, *rep.ext);
        if (!st.note.empty()) s["note"] = st.note;
        steps.push_back(std::move(s));
    }
    r["steps"] = std::move(steps);
    r["warnings"] = rep.warnings;
    return r;
}

void print_dseq_human(const DseqReport& rep) {
    std::cout << "sequence:";
    for (const Poly& z : rep.sequence) std::cout << "  " << poly_to_string(z, *rep.base) << ";";
    std::cout << "\nkernel generators (" << rep.kernel_gens.size() << "):\n";
    for (const Poly& g : rep.kernel_gens)
        std::cout << "  " << poly_to_string(g, *rep.ext) << "\n";
    for (const DseqStep& st : rep.steps) {
        std::cout << "step " << st.index << ": " << to_string(st.status);
        if (st.certificate)
            std::cout << "  certificate: " << poly_to_string(*st.certificate, *rep.ext);
        if (!st.note.empty()) std::cout << "  (" << st.note << ")";
        std::cout << "\n";
    }
    for (const std::string& w : rep.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kOk;
        case Verdict::Fail: return kFail;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kInternal;
}

// ---- command handlers ----------------------------------------------------

int cmd_dseq(const Common& c, const std::string& file, const std::string& sequence,
             bool generic, int trials, uint64_t seed, long bound, const std::string& order_spec,
             bool ini_criterion) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("dseq");
    r["inputs"]["file"] = file;
    Ideal I = ideal_from_file(file);
    if ((sequence.empty() && !generic) || (!sequence.empty() && generic))
        throw input_error("provide exactly one of --sequence or --generic");

    std::optional<MonomialOrder> ord;
    DseqReport rep;
    if (generic) {
        r["inputs"]["trials"] = trials;
        r["inputs"]["seed"] = seed;
        r["inputs"]["bound"] = bound;
        rep = generic_d_sequence(I, trials, seed, bound, nullptr, c.limits);
    } else {
        r["inputs"]["sequence"] = sequence;
        MonomialOrder base_ord = MonomialOrder::degrevlex(I.ring()->nvars());
        std::vector<Poly> z = parse_poly_list(sequence, *I.ring(), base_ord);
        if (ini_criterion) {
            // Sufficient initial-ideal criterion along a variable chain.
            std::vector<int> chain;
            for (const Poly& f : z) {
                if (f.nterms() != 1 || f.lc() != 1 || f.lm().deg() != 1)
                    throw input_error("--ini-criterion needs a chain of variables");
                for (int k = 0; k < I.ring()->nvars(); ++k)
                    if (f.lm().exp(k) == 1) chain.push_back(k);
            }
            ReesPresentation P = rees_ideal(I, c.limits);
            std::vector<MonomialOrder> orders;
            if (!order_spec.empty()) orders.push_back(parse_order_spec(order_spec, *P.ext));
            PropResult pr = prop_conclusion_check(P, chain, orders, c.limits);
            ojson steps = ojson::array();
            for (const PropStep& st : pr.steps) {
                ojson sj;
                sj["i"] = st.index;
                sj["pass"] = st.pass;
                sj["initial_ideal"] = monomial_ideal_to_string(st.initial);
                steps.push_back(std::move(sj));
                if (!c.json)
                    std::cout << "step " << st.index << ": " << (st.pass ? "pass" : "open")
                              << "  in(J_" << (st.index - 1)
                              << ") = " << monomial_ideal_to_string(st.initial) << "\n";
            }
            r["result"] = ojson{{"criterion", pr.pass ? "satisfied" : "not satisfied"},
                                {"steps", steps}};
            int code = pr.pass ? kOk : kInconclusive;
            if (!c.json)
                std::cout << (pr.pass ? "criterion satisfied: the chain is a d-sequence on the "
                                        "Rees algebra\n"
                                      : "criterion not satisfied (inconclusive)\n");
            finish(r, c,
                   std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             t0)
                       .count(),
                   code);
            return code;
        }
        rep = is_d_sequence_on_rees(I, z, nullptr, c.limits);
    }
    if (!c.json) print_dseq_human(rep);
    r["result"] = dseq_report_json(rep);
    int code = verdict_exit(rep.verdict);
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_rees(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("rees");
    r["inputs"]["file"] = file;
    Ideal I = ideal_from_file(file);
    ReesPresentation P = rees_ideal(I, c.limits);
    bool sound = substitution_defects(P).empty();
    if (!c.json) {
        std::cout << "presentation ring:";
        for (const auto& nm : P.ext->names()) std::cout << " " << nm;
        std::cout << "\nkernel generators (" << P.kernel.gens().size() << "):\n";
        for (const Poly& g : P.kernel.gens())
            std::cout << "  " << poly_to_string(g, *P.ext) << "\n";
        std::cout << "substitution soundness: " << (sound ? "ok" : "VIOLATED") << "\n";
    }
    r["result"] = ojson{{"ring", P.ext->names()},
                        {"kernel", poly_list_json(P.kernel.gens(), *P.ext)},
                        {"substitution_sound", sound}};
    int code = sound ? kOk : kInternal;
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_xcond(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("xcond");
    r["inputs"]["file"] = file;
    Ideal I = ideal_from_file(file);
    ReesPresentation P = rees_ideal(I, c.limits);
    XConditionResult x = x_condition(P, c.limits);
    if (!c.json) {
        std::cout << "initial ideal: " << monomial_ideal_to_string(x.initial) << "\n";
        std::cout << "x-condition: " << (x.holds ? "PASS" : "FAIL") << "\n";
        for (const Monomial& m : x.offending)
            std::cout << "  offending generator: " << mono_to_string(m, *P.ext) << "\n";
    }
    ojson off = ojson::array();
    for (const Monomial& m : x.offending) off.push_back(mono_to_string(m, *P.ext));
    r["result"] = ojson{{"holds", x.holds},
                        {"initial_ideal", monomial_ideal_to_string(x.initial)},
                        {"offending", off}};
    int code = x.holds ? kOk : kFail;
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_cover_ideal(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("cover-ideal");
    r["inputs"]["file"] = file;
    Graph g = Graph::load(file);
    RingPtr ring = graph_ring(g);
    MonomialIdeal I = cover_ideal(g, ring);
    auto covers = minimal_vertex_covers(g);
    bool unmixed = is_unmixed(g);
    if (!c.json) {
        std::cout << "cover ideal: " << monomial_ideal_to_string(I) << "\n";
        std::cout << "minimal covers: " << covers.size() << (unmixed ? " (unmixed)" : " (mixed)")
                  << "\n";
    }
    ojson gens = ojson::array();
    for (const Monomial& m : I.gens()) gens.push_back(mono_to_string(m, *ring));
    ojson cov = ojson::array();
    for (const auto& cset : covers) {
        ojson one = ojson::array();
        for (int v : cset) one.push_back(v + 1);
        cov.push_back(std::move(one));
    }
    r["result"] = ojson{{"generators", gens}, {"covers", cov}, {"unmixed", unmixed}};
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           kOk);
    return kOk;
}

int cmd_chordal(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("chordal");
    r["inputs"]["file"] = file;
    Graph g = Graph::load(file);
    ChordalityResult res = is_chordal(g);
    if (!c.json) {
        std::cout << (res.chordal ? "chordal" : "not chordal") << "\n";
        if (res.chordal) {
            std::cout << "elimination order:";
            for (int v : res.peo) std::cout << " " << v + 1;
            std::cout << "\n";
        } else {
            std::cout << "chordless cycle:";
            for (int v : res.chordless_cycle) std::cout << " " << v + 1;
            std::cout << "\n";
        }
    }
    ojson detail;
    detail["chordal"] = res.chordal;
    ojson lst = ojson::array();
    for (int v : (res.chordal ? res.peo : res.chordless_cycle)) lst.push_back(v + 1);
    detail[res.chordal ? "elimination_order" : "chordless_cycle"] = std::move(lst);
    r["result"] = std::move(detail);
    int code = res.chordal ? kOk : kFail;
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_cm_chordal(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("cm-chordal");
    r["inputs"]["file"] = file;
    Graph g = Graph::load(file);
    CmChordalResult res = is_cm_chordal(g);
    if (!c.json) {
        std::cout << (res.is_cm ? "facet criterion holds" : "facet criterion fails") << "\n";
        for (const auto& f : res.free_facets) {
            std::cout << "  free facet:";
            for (int v : f) std::cout << " " << v + 1;
            std::cout << "\n";
        }
    }
    ojson facets = ojson::array();
    for (const auto& f : res.free_facets) {
        ojson one = ojson::array();
        for (int v : f) one.push_back(v + 1);
        facets.push_back(std::move(one));
    }
    r["result"] = ojson{{"is_cm", res.is_cm}, {"free_facets", facets}};
    int code = res.is_cm ? kOk : kFail;
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

MonomialIdeal monomial_ideal_from_file(const std::string& file) {
    Ideal I = ideal_from_file(file);
    return to_monomial_ideal(I);
}

int cmd_betti(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("betti");
    r["inputs"]["file"] = file;
    MonomialIdeal M = monomial_ideal_from_file(file);
    BettiTable t = betti_numbers(M);
    if (!c.json) std::cout << t.to_diagram();
    ojson entries = ojson::array();
    for (const auto& [ij, v] : t.entries)
        entries.push_back(ojson{{"i", ij.first}, {"j", ij.second}, {"beta", v}});
    r["result"] = ojson{{"entries", entries}, {"regularity", t.regularity()}};
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           kOk);
    return kOk;
}

int cmd_cwl(const Common& c, const std::string& file) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("cwl");
    r["inputs"]["file"] = file;
    MonomialIdeal M = monomial_ideal_from_file(file);
    CwlResult res = is_componentwise_linear(M);
    if (!c.json) {
        std::cout << "regularity: " << res.reg << "\n";
        for (const CwlComponent& comp : res.components)
            std::cout << "  degree " << comp.degree << ": " << comp.ngens << " generators, "
                      << (comp.linear ? "linear" : "not linear") << "\n";
        std::cout << "componentwise linear: " << (res.componentwise_linear ? "yes" : "no")
                  << "\n";
    }
    ojson comps = ojson::array();
    for (const CwlComponent& comp : res.components)
        comps.push_back(
            ojson{{"degree", comp.degree}, {"ngens", comp.ngens}, {"linear", comp.linear}});
    r["result"] = ojson{{"componentwise_linear", res.componentwise_linear},
                        {"regularity", res.reg},
                        {"components", comps}};
    int code = res.componentwise_linear ? kOk : kFail;
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_verify(const Common& c, const std::string& data_dir, bool long_running,
               const std::string& filter) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("verify");
    r["inputs"]["data"] = data_dir;
    r["inputs"]["long"] = long_running;
    VerifyOptions opts;
    opts.data_dir = data_dir;
    opts.long_running = long_running;
    opts.limits = c.limits;
    opts.filter = filter;
    VerifyReport rep = run_verification(opts);
    ojson claims = ojson::array();
    for (const ClaimResult& cl : rep.claims) {
        if (!c.json)
            printf("%-12s %-7s %-28s %8.1f ms  %s\n", to_string(cl.status),
                   cl.location.c_str(), cl.id.c_str(), cl.millis, cl.detail.c_str());
        claims.push_back(ojson{{"id", cl.id},
                               {"location", cl.location},
                               {"status", to_string(cl.status)},
                               {"detail", cl.detail},
                               {"ms", cl.millis}});
    }
    if (!c.json)
        std::cout << rep.passed << " passed, " << rep.failed << " failed, " << rep.inconclusive
                  << " inconclusive\n";
    r["result"] = ojson{{"claims", claims},
                        {"passed", rep.passed},
                        {"failed", rep.failed},
                        {"inconclusive", rep.inconclusive}};
    int code = rep.failed ? kFail : (rep.inconclusive ? kInconclusive : kOk);
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

int cmd_scan(const Common& c, int max_vertices, int samples, uint64_t seed, int trials,
             long bound, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    ojson r = base_report("scan-chordal");
    r["inputs"] = ojson{{"max_vertices", max_vertices},
                        {"samples", samples},
                        {"seed", seed},
                        {"trials", trials},
                        {"bound", bound}};
    ScanOptions opts;
    opts.max_vertices = max_vertices;
    opts.samples = samples;
    opts.seed = seed;
    opts.trials = trials;
    opts.bound = bound;
    opts.threads = threads;
    opts.limits = c.limits;
    ScanReport rep = scan_chordal(opts);
    ojson rows = ojson::array();
    for (const ScanRow& row : rep.rows) {
        if (!c.json) {
            std::cout << "graph " << row.index << " (n=" << row.graph.n()
                      << ", edges=" << row.graph.nedges() << ", covers=" << row.cover_count
                      << "): " << to_string(row.verdict);
            if (!row.note.empty()) std::cout << " (" << row.note << ")";
            std::cout << "\n";
        }
        ojson edges = ojson::array();
        for (auto [u, v] : row.graph.edges())
            edges.push_back(ojson::array({u + 1, v + 1}));
        rows.push_back(ojson{{"index", row.index},
                             {"n", row.graph.n()},
                             {"edges", edges},
                             {"covers", row.cover_count},
                             {"verdict", to_string(row.verdict)},
                             {"seed", row.seed},
                             {"passing_trial", row.passing_trial},
                             {"note", row.note}});
    }
    if (!c.json)
        std::cout << rep.passed << " passed, " << rep.failed << " failed, " << rep.inconclusive
                  << " inconclusive\n";
    r["result"] = ojson{{"rows", rows},
                        {"passed", rep.passed},
                        {"failed", rep.failed},
                        {"inconclusive", rep.inconclusive},
                        {"potential_counterexamples", rep.failures}};
    int code = rep.failed ? kFail : (rep.inconclusive ? kInconclusive : kOk);
    finish(r, c,
           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count(),
           code);
    return code;
}

uint64_t env_or(const char* name, uint64_t fallback) {
    const char* v = std::getenv(name);
    return v ? std::strtoull(v, nullptr, 10) : fallback;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"componentwise-linearity of ideal powers via d-sequences on Rees algebras"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    common.limits.max_pair_reductions = env_or("CWLIN_PAIR_CAP", 1'000'000);
    common.limits.max_seconds =
        static_cast<double>(env_or("CWLIN_TIME_CAP", 600));
    app.add_flag("--json", common.json, "machine-readable JSON report");
    app.add_option("--groebner-cap", common.limits.max_pair_reductions,
                   "pair-reduction cap per basis computation");
    app.add_option("--time-cap", common.limits.max_seconds,
                   "wall-clock cap per basis computation, seconds");

    std::string file, sequence, order_spec, data_dir = CWLIN_DATA_DIR, filter;
    bool generic = false, ini_criterion = false, long_running = false;
    int trials = 3, max_vertices = 4, samples = 25, threads = 0;
    uint64_t seed = 1;
    long bound = 100;

    CLI::App* dseq = app.add_subcommand("dseq", "d-sequence test on the Rees algebra");
    dseq->add_option("file", file, "ideal file")->required();
    dseq->add_option("--sequence", sequence, "semicolon-separated linear forms");
    dseq->add_flag("--generic", generic, "random bases instead of an explicit sequence");
    dseq->add_option("--trials", trials, "random trials")->capture_default_str();
    dseq->add_option("--seed", seed, "random seed")->capture_default_str();
    dseq->add_option("--bound", bound, "coefficient bound for random bases")->capture_default_str();
    dseq->add_option("--order", order_spec, "order spec: lex|degrevlex[:chain]");
    dseq->add_flag("--ini-criterion", ini_criterion,
                   "run the sufficient initial-ideal criterion (sequence must be variables)");

    CLI::App* rees = app.add_subcommand("rees", "Rees presentation kernel");
    rees->add_option("file", file, "ideal file")->required();

    CLI::App* xcond = app.add_subcommand("xcond", "x-condition on the Rees kernel");
    xcond->add_option("file", file, "ideal file")->required();

    CLI::App* cover = app.add_subcommand("cover-ideal", "vertex cover ideal of a graph");
    cover->add_option("file", file, "graph file")->required();

    CLI::App* chordal = app.add_subcommand("chordal", "chordality with certificate");
    chordal->add_option("file", file, "graph file")->required();

    CLI::App* cm = app.add_subcommand("cm-chordal", "disjoint free-facet criterion");
    cm->add_option("file", file, "graph file")->required();

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers (monomial ideals)");
    betti->add_option("file", file, "ideal file")->required();

    CLI::App* cwl = app.add_subcommand("cwl", "componentwise-linearity via the Betti oracle");
    cwl->add_option("file", file, "ideal file")->required();

    CLI::App* verify = app.add_subcommand("verify", "reproduce the bundled reference examples");
    verify->add_option("--data", data_dir, "data directory")->capture_default_str();
    verify->add_flag("--long", long_running, "include the long-running scroll cases");
    verify->add_option("--filter", filter, "run only claims whose id contains this string");

    CLI::App* scan = app.add_subcommand("scan-chordal",
                                        "test the cover ideals of connected chordal graphs");
    scan->add_option("--max-vertices", max_vertices, "largest vertex count (<= 8)")->capture_default_str();
    scan->add_option("--samples", samples, "samples per size beyond the exhaustive range")->capture_default_str();
    scan->add_option("--seed", seed, "random seed")->capture_default_str();
    scan->add_option("--trials", trials, "random-basis trials per graph")->capture_default_str();
    scan->add_option("--bound", bound, "coefficient bound")->capture_default_str();
    scan->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (dseq->parsed())
            return cmd_dseq(common, file, sequence, generic, trials, seed, bound, order_spec,
                            ini_criterion);
        if (rees->parsed()) return cmd_rees(common, file);
        if (xcond->parsed()) return cmd_xcond(common, file);
        if (cover->parsed()) return cmd_cover_ideal(common, file);
        if (chordal->parsed()) return cmd_chordal(common, file);
        if (cm->parsed()) return cmd_cm_chordal(common, file);
        if (betti->parsed()) return cmd_betti(common, file);
        if (cwl->parsed()) return cmd_cwl(common, file);
        if (verify->parsed()) return cmd_verify(common, data_dir, long_running, filter);
        if (scan->parsed())
            return cmd_scan(common, max_vertices, samples, seed, trials, bound, threads);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

} // namespace cwlin
