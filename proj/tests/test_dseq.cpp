#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwlin/graph.hpp"
#include "cwlin/idealops.hpp"
#include "cwlin/parse.hpp"
#include "cwlin/dseq.hpp"

using namespace cwlin;

namespace {

Ideal from_file(const std::string& name) {
    IdealFile f = load_ideal_file(std::string(CWLIN_DATA_DIR) + "/" + name);
    return Ideal(f.ring, f.gens);
}

std::vector<Poly> seq(const Ideal& I, const std::string& text) {
    return parse_poly_list(text, *I.ring(), MonomialOrder::degrevlex(I.ring()->nvars()));
}

} // namespace

TEST_CASE("monomial step criterion") {
    RingPtr r1 = make_ring({"x1", "y1"}, 1);
    Monomial bad = mono_var(*r1, 0, 2);
    bad.bump(1, 1);
    CHECK_FALSE(monomial_step_check(MonomialIdeal(r1, {bad}), 1));  // x-degree 2

    RingPtr r3 = make_ring({"x1", "x2", "x3", "y1"}, 3);
    std::vector<Monomial> gens;
    for (int j = 0; j < 3; ++j) {
        Monomial m = mono_var(*r3, j);
        m.bump(3, 1);
        gens.push_back(std::move(m));
    }
    CHECK(monomial_step_check(MonomialIdeal(r3, gens), 1));

    // No generator involves the tested variable: vacuous pass.
    RingPtr r19 = make_ring({"x1", "x2", "a", "b", "c", "y1", "y2", "y3"}, 5);
    MonomialOrder o = MonomialOrder::degrevlex(8);
    MonomialIdeal ini(r19, {parse_poly("c*y1", *r19, o).lm(), parse_poly("b*y1", *r19, o).lm(),
                            parse_poly("b^2*y2", *r19, o).lm()});
    CHECK(monomial_step_check(ini, 1));
    CHECK(monomial_step_check(ini, 2));
}

TEST_CASE("principal squared ideal in one variable passes") {
    RingPtr r = make_ring_x(1);
    MonomialOrder ord = MonomialOrder::degrevlex(1);
    Ideal I(r, {parse_poly("x1^2", *r, ord)});
    DseqReport rep = is_d_sequence_on_rees(I, seq(I, "x1"));
    CHECK(rep.passed());
    REQUIRE(rep.steps.size() == 1);
    CHECK(rep.steps[0].status == StepStatus::Pass);

    DseqReport gen = generic_d_sequence(I, 2, 5, 10);
    CHECK(gen.passed());
    CHECK(gen.generic);
}

TEST_CASE("input validation") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Ideal I(r, {parse_poly("x1*x2", *r, ord)});
    CHECK_THROWS_AS(is_d_sequence_on_rees(I, seq(I, "x1;x1")), input_error);
    CHECK_THROWS_AS(is_d_sequence_on_rees(I, seq(I, "x1")), input_error);
    CHECK_THROWS_AS(is_d_sequence_on_rees(I, seq(I, "x1;x1^2")), input_error);
    CHECK_THROWS_AS(generic_d_sequence(I, 0, 1, 10), input_error);
}

TEST_CASE("reference path: its stated sequence is a d-sequence") {
    Graph g = Graph::load(std::string(CWLIN_DATA_DIR) + "/example-2-1a.graph");
    Ideal I = from_monomial_ideal(cover_ideal(g));
    DseqReport rep = is_d_sequence_on_rees(I, seq(I, "x1;x3;x2+x4;x2"));
    CHECK(rep.passed());
    for (const DseqStep& st : rep.steps) CHECK(st.status == StepStatus::Pass);
}

TEST_CASE("2x3-minors: chain passes both the exact test and the initial criterion") {
    Ideal I = from_file("example-1-9.ideal");
    DseqReport rep = is_d_sequence_on_rees(I, seq(I, "x1;x2;a;c;b"));
    CHECK(rep.passed());

    ReesPresentation P = rees_ideal(I);
    const RingCtx& base = *P.base;
    std::vector<int> chain = {base.index_of("x1"), base.index_of("x2"), base.index_of("a"),
                              base.index_of("c"), base.index_of("b")};
    MonomialOrder ord = MonomialOrder::degrevlex(P.ext->nvars());
    PropResult pr = prop_conclusion_check(P, chain, {ord});
    CHECK(pr.pass);
    REQUIRE(pr.steps.size() == 5);
    CHECK(pr.steps[0].initial.ngens() == 3);
    CHECK(pr.steps[4].initial.ngens() == 2);
    // Criterion soundness: every passing step of the sufficient test is
    // matched by a pass of the exact step test.
    for (size_t i = 0; i < pr.steps.size(); ++i)
        if (pr.steps[i].pass) CHECK(rep.steps[i].status == StepStatus::Pass);
}

TEST_CASE("prop criterion on a zero kernel") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Ideal I(r, {parse_poly("x1 + x2", *r, ord)});
    ReesPresentation P = rees_ideal(I);
    REQUIRE(P.kernel.is_zero());
    PropResult pr = prop_conclusion_check(P, {0, 1});
    CHECK(pr.pass);
    for (const PropStep& st : pr.steps) CHECK(st.initial.is_zero());
}

TEST_CASE("definite failure with a verified certificate") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    CoeffField F(0);
    Ideal I(r, {parse_poly("x1^2", *r, ord), parse_poly("x2^2", *r, ord)});
    DseqReport rep = is_d_sequence_on_rees(I, seq(I, "x1;x2"));
    CHECK(rep.verdict == Verdict::Fail);
    REQUIRE(rep.steps.size() == 2);
    CHECK(rep.steps[0].status == StepStatus::Pass);
    REQUIRE(rep.steps[1].status == StepStatus::Fail);
    REQUIRE(rep.steps[1].certificate.has_value());

    // Re-verify the certificate conditions independently.
    const Poly& w = *rep.steps[1].certificate;
    RingPtr T = rep.ext;
    MonomialOrder ordT = MonomialOrder::degrevlex(T->nvars());
    Ideal A(T, rep.steps[1].rhs_gens);
    std::vector<Poly> m_gens = rep.kernel_gens;
    m_gens.push_back(poly_var(*T, 0));
    m_gens.push_back(poly_var(*T, 1));
    Ideal M(T, m_gens);
    Poly z2 = poly_lift(parse_poly("x2", *r, ord), T->nvars() - 2);
    CHECK(normal_form(poly_mul(w, poly_resort(z2, F, ordT), F, ordT), A.groebner(ordT), F)
              .is_zero());
    CHECK(normal_form(w, M.groebner(ordT), F).is_zero());
    CHECK_FALSE(normal_form(w, A.groebner(ordT), F).is_zero());

    // A generic basis cannot rescue it: no basis is a d-sequence here.
    DseqReport gen = generic_d_sequence(I, 2, 11, 10);
    CHECK(gen.verdict == Verdict::Fail);
    CHECK_FALSE(gen.warnings.empty());
}

TEST_CASE("conjugating by the change of basis gives the same verdict") {
    Graph g = Graph::load(std::string(CWLIN_DATA_DIR) + "/example-2-1a.graph");
    Ideal I = from_monomial_ideal(cover_ideal(g));
    const RingCtx& base = *I.ring();
    MonomialOrder ord = MonomialOrder::degrevlex(base.nvars());
    std::vector<Poly> z = seq(I, "x1;x3;x2+x4;x2");

    DseqReport direct = is_d_sequence_on_rees(I, z);

    LinearChange ch = basis_from_forms(z, base);
    std::vector<Poly> moved;
    for (const Poly& f : I.gens()) moved.push_back(apply_change(f, ch, base, ord));
    Ideal J(I.ring(), moved);
    std::vector<Poly> xs;
    for (int k = 0; k < base.nvars(); ++k) xs.push_back(poly_var(base, k));
    DseqReport conjugated = is_d_sequence_on_rees(J, xs);

    CHECK(direct.verdict == conjugated.verdict);
    REQUIRE(direct.steps.size() == conjugated.steps.size());
    for (size_t i = 0; i < direct.steps.size(); ++i)
        CHECK(direct.steps[i].status == conjugated.steps[i].status);
}

TEST_CASE("inconclusive verdicts under tight caps") {
    Ideal I = from_file("example-1-9.ideal");

    // Cap so small even the kernel elimination trips it.
    GBLimits tiny;
    tiny.max_pair_reductions = 2;
    DseqReport rep = is_d_sequence_on_rees(I, seq(I, "x1;x2;a;c;b"), nullptr, tiny);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK((!rep.warnings.empty() || !rep.steps.empty()));

    // Kernel fits, steps do not: the steps carry the inconclusive marks.
    ReesPresentation P = rees_ideal(I);
    GBLimits tight;
    tight.max_pair_reductions = 3;
    DseqReport rep2 = is_d_sequence_on_rees(I, P, seq(I, "x1;x2;a;c;b"), nullptr, tight);
    CHECK(rep2.verdict == Verdict::Inconclusive);
    bool any_open = false;
    for (const DseqStep& st : rep2.steps) any_open |= st.status == StepStatus::Inconclusive;
    CHECK(any_open);
}
