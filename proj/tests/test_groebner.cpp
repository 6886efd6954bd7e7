#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwlin/idealops.hpp"
#include "cwlin/parse.hpp"

using namespace cwlin;

namespace {

// The presentation ring of the bundled 2x3-minors example.
RingPtr ext19() { return make_ring({"x1", "x2", "a", "b", "c", "y1", "y2", "y3"}, 5); }

std::vector<Poly> kernel19(const RingCtx& ring, const MonomialOrder& ord) {
    return {parse_poly("-b*y1 + a*y2 - x1*y3", ring, ord),
            parse_poly("c*y1 - b*y2 + x2*y3", ring, ord)};
}

} // namespace

TEST_CASE("monomial ideal is its own reduced basis") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Ideal I(r, {poly_var(*r, 0), poly_var(*r, 1)});
    const GroebnerBasis& gb = I.groebner(ord);
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.elems[0] == poly_var(*r, 0));
    CHECK(gb.elems[1] == poly_var(*r, 1));
}

TEST_CASE("reference kernel: reduced basis and initial ideals") {
    RingPtr r = ext19();
    MonomialOrder ord = MonomialOrder::degrevlex(8);
    Ideal J(r, kernel19(*r, ord));
    const GroebnerBasis& gb = J.groebner(ord);

    // Hand-derived reduced basis: the two generators plus one s-polynomial.
    std::vector<Poly> expected = {
        parse_poly("b*y1 - a*y2 + x1*y3", *r, ord),
        parse_poly("c*y1 - b*y2 + x2*y3", *r, ord),
        parse_poly("b^2*y2 - a*c*y2 + c*x1*y3 - b*x2*y3", *r, ord),
    };
    REQUIRE(gb.elems.size() == 3);
    for (const Poly& e : expected)
        CHECK(std::find(gb.elems.begin(), gb.elems.end(), e) != gb.elems.end());

    MonomialIdeal ini = initial_ideal(r, gb);
    MonomialIdeal want(r, {parse_poly("b*y1", *r, ord).lm(), parse_poly("c*y1", *r, ord).lm(),
                           parse_poly("b^2*y2", *r, ord).lm()});
    CHECK(ini == want);

    // Quotients by leading segments of the chain x1, x2, a, c, b.
    std::vector<Poly> j2;
    for (const Poly& g : J.gens()) {
        Poly h = poly_kill_vars(g, {0, 1});
        if (!h.is_zero()) j2.push_back(h);
    }
    GroebnerBasis gb2 = buchberger(*r, j2, ord);
    CHECK(initial_ideal(r, gb2) == want);

    std::vector<Poly> j4;
    for (const Poly& g : J.gens()) {
        Poly h = poly_kill_vars(g, {0, 1, 2, 4});
        if (!h.is_zero()) j4.push_back(h);
    }
    GroebnerBasis gb4 = buchberger(*r, j4, ord);
    MonomialIdeal want4(r, {parse_poly("b*y1", *r, ord).lm(), parse_poly("b*y2", *r, ord).lm()});
    CHECK(initial_ideal(r, gb4) == want4);
}

TEST_CASE("normal form basics") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    CoeffField F(0);
    Ideal I(r, {parse_poly("x1^2 - x2", *r, ord), parse_poly("x1*x2 - 1", *r, ord)});
    const GroebnerBasis& gb = I.groebner(ord);
    for (const Poly& g : gb.elems) CHECK(normal_form(g, gb, F).is_zero());
    CHECK(normal_form(poly_const(*r, Coeff(1)), gb, F) == poly_const(*r, Coeff(1)));

    Ideal X(r, {poly_var(*r, 0)});
    const GroebnerBasis& gx = X.groebner(ord);
    CHECK(normal_form(parse_poly("x1*x2", *r, ord), gx, F).is_zero());
}

TEST_CASE("single binomial is its own basis") {
    RingPtr r = make_ring({"x1", "x2", "y1", "y2"}, 2);
    MonomialOrder ord = MonomialOrder::degrevlex(4);
    Poly g = parse_poly("x2*y1 - x1*y2", *r, ord);
    Ideal I(r, {g});
    const GroebnerBasis& gb = I.groebner(ord);
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == poly_monic(g, CoeffField(0)));
}

TEST_CASE("reduced basis is generator-order independent") {
    std::mt19937_64 rng(5);
    RingPtr r = make_ring_x(3);
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    std::vector<Poly> gens = {parse_poly("x1^2 - x2*x3", *r, ord),
                              parse_poly("x1*x2 - x3^2", *r, ord),
                              parse_poly("x2^2 - x1*x3", *r, ord)};
    GroebnerBasis ref = buchberger(*r, gens, ord);
    for (int iter = 0; iter < 6; ++iter) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(buchberger(*r, gens, ord).elems == ref.elems);
    }
}

TEST_CASE("unit ideal collapses to 1") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Ideal I(r, {parse_poly("x1", *r, ord), parse_poly("x1 - 1", *r, ord)});
    const GroebnerBasis& gb = I.groebner(ord);
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == poly_const(*r, Coeff(1)));
}

TEST_CASE("resource caps raise a distinct error") {
    RingPtr r = ext19();
    MonomialOrder ord = MonomialOrder::degrevlex(8);
    std::vector<Poly> gens = kernel19(*r, ord);
    GBLimits tight;
    tight.max_pair_reductions = 1;
    CHECK_THROWS_AS(buchberger(*r, gens, ord, tight), resource_limit_error);
    GBLimits ok;
    CHECK(buchberger(*r, gens, ord, ok).elems.size() == 3);
}

TEST_CASE("membership of random combinations") {
    std::mt19937_64 rng(17);
    RingPtr r = make_ring_x(3);
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    CoeffField F(0);
    std::vector<Poly> gens = {parse_poly("x1*x2 - x3", *r, ord),
                              parse_poly("x2^2 - x1", *r, ord)};
    Ideal I(r, gens);
    const GroebnerBasis& gb = I.groebner(ord);
    for (int iter = 0; iter < 40; ++iter) {
        Poly combo;
        for (const Poly& g : gens) {
            std::vector<Term> ts;
            for (int t = 0; t < 2; ++t) {
                Monomial m(3);
                int d = static_cast<int>(rng() % 3);
                for (int k = 0; k < d; ++k) m.bump(static_cast<int>(rng() % 3), 1);
                ts.push_back(Term{Coeff(static_cast<long>(rng() % 7) - 3), m});
            }
            Poly h = Poly::make(std::move(ts), F, ord);
            combo = poly_add(combo, poly_mul(h, g, F, ord), F, ord);
        }
        CHECK(normal_form(combo, gb, F).is_zero());
    }
}

TEST_CASE("groebner cache is shared across copies") {
    RingPtr r = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Ideal I(r, {parse_poly("x1^3 - x2", *r, ord)});
    const GroebnerBasis& a = I.groebner(ord);
    Ideal copy = I;
    const GroebnerBasis& b = copy.groebner(ord);
    CHECK(&a == &b);
}
