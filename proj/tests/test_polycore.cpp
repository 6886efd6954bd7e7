#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwlin/linalg.hpp"
#include "cwlin/parse.hpp"

using namespace cwlin;

namespace {

RingPtr ring4() { return make_ring_x(4); }

Poly rnd_poly(const RingCtx& ring, std::mt19937_64& rng, const MonomialOrder& ord,
              int max_terms = 4, int max_deg = 3) {
    CoeffField F(ring.characteristic());
    std::vector<Term> ts;
    int n = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < n; ++t) {
        long c = static_cast<long>(rng() % 9) - 4;
        Monomial m(ring.nvars());
        int deg = static_cast<int>(rng() % (max_deg + 1));
        for (int d = 0; d < deg; ++d) m.bump(static_cast<int>(rng() % ring.nvars()), 1);
        ts.push_back(Term{Coeff(c), m});
    }
    return Poly::make(std::move(ts), F, ord);
}

// Independent determinant oracle: cofactor expansion.
Coeff cofactor_det(const QMat& a) {
    size_t n = a.size();
    if (n == 0) return Coeff(1);
    if (n == 1) return a[0][0];
    Coeff acc(0);
    for (size_t j = 0; j < n; ++j) {
        QMat minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Coeff> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Coeff term = a[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : Coeff(-term);
    }
    return acc;
}

} // namespace

TEST_CASE("parser: zero, reference generator, binomial identity") {
    RingPtr r19 = make_ring({"x1", "x2", "a", "b", "c"}, 5);
    MonomialOrder ord = MonomialOrder::degrevlex(5);
    CHECK(parse_poly("0", *r19, ord).is_zero());

    Poly g1 = parse_poly("-x2*a + x1*b", *r19, ord);
    CHECK(g1.nterms() == 2);
    CoeffField F(0);
    Poly built = poly_sub(poly_mul(poly_var(*r19, 0), poly_var(*r19, 3), F, ord),
                          poly_mul(poly_var(*r19, 1), poly_var(*r19, 2), F, ord), F, ord);
    CHECK(g1 == built);

    RingPtr r2 = make_ring_x(2);
    MonomialOrder ord2 = MonomialOrder::degrevlex(2);
    Poly p = parse_poly("(x1+x2)^2 - x1^2 - 2*x1*x2", *r2, ord2);
    CHECK(p == parse_poly("x2^2", *r2, ord2));
}

TEST_CASE("parser: rationals, errors") {
    RingPtr r2 = make_ring_x(2);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Poly half = parse_poly("1/2*x1 + 3/4", *r2, ord);
    CHECK(half.nterms() == 2);
    CHECK(half.lc() == Coeff(1, 2));
    CHECK_THROWS_AS(parse_poly("zz + 1", *r2, ord), parse_error);
    CHECK_THROWS_AS(parse_poly("x1^(2)", *r2, ord), parse_error);
    CHECK_THROWS_AS(parse_poly("x1^-2", *r2, ord), parse_error);
    CHECK_THROWS_AS(parse_poly("x1 x2", *r2, ord), parse_error);
}

TEST_CASE("order comparisons") {
    RingPtr r = make_ring_x(3);
    Monomial x1 = mono_var(*r, 0), x2 = mono_var(*r, 1), x3 = mono_var(*r, 2);

    MonomialOrder lex = MonomialOrder::lex(3);
    CHECK(mono_cmp(x1, mono_var(*r, 1, 5), lex) > 0);  // x1 > x2^5 under lex

    MonomialOrder drl = MonomialOrder::degrevlex(3);
    Monomial x2sq = mono_var(*r, 1, 2);
    CHECK(mono_cmp(x2sq, mono_mul(x1, x3), drl) > 0);  // x2^2 > x1*x3

    CHECK(mono_cmp(x2sq, x2sq, drl) == 0);
}

TEST_CASE("order axioms on random monomials") {
    std::mt19937_64 rng(42);
    RingPtr r = make_ring_x(4);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(4), MonomialOrder::degrevlex(4),
                                         MonomialOrder::block_elim(4, {1, 3})};
    auto random_mono = [&]() {
        Monomial m(4);
        int d = static_cast<int>(rng() % 5);
        for (int k = 0; k < d; ++k) m.bump(static_cast<int>(rng() % 4), 1);
        return m;
    };
    for (int iter = 0; iter < 300; ++iter) {
        Monomial a = random_mono(), b = random_mono(), c = random_mono();
        for (const auto& ord : orders) {
            int ab = mono_cmp(a, b, ord);
            CHECK(mono_cmp(b, a, ord) == -ab);
            if (ab == 0) CHECK(a == b);  // antisymmetry: a total order on monomials
            if (ab > 0 && mono_cmp(b, c, ord) > 0) CHECK(mono_cmp(a, c, ord) > 0);
            if (ab != 0) CHECK(mono_cmp(mono_mul(a, c), mono_mul(b, c), ord) == ab);
        }
    }
}

TEST_CASE("polynomial arithmetic properties") {
    std::mt19937_64 rng(7);
    RingPtr r = ring4();
    CoeffField F(0);
    MonomialOrder ord = MonomialOrder::degrevlex(4);
    for (int iter = 0; iter < 120; ++iter) {
        Poly f = rnd_poly(*r, rng, ord), g = rnd_poly(*r, rng, ord), h = rnd_poly(*r, rng, ord);
        CHECK(poly_sub(f, f, F, ord).is_zero());
        Poly lhs = poly_mul(poly_add(f, g, F, ord), h, F, ord);
        Poly rhs = poly_add(poly_mul(f, h, F, ord), poly_mul(g, h, F, ord), F, ord);
        CHECK(lhs == rhs);
        CHECK(poly_mul(f, g, F, ord) == poly_mul(g, f, F, ord));
        CHECK(poly_mul(poly_mul(f, g, F, ord), h, F, ord) ==
              poly_mul(f, poly_mul(g, h, F, ord), F, ord));
    }
}

TEST_CASE("parser round-trip on random polynomials") {
    std::mt19937_64 rng(11);
    RingPtr r = ring4();
    MonomialOrder ord = MonomialOrder::degrevlex(4);
    for (int iter = 0; iter < 150; ++iter) {
        Poly f = rnd_poly(*r, rng, ord, 5, 4);
        CHECK(parse_poly(poly_to_string(f, *r), *r, ord) == f);
    }
}

TEST_CASE("apply_change reference cases") {
    RingPtr r = make_ring_x(2);
    CoeffField F(0);
    MonomialOrder ord = MonomialOrder::degrevlex(2);

    // z = (x1 + x2, x2): phi(z_1) = x1 forces phi(x1) = x1 - x2.
    LinearChange ch(QMat{{Coeff(1), Coeff(1)}, {Coeff(0), Coeff(1)}}, F);
    CHECK(apply_change(parse_poly("x1 + x2", *r, ord), ch, *r, ord) ==
          parse_poly("x1", *r, ord));

    LinearChange id(mat_identity(2), F);
    Poly f = parse_poly("x1^2 - 3*x2", *r, ord);
    CHECK(apply_change(f, id, *r, ord) == f);

    RingPtr r1 = make_ring_x(1);
    MonomialOrder o1 = MonomialOrder::degrevlex(1);
    LinearChange scale(QMat{{Coeff(2)}}, F);
    CHECK(apply_change(parse_poly("2*x1", *r1, o1), scale, *r1, o1) ==
          parse_poly("x1", *r1, o1));
}

TEST_CASE("apply_change then inverse change is the identity") {
    std::mt19937_64 rng(23);
    RingPtr r = ring4();
    CoeffField F(0);
    MonomialOrder ord = MonomialOrder::degrevlex(4);
    for (int iter = 0; iter < 30; ++iter) {
        LinearChange ch = random_basis(*r, 1000 + iter, 5);
        LinearChange inv(ch.inverse(), F);
        Poly f = rnd_poly(*r, rng, ord);
        CHECK(apply_change(apply_change(f, ch, *r, ord), inv, *r, ord) == f);
    }
}

TEST_CASE("random_basis: determinism, invertibility, determinant oracle") {
    RingPtr r1 = make_ring_x(1);
    LinearChange tiny = random_basis(*r1, 5, 1);
    CHECK(tiny.matrix()[0][0] != 0);

    RingPtr r6 = make_ring_x(6);
    LinearChange a = random_basis(*r6, 99, 100);
    LinearChange b = random_basis(*r6, 99, 100);
    CHECK(a.matrix() == b.matrix());

    CoeffField F(0);
    CHECK(mat_det(a.matrix(), F) != 0);
    CHECK(mat_mul(a.matrix(), a.inverse(), F) == mat_identity(6));

    // The implementation's elimination determinant against cofactor expansion.
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int iter = 0; iter < 10; ++iter) {
            QMat m(n, std::vector<Coeff>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = Coeff(static_cast<long>(rng() % 9) - 4);
            CHECK(mat_det(m, F) == cofactor_det(m));
        }
    }
}

TEST_CASE("prime-field coefficient mode") {
    RingPtr r = make_ring(std::vector<std::string>{"x1", "x2"}, 2, 7);
    CoeffField F(7);
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Poly lhs = poly_pow(parse_poly("x1 + x2", *r, ord), 7, F, ord);
    Poly rhs = parse_poly("x1^7 + x2^7", *r, ord);
    CHECK(lhs == rhs);  // freshman's dream in characteristic 7
    CHECK_THROWS_AS(make_ring(std::vector<std::string>{"x"}, 1, 6), input_error);
}

TEST_CASE("ring context invariants") {
    CHECK_THROWS_AS(make_ring({}, 0), input_error);
    CHECK_THROWS_AS(make_ring({"x", "x"}, 2), input_error);
    RingPtr r = make_ring({"x1", "x2", "y1"}, 2);
    CHECK(r->x_count() == 2);
    CHECK(r->y_count() == 1);
    CHECK(r->index_of("y1") == 2);
    CHECK(r->index_of("zz") == -1);
}

TEST_CASE("ideal file round trip") {
    IdealFile f = load_ideal_file(std::string(CWLIN_DATA_DIR) + "/example-1-9.ideal");
    CHECK(f.ring->nvars() == 5);
    CHECK(f.gens.size() == 3);
    CHECK(poly_to_string(f.gens[0], *f.ring) == "-x2*a + x1*b");
}
