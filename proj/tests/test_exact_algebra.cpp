#include <doctest.h>

#include <random>

#include "arithcap/exact_algebra.hpp"
#include "arithcap/text_format.hpp"
#include "oracles.hpp"

using namespace arithcap;

namespace {

RatSeries rs(std::vector<long> v, std::size_t order) {
    std::vector<mpq_class> c(v.begin(), v.end());
    return RatSeries(std::move(c), order);
}

} // namespace

TEST_CASE("polynomial products agree with the schoolbook oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        RatPoly a = oracle::random_rat_poly(rng, 1 + i % 6, 9, {1, 2, 3, 5, 7, 12});
        RatPoly b = oracle::random_rat_poly(rng, 2 + i % 4, 9, {1, 4, 9, 10});
        CHECK(a * b == oracle::naive_product(a, b));
    }
}

TEST_CASE("exact division inverts multiplication") {
    RatPoly g = parse_polynomial("x^2 - 1/3*x + 5");
    RatPoly f = parse_polynomial("2/7*x^3 + x - 4");
    CHECK(poly_div_exact(f * g, g) == f);
    CHECK_THROWS_AS(poly_div_exact(f * g + RatPoly::constant(1), g), Error);
    try {
        poly_div_exact(g, parse_polynomial("2*x + 1"));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMonic);
    }
}

TEST_CASE("poly_pow matches repeated multiplication") {
    RatPoly f = parse_polynomial("x^2 - 1/2");
    RatPoly acc = RatPoly::constant(1);
    for (int n = 0; n < 9; ++n) {
        CHECK(poly_pow(f, static_cast<std::uint64_t>(n)) == acc);
        acc = oracle::naive_product(acc, f);
    }
}

TEST_CASE("series reciprocal") {
    // 1 / (1 - X) = sum X^n
    RatSeries inv = series_reciprocal(rs({1, -1}, 10), 10);
    for (std::size_t i = 0; i <= 10; ++i) CHECK(inv[i] == 1);
    IntSeries z = series_reciprocal(IntSeries(std::vector<mpz_class>{-1, 3, 1}, 8), 8);
    IntSeries one = IntSeries(std::vector<mpz_class>{-1, 3, 1}, 8) * z;
    CHECK(one == IntSeries::one(8));
    try {
        series_reciprocal(IntSeries(std::vector<mpz_class>{2, 1}, 4), 4);
        FAIL("expected NonUnitConstantTerm");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnitConstantTerm);
    }
}

TEST_CASE("composition and its order bookkeeping") {
    // exp-free check: (1 + T)^2 composed with T + T^2 = 1 + 2T + 3T^2 + 2T^3 + T^4
    RatSeries g = rs({1, 2, 1}, 6);
    RatSeries f = rs({0, 1, 1}, 6);
    RatSeries h = series_compose(g, f, 6);
    std::vector<long> want{1, 2, 3, 2, 1, 0, 0};
    for (std::size_t i = 0; i <= 6; ++i) CHECK(h[i] == want[i]);
    CHECK_THROWS_AS(series_compose(g, rs({1, 1}, 6), 6), Error);
    // g known to order 2 only: g(T^3 + ...) is determined up to T^8.
    CHECK(composition_order(rs({1, 2, 1}, 2), rs({0, 0, 0, 1}, 20), 20) == 8);
}

TEST_CASE("compositional inverse matches Lagrange inversion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpq_class> c(13, 0);
        c[1] = oracle::random_rational(rng, 5, {1, 2, 3});
        if (c[1] == 0) c[1] = 1;
        for (std::size_t i = 2; i <= 12; ++i) c[i] = oracle::random_rational(rng, 4, {1, 2, 5});
        RatSeries f(c, 12);
        RatSeries h = series_comp_inverse(f, 12);
        auto want = oracle::lagrange_inverse(c, 12);
        for (std::size_t i = 0; i <= 12; ++i) CHECK(h[i] == want[i]);
    }
    // Catalan numbers: inverse of T - T^2.
    IntSeries h = series_comp_inverse(IntSeries(std::vector<mpz_class>{0, 1, -1}, 10), 10);
    std::vector<long> catalan{0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t i = 0; i <= 10; ++i) CHECK(h[i] == catalan[i]);
    CHECK_THROWS_AS(series_comp_inverse(IntSeries(std::vector<mpz_class>{0, 2, 1}, 5), 5), Error);
}

TEST_CASE("p-adic valuations against expanded multinomials") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::uint64_t> part(0, 12);
        std::vector<std::uint64_t> parts{part(rng), part(rng), part(rng)};
        std::uint64_t n = parts[0] + parts[1] + parts[2];
        mpz_class m = oracle::multinomial(n, parts);
        for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
            CHECK(vp_multinomial(n, parts, p) == oracle::valuation(m, p));
            mpz_class fac;
            mpz_fac_ui(fac.get_mpz_t(), n);
            CHECK(vp_factorial(n, p) == oracle::valuation(fac, p));
        }
    }
    std::vector<std::uint64_t> bad{1, 2};
    CHECK_THROWS_AS(vp_multinomial(4, bad, 2), Error);
    CHECK_THROWS_AS(vp_integer(0, 2), Error);
    CHECK(vp_integer(96, 2) == 5);
}

TEST_CASE("fractional part and floor") {
    CHECK(fractional_part(mpq_class(7, 3)) == mpq_class(1, 3));
    CHECK(fractional_part(mpq_class(-7, 3)) == mpq_class(2, 3));
    CHECK(floor_of(mpq_class(-7, 3)) == -3);
    CHECK(fractional_part(mpq_class(4)) == 0);
}

TEST_CASE("reverse unit polynomial") {
    IntPoly p = to_int_poly(parse_polynomial("x^3 - 2*x + 5"));
    IntPoly r = reverse_unit_poly(p);
    CHECK(to_string(r) == "5*x^3 - 2*x^2 + 1");
}

TEST_CASE("polynomial text format") {
    RatPoly p = parse_polynomial("x^2 - 1/3*x + 5");
    REQUIRE(p.degree() == 2);
    CHECK(p[0] == 5);
    CHECK(p[1] == mpq_class(-1, 3));
    CHECK(p[2] == 1);
    CHECK(parse_polynomial("x") == RatPoly({0, 1}));
    CHECK(parse_polynomial("0.25*x - 1.5") == RatPoly({mpq_class(-3, 2), mpq_class(1, 4)}));
    try {
        parse_polynomial("x^^2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_polynomial(""), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x + y"), SyntaxError);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        RatPoly q = oracle::random_rat_poly(rng, i % 7, 20, {1, 3, 8, 11});
        CHECK(parse_polynomial(to_string(q)) == q);
    }
    RatSeries s = rs({1, -2, 0, 7}, 5);
    CHECK(series_from_json(series_to_json(s)) == s);
}
