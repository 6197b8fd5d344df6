#include <doctest.h>

#include <random>

#include "arithcap/integerization.hpp"
#include "arithcap/text_format.hpp"
#include "oracles.hpp"

using namespace arithcap;

TEST_CASE("x + 1/2 with two top coefficients") {
    RatPoly f = parse_polynomial("x + 1/2");
    auto formula = integerizing_exponent(f, 2);
    CHECK(formula.M == 16);
    CHECK(formula.verified);
    CHECK(to_string(formula.route) == "formula");
    auto search = minimal_integerizing_exponent(f, 2, 1000);
    CHECK(search.M == 8);
    CHECK(to_string(search.route) == "search");
    CHECK(verify_top_integrality(f, 16, 2));
    CHECK(verify_top_integrality(f, 8, 2));
    CHECK_FALSE(verify_top_integrality(f, 4, 2));
    // binom(8,1)/2 = 4 and binom(8,2)/4 = 7
    CHECK(oracle::top_coefficient(f, 8, 1) == 4);
    CHECK(oracle::top_coefficient(f, 8, 2) == 7);
    for (auto M : search.multiples() | std::views::take(4)) CHECK(verify_top_integrality(f, M, 2));
}

TEST_CASE("top coefficients match the multinomial expansion") {
    RatPoly f = parse_polynomial("x^3 + 2/3*x^2 - 1/2*x + 1/5");
    auto top = top_coefficients(f, 7, 4);
    for (unsigned j = 1; j <= 4; ++j) CHECK(top[j] == oracle::top_coefficient(f, 7, j));
}

TEST_CASE("integerization soundness on random inputs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly f = oracle::random_monic(rng, 1 + trial % 3, 5, {1, 2, 3, 4, 6});
        unsigned N = 1 + static_cast<unsigned>(trial % 3);
        auto r = integerizing_exponent(f, N);
        CHECK(r.verified);
        CHECK(oracle::top_integral(f, r.M, N));
        auto s = minimal_integerizing_exponent(f, N, 5000);
        CHECK(s.M <= r.M);
        CHECK(oracle::top_integral(f, s.M, N));
        for (unsigned long m = 1; m < s.M.get_ui(); ++m) CHECK_FALSE(oracle::top_integral(f, m, N));
    }
}

TEST_CASE("search respects the exclusive lower bound and the cap") {
    RatPoly f = parse_polynomial("x + 1/2");
    auto r = minimal_integerizing_exponent(f, 2, 1000, 8);
    CHECK(r.M == 16);
    try {
        minimal_integerizing_exponent(f, 2, 7);
        FAIL("expected NotFound");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFound);
        CHECK(e.family() == ErrorFamily::Integerization);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(integerizing_exponent(parse_polynomial("2*x + 1"), 2), Error);
    try {
        verify_top_integrality(parse_polynomial("x + 1/2"), 1, 3);
        FAIL("expected DegreeTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooSmall);
    }
}

TEST_CASE("small factorization") {
    auto f = factor_small(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<unsigned long, unsigned long>{2, 3});
    CHECK(f[1] == std::pair<unsigned long, unsigned long>{3, 2});
    CHECK(f[2] == std::pair<unsigned long, unsigned long>{5, 1});
    CHECK(factor_small(97).size() == 1);
}
