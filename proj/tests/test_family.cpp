#include <doctest.h>

#include <cmath>
#include <random>

#include "arithcap/family.hpp"
#include "arithcap/text_format.hpp"

using namespace arithcap;

namespace {

AnalyticMap cmap(std::vector<cplx> c) { return AnalyticMap::polynomial(std::move(c)); }

IntPoly ip(const char* s) { return to_int_poly(parse_polynomial(s)); }

SeedSequence seed(std::vector<std::int64_t> v) {
    SeedSequence s;
    s.values = std::move(v);
    return s;
}

// sum a_n (1/q)^n with 1/q expanded by long division of X^m by rev(p), as
// rationals; an oracle for family_member that never uses integer inversion.
RatSeries member_oracle(const IntPoly& p, const SeedSequence& s, std::size_t order) {
    const auto m = static_cast<std::size_t>(p.degree());
    std::vector<mpq_class> rev(m + 1);
    for (std::size_t i = 0; i <= m; ++i) rev[i] = mpq_class(p[m - i]);
    std::vector<mpq_class> u(order + 1, 0), rem(order + 1 + m, 0);
    rem[m] = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        u[i] = rem[i] / rev[0];
        for (std::size_t j = 0; j <= m && i + j < rem.size(); ++j) rem[i + j] -= u[i] * rev[j];
    }
    RatSeries U(u, order), acc(std::vector<mpq_class>{}, order), pw = U;
    for (auto a : s.values) {
        acc = acc + mpq_class(static_cast<long>(a)) * pw;
        pw = pw * U;
    }
    return acc;
}

} // namespace

TEST_CASE("1/q for p = X - 2 has coefficients 2^(n-1)") {
    IntSeries u = q_inverse_series(ip("x - 2"), 64);
    CHECK(u[0] == 0);
    mpz_class want = 1;
    for (std::size_t n = 1; n <= 64; ++n) {
        CHECK(u[n] == want);
        want *= 2;
    }
}

TEST_CASE("members are integral and match the rational oracle") {
    std::mt19937_64 rng(1);
    for (const char* p : {"x - 2", "x^2 - 3*x + 1", "x^3 + x - 1"}) {
        IntPoly P = ip(p);
        for (const auto& s : random_seeds(10, 6, 3, rng())) {
            IntSeries g = family_member(P, s, 24);
            CHECK(to_rat_series(g) == member_oracle(P, s, 24));
        }
    }
}

TEST_CASE("valuation law for powers of 1/q") {
    IntPoly p = ip("x^2 - 3*x + 1");
    const std::size_t D = 32;
    for (std::size_t n = 1; n <= D / 2; ++n) {
        std::vector<std::int64_t> v(n, 0);
        v.back() = 1;
        auto val = family_member(p, seed(v), D).valuation();
        REQUIRE(val.has_value());
        CHECK(*val == 2 * n);
    }
}

TEST_CASE("linearity in the seed") {
    IntPoly p = ip("x^2 + x - 1");
    auto a = seed({1, -1, 2, 0, 3}), b = seed({0, 2, -2, 1, 1, 4}), sum = seed({1, 1, 0, 1, 4, 4});
    CHECK(family_member(p, sum, 30) == family_member(p, a, 30) + family_member(p, b, 30));
}

TEST_CASE("injectivity at truncation") {
    IntPoly p = ip("x^2 - 2");
    const std::size_t D = 20; // D / m = 10
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> idx(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = random_seeds(1, 14, 1, rng())[0];
        auto t = s;
        const int i = idx(rng);
        t.values[static_cast<std::size_t>(i)] += 1;
        CHECK_FALSE(family_member(p, s, D) == family_member(p, t, D));
    }
    // Differences beyond D / m are invisible.
    auto s = seed({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    auto t = seed({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5});
    CHECK(family_member(p, s, D) == family_member(p, t, D));
}

TEST_CASE("distinctness report") {
    IntPoly p = ip("x - 2");
    std::vector<SeedSequence> seeds;
    for (int i = 0; i < 32; ++i) {
        SeedSequence s;
        for (int b = 0; b < 5; ++b) s.values.push_back((i >> b) & 1);
        seeds.push_back(s);
    }
    auto rep = distinctness_check(p, seeds, 16);
    CHECK(rep.distinct);
    seeds.push_back(seeds[3]);
    rep = distinctness_check(p, seeds, 16);
    CHECK_FALSE(rep.distinct);
    REQUIRE(rep.collision.has_value());
    CHECK(rep.collision->first == 3);
    CHECK(rep.collision->second == 32);
}

TEST_CASE("random seeds respect their bound and are reproducible") {
    auto a = random_seeds(20, 9, 2, 42), b = random_seeds(20, 9, 2, 42);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].within_bound());
        CHECK(a[i].values == b[i].values);
    }
}

TEST_CASE("composition with f") {
    // g = 1/q for X - 2 is X/(1 - 2X); with f = X + X^2 compare against direct expansion.
    IntSeries g = q_inverse_series(ip("x - 2"), 10);
    IntSeries f(std::vector<mpz_class>{0, 1, 1}, 10);
    IntSeries h = compose_with_f(g, f, 10);
    IntSeries one_minus = IntSeries::one(10) - mpz_class(2) * f;
    CHECK(h * one_minus == f);
}

TEST_CASE("tail bound on a small disk") {
    auto dom = DomainSpec::circle(0.3);
    auto tb = tail_bound_check(ip("x - 2"), cmap({0.0, 1.0}), dom, 50);
    CHECK(tb.points.size() == 50);
    CHECK(tb.delta <= 0.75);
    CHECK(tb.geometric_ok);
    for (std::size_t i = 0; i < tb.points.size(); ++i) {
        const cplx z = tb.points[i];
        CHECK(std::abs(tb.ratios[i] - z / (1.0 - 2.0 * z)) < 1e-14);
    }
    CHECK(observed_ratio(tb.ratios, 12) <= tb.delta * (1 + 1e-12));
    auto sums = partial_sums(seed({1, 1, 1}), 0.5);
    CHECK(std::abs(sums[2] - 0.875) < 1e-15);
}

TEST_CASE("tail bound errors") {
    auto dom = DomainSpec::circle(0.3);
    CHECK_THROWS_AS(tail_bound_check(ip("2*x - 1"), cmap({0.0, 1.0}), dom, 10), Error);
    try {
        tail_bound_check(ip("x - 2"), cmap({0.0}), dom, 10);
        FAIL("expected SampleSingularity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SampleSingularity);
    }
}
