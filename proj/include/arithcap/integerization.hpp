#pragma once

// Exponents M for which the N highest non-leading coefficients of f(x)^M are
// integers, for a monic f with rational coefficients.
//
// Two routes are provided. The valuation route takes k = lcm of the
// denominators of f and returns M = prod_{p | k} p^{N (1 + v_p(k))}. The lcm
// suffices in place of the product of denominators: a coefficient of x^{dM-i},
// i <= N, is a sum of products with at most N non-leading factors, and k^N
// clears each such product. The search route returns the smallest M that
// passes verify_top_integrality.

#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "arithcap/exact_algebra.hpp"

namespace arithcap {

enum class IntegerizationRoute { Formula, Search };

struct IntegerizationResult {
    mpz_class M;
    mpz_class k;
    // prime -> valuation of M at that prime (for the formula route this is
    // the required valuation N (1 + v_p(k))).
    std::vector<std::pair<unsigned long, unsigned long>> prime_exponents;
    IntegerizationRoute route = IntegerizationRoute::Formula;
    bool verified = false;

    // The valuation condition is preserved by multiples, so t*M works for
    // every t >= 1.
    auto multiples() const {
        return std::views::iota(std::uint64_t{1}) |
               std::views::transform([M = M](std::uint64_t t) { return mpz_class(M * t); });
    }
};

// Prime factorization by trial division; fine for denominators seen here.
std::vector<std::pair<unsigned long, unsigned long>> factor_small(const mpz_class& n);

IntegerizationResult integerizing_exponent(const RatPoly& f, unsigned N);

// Smallest M in (min_exclusive, cap] that verifies; throws NotFound past cap.
IntegerizationResult minimal_integerizing_exponent(const RatPoly& f, unsigned N, std::uint64_t cap,
                                                   std::uint64_t min_exclusive = 0);

// True iff the coefficients of x^{dM-i}, 1 <= i <= N, of f^M are integers.
// Works on the reversed polynomial as a series truncated at X^N.
bool verify_top_integrality(const RatPoly& f, const mpz_class& M, unsigned N);

// The coefficients of x^{dM}, x^{dM-1}, ..., x^{dM-N} of f^M.
std::vector<mpq_class> top_coefficients(const RatPoly& f, const mpz_class& M, unsigned N);

std::string to_string(IntegerizationRoute route);

} // namespace arithcap
