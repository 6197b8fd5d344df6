#include "arithcap/integerization.hpp"

namespace arithcap {

namespace {

void require_monic(const RatPoly& f) {
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial must be monic");
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "polynomial must have degree >= 1");
}

// X^d f(1/X) as a series truncated at X^N; constant term 1 since f is monic.
RatSeries reversed_series(const RatPoly& f, unsigned N) {
    std::vector<mpq_class> v(f.coeffs().rbegin(), f.coeffs().rend());
    if (v.size() > N + 1) v.resize(N + 1);
    return RatSeries(std::move(v), N);
}

RatSeries series_pow(RatSeries base, mpz_class e) {
    RatSeries result = RatSeries::one(base.order());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()) != 0) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool top_is_integral(const RatSeries& s, unsigned N) {
    for (unsigned i = 1; i <= N; ++i)
        if (s[i].get_den() != 1) return false;
    return true;
}

std::vector<std::pair<unsigned long, unsigned long>> valuations_at(const mpz_class& M, const mpz_class& k) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    for (auto [p, e] : factor_small(k)) out.emplace_back(p, vp_integer(M, p));
    return out;
}

} // namespace

std::vector<std::pair<unsigned long, unsigned long>> factor_small(const mpz_class& n) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    mpz_class m = abs(n);
    if (m == 0) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    for (unsigned long p = 2; mpz_class(p) * p <= m; ++p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (m > 1) {
        if (!m.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "prime factor too large");
        out.emplace_back(m.get_ui(), 1);
    }
    return out;
}

std::vector<mpq_class> top_coefficients(const RatPoly& f, const mpz_class& M, unsigned N) {
    require_monic(f);
    RatSeries s = series_pow(reversed_series(f, N), M);
    return s.coeffs();
}

bool verify_top_integrality(const RatPoly& f, const mpz_class& M, unsigned N) {
    require_monic(f);
    if (M < 1) throw Error(ErrorCode::InvalidArgument, "M must be positive");
    if (mpz_class(f.degree()) * M < N) throw Error(ErrorCode::DegreeTooSmall, "d*M is smaller than N");
    return top_is_integral(series_pow(reversed_series(f, N), M), N);
}

IntegerizationResult integerizing_exponent(const RatPoly& f, unsigned N) {
    require_monic(f);
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
    IntegerizationResult r;
    r.route = IntegerizationRoute::Formula;
    r.k = denominator_lcm(f);
    r.M = 1;
    for (auto [p, e] : factor_small(r.k)) {
        unsigned long need = static_cast<unsigned long>(N) * (1 + e);
        mpz_class pp;
        mpz_ui_pow_ui(pp.get_mpz_t(), p, need);
        r.M *= pp;
        r.prime_exponents.emplace_back(p, need);
    }
    // Coefficients below degree 0 are zero, so no degree guard is needed here.
    r.verified = top_is_integral(series_pow(reversed_series(f, N), r.M), N);
    return r;
}

IntegerizationResult minimal_integerizing_exponent(const RatPoly& f, unsigned N, std::uint64_t cap,
                                                   std::uint64_t min_exclusive) {
    require_monic(f);
    if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
    const RatSeries base = reversed_series(f, N);
    const std::uint64_t start = min_exclusive + 1;
    RatSeries power = series_pow(base, mpz_class(static_cast<unsigned long>(start)));
    for (std::uint64_t M = start; M <= cap; ++M) {
        if (top_is_integral(power, N)) {
            IntegerizationResult r;
            r.route = IntegerizationRoute::Search;
            r.M = static_cast<unsigned long>(M);
            r.k = denominator_lcm(f);
            r.prime_exponents = valuations_at(r.M, r.k);
            r.verified = true;
            return r;
        }
        power = power * base;
    }
    throw Error(ErrorCode::NotFound, "no integerizing exponent up to cap " + std::to_string(cap));
}

std::string to_string(IntegerizationRoute route) {
    return route == IntegerizationRoute::Formula ? "formula" : "search";
}

} // namespace arithcap
