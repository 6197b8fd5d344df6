#include "arithcap/exact_algebra.hpp"

#include <numeric>

namespace arithcap {

namespace {

// Numerators of p scaled by the lcm of its denominators.
std::vector<mpz_class> scaled_numerators(const RatPoly& p, const mpz_class& den) {
    std::vector<mpz_class> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const mpq_class& c = p.coeffs()[i];
        out[i] = c.get_num() * (den / c.get_den());
    }
    return out;
}

} // namespace

template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const mpz_class da = denominator_lcm(a);
    const mpz_class db = denominator_lcm(b);
    const auto na = scaled_numerators(a, da);
    const auto nb = scaled_numerators(b, db);
    std::vector<mpz_class> acc(na.size() + nb.size() - 1, 0);
    for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] == 0) continue;
        for (std::size_t j = 0; j < nb.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
    const mpz_class den = da * db;
    std::vector<mpq_class> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        out[i] = mpq_class(acc[i], den);
        out[i].canonicalize();
    }
    return RatPoly(std::move(out));
}

mpz_class denominator_lcm(const RatPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

bool is_integral(const RatPoly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

IntPoly to_int_poly(const RatPoly& p) {
    std::vector<mpz_class> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "polynomial has a non-integer coefficient");
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<mpq_class> v(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(v));
}

IntPoly reverse_unit_poly(const IntPoly& p) {
    if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "reverse_unit_poly needs a monic polynomial");
    std::vector<mpz_class> v(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(v));
}

RatSeries to_rat_series(const IntSeries& s) {
    std::vector<mpq_class> v(s.coeffs().begin(), s.coeffs().end());
    return RatSeries(std::move(v), s.order());
}

bool is_integral(const RatSeries& s) {
    return std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

IntSeries to_int_series(const RatSeries& s) {
    std::vector<mpz_class> v;
    v.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) {
        if (c.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "series has a non-integer coefficient");
        v.push_back(c.get_num());
    }
    return IntSeries(std::move(v), s.order());
}

unsigned long vp_integer(const mpz_class& n, unsigned long p) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero is undefined");
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be a prime");
    mpz_class m = abs(n);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be a prime");
    std::uint64_t v = 0;
    while (n > 0) {
        n /= p;
        v += n;
    }
    return v;
}

std::uint64_t vp_multinomial(std::uint64_t n, std::span<const std::uint64_t> parts, std::uint64_t p) {
    std::uint64_t sum = 0;
    for (auto b : parts) sum += b;
    if (sum != n) throw Error(ErrorCode::PartsMismatch, "parts do not sum to n");
    std::uint64_t v = vp_factorial(n, p);
    for (auto b : parts) v -= vp_factorial(b, p);
    return v;
}

mpz_class floor_of(const mpq_class& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

mpq_class fractional_part(const mpq_class& a) { return a - mpq_class(floor_of(a)); }

} // namespace arithcap
