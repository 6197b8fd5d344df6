#pragma once

// Exact dense univariate polynomials and truncated power series over Z and Q,
// plus p-adic valuation helpers. Coefficients are GMP integers/rationals;
// rationals are always kept canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithcap/errors.hpp"

namespace arithcap {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<mpz_class> {
    static bool is_unit(const mpz_class& c) { return c == 1 || c == -1; }
    static mpz_class inverse(const mpz_class& c) { return c; } // only called on units
};

template <>
struct coeff_traits<mpq_class> {
    static bool is_unit(const mpq_class& c) { return sgn(c) != 0; }
    static mpq_class inverse(const mpq_class& c) { return mpq_class(1) / c; }
};

template <class C>
class Poly {
public:
    using coeff_type = C;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }
    static Poly monomial(std::size_t k, C c = C(1)) {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(1); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const C& leading() const { return coeffs_.back(); }

    // Coefficient of X^i; zero past the degree.
    C operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    void set(std::size_t i, C c) {
        if (i >= coeffs_.size()) coeffs_.resize(i + 1);
        coeffs_[i] = std::move(c);
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const C& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const C& c) { return a *= c; }
    friend Poly operator*(const C& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // Multiply by X^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> v(k, C(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    Poly derivative() const {
        std::vector<C> v;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * C(static_cast<long>(i)));
        return Poly(std::move(v));
    }

    static Poly multiply(const Poly& a, const Poly& b);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using RatPoly = Poly<mpq_class>;
using IntPoly = Poly<mpz_class>;

template <class C>
Poly<C> Poly<C>::multiply(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

// Rational products go through a common denominator so the inner loop runs on
// integers and each output coefficient is canonicalized once.
template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b);

IntPoly to_int_poly(const RatPoly& p); // throws InvalidArgument if a denominator is not 1
RatPoly to_rat_poly(const IntPoly& p);
bool is_integral(const RatPoly& p);

// Least common multiple of the denominators of all coefficients.
mpz_class denominator_lcm(const RatPoly& p);

template <class C>
Poly<C> poly_pow(const Poly<C>& f, std::uint64_t n) {
    Poly<C> result = Poly<C>::constant(C(1));
    Poly<C> base = f;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

// Quotient of f by a monic g; throws NonzeroRemainder unless g divides f.
template <class C>
Poly<C> poly_div_exact(const Poly<C>& f, const Poly<C>& g) {
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "divisor must be monic");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw Error(ErrorCode::NonzeroRemainder, "divisor has larger degree");
    std::vector<C> rem = f.coeffs();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const std::size_t dq = static_cast<std::size_t>(f.degree()) - dg;
    std::vector<C> q(dq + 1);
    for (std::size_t k = dq + 1; k-- > 0;) {
        C c = rem[k + dg];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= c * g.coeffs()[j];
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (rem[i] != 0) throw Error(ErrorCode::NonzeroRemainder, "division leaves a remainder");
    return Poly<C>(std::move(q));
}

// X^m p(1/X) for monic p of degree m; the result has constant term 1.
IntPoly reverse_unit_poly(const IntPoly& p);

// Truncated power series c_0 + c_1 X + ... + c_D X^D + O(X^{D+1}).
template <class C>
class Series {
public:
    using coeff_type = C;

    Series() : coeffs_(1, C(0)) {}
    Series(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, C(0));
    }
    static Series from_poly(const Poly<C>& p, std::size_t order) { return Series(p.coeffs(), order); }
    static Series one(std::size_t order) { return Series(std::vector<C>{C(1)}, order); }
    static Series variable(std::size_t order) { return Series(std::vector<C>{C(0), C(1)}, order); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const C& operator[](std::size_t i) const { return coeffs_[i]; }
    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
    const std::vector<C>& coeffs() const { return coeffs_; }
    void set(std::size_t i, C c) {
        if (i < coeffs_.size()) coeffs_[i] = std::move(c);
    }

    // Index of the first nonzero coefficient, or nullopt when all stored
    // coefficients vanish.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    Series truncated(std::size_t order) const {
        std::vector<C> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        return Series(std::move(v), std::min(order, this->order()));
    }

    Series derivative() const {
        if (order() == 0) return Series(std::vector<C>{C(0)}, 0);
        std::vector<C> v(order());
        for (std::size_t i = 1; i <= order(); ++i) v[i - 1] = coeffs_[i] * C(static_cast<long>(i));
        return Series(std::move(v), order() - 1);
    }

    friend Series operator+(const Series& a, const Series& b) {
        std::size_t d = std::min(a.order(), b.order());
        std::vector<C> v(d + 1);
        for (std::size_t i = 0; i <= d; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
        return Series(std::move(v), d);
    }
    friend Series operator-(const Series& a, const Series& b) {
        std::size_t d = std::min(a.order(), b.order());
        std::vector<C> v(d + 1);
        for (std::size_t i = 0; i <= d; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
        return Series(std::move(v), d);
    }
    friend Series operator*(const Series& a, const Series& b) {
        std::size_t d = std::min(a.order(), b.order());
        std::vector<C> v(d + 1, C(0));
        for (std::size_t i = 0; i <= d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= d; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Series(std::move(v), d);
    }
    friend Series operator*(const C& c, Series s) {
        for (auto& x : s.coeffs_) x *= c;
        return s;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<C> coeffs_;
};

using RatSeries = Series<mpq_class>;
using IntSeries = Series<mpz_class>;

RatSeries to_rat_series(const IntSeries& s);
IntSeries to_int_series(const RatSeries& s); // throws InvalidArgument on a non-integer coefficient
bool is_integral(const RatSeries& s);

// t with s*t = 1 + O(X^{D+1}). Over Z the constant term must be +-1.
template <class C>
Series<C> series_reciprocal(const Series<C>& s, std::size_t order) {
    if (!coeff_traits<C>::is_unit(s[0]))
        throw Error(ErrorCode::NonUnitConstantTerm, "constant term is not invertible in the coefficient ring");
    const std::size_t d = std::min(order, s.order());
    const C inv0 = coeff_traits<C>::inverse(s[0]);
    std::vector<C> t(d + 1, C(0));
    t[0] = inv0;
    for (std::size_t n = 1; n <= d; ++n) {
        C acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            if (s[k] != 0) acc += s[k] * t[n - k];
        t[n] = -inv0 * acc;
    }
    return Series<C>(std::move(t), d);
}

// Order of g(f) when f has valuation v >= 1: f is known to f.order, and the
// missing tail of g only enters at X^{v (g.order + 1)}.
template <class C>
std::size_t composition_order(const Series<C>& g, const Series<C>& f, std::size_t order) {
    std::size_t v = f.valuation().value_or(f.order() + 1);
    std::size_t from_g = v * (g.order() + 1) - 1;
    return std::min({order, f.order(), from_g});
}

// g(f(T)) truncated; f must have zero constant term.
template <class C>
Series<C> series_compose(const Series<C>& g, const Series<C>& f, std::size_t order) {
    if (f[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "inner series must vanish at 0");
    const std::size_t d = composition_order(g, f, order);
    const Series<C> inner = f.truncated(d);
    const std::size_t top = std::min(g.order(), d);
    Series<C> acc(std::vector<C>{g[top]}, d);
    for (std::size_t k = top; k-- > 0;) {
        acc = acc * inner;
        std::vector<C> v = acc.coeffs();
        v[0] += g[k];
        acc = Series<C>(std::move(v), d);
    }
    return acc;
}

// Compositional inverse by Newton iteration h <- h - (f(h) - T) / f'(h),
// doubling the working precision each round.
template <class C>
Series<C> series_comp_inverse(const Series<C>& f, std::size_t order) {
    if (f[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "series must vanish at 0");
    if (f.order() < 1 || !coeff_traits<C>::is_unit(f[1]))
        throw Error(ErrorCode::NonInvertibleLinearTerm, "linear coefficient is not invertible");
    const std::size_t d = std::min(order, f.order());
    const C inv1 = coeff_traits<C>::inverse(f[1]);
    Series<C> h(std::vector<C>{C(0), inv1}, std::max<std::size_t>(d, 1));
    if (d <= 1) return h.truncated(d);
    // f' is known to order d - 1 only; the residual vanishes to order >= 1, so
    // the padded top coefficient never reaches the update.
    const Series<C> fprime(f.truncated(d).derivative().coeffs(), d);
    std::size_t prec = 1;
    while (prec < d) {
        prec = std::min(2 * prec + 1, d);
        Series<C> hp = h.truncated(prec);
        if (hp.order() < prec) hp = Series<C>(hp.coeffs(), prec);
        Series<C> residual = series_compose(f.truncated(prec), hp, prec) - Series<C>::variable(prec);
        Series<C> slope = series_compose(fprime.truncated(prec), hp, prec);
        h = hp - residual * series_reciprocal(slope, prec);
    }
    return h.truncated(d);
}

// p-adic valuations. vp_integer throws ZeroInput for n == 0.
unsigned long vp_integer(const mpz_class& n, unsigned long p);
// v_p(n!) by Legendre's formula.
std::uint64_t vp_factorial(std::uint64_t n, std::uint64_t p);
// v_p of the multinomial coefficient n! / prod(parts_i!); throws PartsMismatch
// unless the parts sum to n.
std::uint64_t vp_multinomial(std::uint64_t n, std::span<const std::uint64_t> parts, std::uint64_t p);

// Fractional part {a} in [0, 1), so that a - {a} = floor(a).
mpq_class fractional_part(const mpq_class& a);
mpz_class floor_of(const mpq_class& a);

} // namespace arithcap
