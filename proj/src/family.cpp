#include "arithcap/family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unordered_map>

#include "arithcap/parallel.hpp"

namespace arithcap {

bool SeedSequence::within_bound() const {
    return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return v <= bound && -v <= bound; });
}

IntSeries q_inverse_series(const IntPoly& p, std::size_t order) {
    const IntPoly rev = reverse_unit_poly(p);
    const auto m = static_cast<std::size_t>(p.degree());
    const IntSeries inv = series_reciprocal(IntSeries::from_poly(rev, order), order);
    std::vector<mpz_class> v(order + 1, 0);
    for (std::size_t i = 0; i + m <= order; ++i) v[i + m] = inv[i];
    return IntSeries(std::move(v), order);
}

IntSeries family_member(const IntPoly& p, const SeedSequence& seed, std::size_t order) {
    const IntSeries u = q_inverse_series(p, order);
    const auto m = static_cast<std::size_t>(std::max<long>(p.degree(), 1));
    IntSeries acc(std::vector<mpz_class>{}, order);
    IntSeries power = u;
    for (std::size_t n = 1; n <= seed.values.size() && m * n <= order; ++n) {
        if (seed.values[n - 1] != 0) acc = acc + mpz_class(static_cast<long>(seed.values[n - 1])) * power;
        power = power * u;
    }
    return acc;
}

IntSeries compose_with_f(const IntSeries& g, const IntSeries& f, std::size_t order) { return series_compose(g, f, order); }

DistinctnessReport distinctness_check(const IntPoly& p, const std::vector<SeedSequence>& seeds, std::size_t order) {
    std::vector<IntSeries> members(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) members[i] = family_member(p, seeds[i], order);
    });
    DistinctnessReport rep;
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::string key;
        for (const auto& c : members[i].coeffs()) key += c.get_str(16) + ',';
        auto& bucket = buckets[std::hash<std::string>{}(key)];
        for (std::size_t j : bucket)
            if (members[j] == members[i]) {
                rep.distinct = false;
                if (!rep.collision) rep.collision = std::make_pair(j, i);
            }
        bucket.push_back(i);
    }
    return rep;
}

std::vector<SeedSequence> random_seeds(std::size_t count, std::size_t length, std::int64_t bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    std::vector<SeedSequence> out(count);
    for (auto& s : out) {
        s.bound = bound;
        s.values.resize(length);
        for (auto& v : s.values) v = dist(rng);
    }
    return out;
}

std::vector<cplx> domain_samples(const DomainSpec& domain, std::size_t count) {
    std::vector<cplx> out;
    const cplx O = domain.center();
    const std::size_t nb = std::max<std::size_t>(count / 2, 1);
    const std::size_t nc = domain.curves().size();
    for (std::size_t j = 0; j < nb; ++j) {
        const auto& c = domain.curves()[j % nc];
        out.push_back(c.eval(2.0 * std::numbers::pi * (static_cast<double>(j / nc) + 0.5) / static_cast<double>((nb + nc - 1) / nc)));
    }
    // Interior points on segments from O towards boundary points.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t j = 0; out.size() < count && j < 50 * count; ++j) {
        const cplx zb = domain.curves()[j % nc].eval(golden * static_cast<double>(j));
        const double s = (static_cast<double>(j % 7) + 0.5) / 7.0;
        const cplx z = O + s * (zb - O);
        if (domain.contains(z)) out.push_back(z);
    }
    return out;
}

TailBound tail_bound_check(const IntPoly& p, const AnalyticMap& phi, const DomainSpec& domain, std::size_t samples) {
    if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "p must be monic");
    const IntPoly rev = reverse_unit_poly(p);
    const auto m = static_cast<int>(p.degree());
    TailBound tb;
    const cplx O = domain.center();
    const double tiny = 1e-14 * domain.scale();
    for (const cplx x : domain_samples(domain, samples)) {
        const cplx ph = phi(x);
        cplx u = 0.0;
        if (std::abs(ph) == 0.0) {
            if (std::abs(x - O) > tiny) throw Error(ErrorCode::SampleSingularity, "phi vanishes away from O");
        } else {
            cplx r = 0.0;
            for (std::size_t i = rev.coeffs().size(); i-- > 0;) r = r * ph + rev.coeffs()[i].get_d();
            if (std::abs(r) == 0.0) throw Error(ErrorCode::SampleSingularity, "p(1/phi) vanishes at a sample");
            u = std::pow(ph, m) / r;
        }
        tb.points.push_back(x);
        tb.ratios.push_back(u);
        tb.delta = std::max(tb.delta, std::abs(u));
    }
    tb.geometric_ok = tb.delta < 1.0;
    return tb;
}

std::vector<cplx> partial_sums(const SeedSequence& seed, cplx u) {
    std::vector<cplx> out;
    cplx acc = 0.0, power = 1.0;
    for (auto a : seed.values) {
        power *= u;
        acc += static_cast<double>(a) * power;
        out.push_back(acc);
    }
    return out;
}

double observed_ratio(const std::vector<cplx>& ratios, std::size_t length) {
    SeedSequence ones;
    ones.values.assign(length, 1);
    double worst = 0.0;
    for (const cplx u : ratios) {
        const auto S = partial_sums(ones, u);
        for (std::size_t n = 2; n < S.size(); ++n) {
            const double prev = std::abs(S[n - 1] - S[n - 2]);
            const double next = std::abs(S[n] - S[n - 1]);
            if (prev > 1e-250) worst = std::max(worst, next / prev);
        }
    }
    return worst;
}

} // namespace arithcap
