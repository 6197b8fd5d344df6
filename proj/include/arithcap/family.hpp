#pragma once

// Integer power series sum_n a_n / q(X)^n with q(X) = p(1/X) for a monic
// integer p, and the numerical checks that the family converges on V.
//
// 1/q(X) = X^m / (X^m p(1/X)) lies in X^m Z[[X]], so the n-th term starts at
// X^{mn}: seeds that differ at index n give series that differ by order mn.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arithcap/analytic_map.hpp"
#include "arithcap/domain.hpp"
#include "arithcap/exact_algebra.hpp"

namespace arithcap {

struct SeedSequence {
    std::vector<std::int64_t> values; // a_1, a_2, ...; zeros after the end
    std::int64_t bound = 1;

    bool within_bound() const;
};

IntSeries q_inverse_series(const IntPoly& p, std::size_t order);

// sum_n a_n (1/q)^n truncated at order.
IntSeries family_member(const IntPoly& p, const SeedSequence& seed, std::size_t order);

IntSeries compose_with_f(const IntSeries& g, const IntSeries& f, std::size_t order);

struct DistinctnessReport {
    bool distinct = true;
    std::optional<std::pair<std::size_t, std::size_t>> collision;
};

DistinctnessReport distinctness_check(const IntPoly& p, const std::vector<SeedSequence>& seeds, std::size_t order);

// Seeds with entries drawn uniformly from [-bound, bound].
std::vector<SeedSequence> random_seeds(std::size_t count, std::size_t length, std::int64_t bound, std::uint64_t seed);

// Sample points of V: boundary points and interior points on rays from O.
std::vector<cplx> domain_samples(const DomainSpec& domain, std::size_t count);

struct TailBound {
    double delta = 0.0;   // max |1/q(phi(x))| over the samples
    bool geometric_ok = false;
    std::vector<cplx> points;
    std::vector<cplx> ratios; // 1/q(phi(x)) at each point
};

// Evaluates 1/q(phi) = phi^m / rev(p)(phi). Throws SampleSingularity when phi
// vanishes at a sample other than O or when p(1/phi) = 0.
TailBound tail_bound_check(const IntPoly& p, const AnalyticMap& phi, const DomainSpec& domain, std::size_t samples);

// Partial sums S_1..S_n of sum_k a_k u^k.
std::vector<cplx> partial_sums(const SeedSequence& seed, cplx u);

// Largest observed ratio |S_{n+1} - S_n| / |S_n - S_{n-1}| over consecutive
// nonzero terms of the all-ones seed of the given length, across the points.
double observed_ratio(const std::vector<cplx>& ratios, std::size_t length);

} // namespace arithcap
