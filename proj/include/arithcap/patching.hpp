#pragma once

// From a monic polynomial m with inf_K |m| > 1 on K = C \ U, build a monic
// integer polynomial p with the same property, together with an exact
// certificate of the parameter chain used along the way.
//
// U is a finite union of open disks. All inequalities on the chain
// (epsilon, r, R, k, N, M) are checked in exact rational arithmetic; the lower
// bound R for inf_K |f| comes from a grid evaluation with a Lipschitz slack.

#include <complex>
#include <cstdint>
#include <vector>

#include "arithcap/exact_algebra.hpp"

namespace arithcap {

struct Hole {
    std::complex<double> center;
    double radius = 0.0;
};

class RegionSpec {
public:
    RegionSpec() = default;
    explicit RegionSpec(std::vector<Hole> holes);

    const std::vector<Hole>& holes() const { return holes_; }
    // Smallest radius rho with U inside the closed disk of radius rho.
    double bounding_radius() const { return bounding_radius_; }
    bool in_hole(std::complex<double> z) const; // z in U
    bool in_K(std::complex<double> z) const { return !in_hole(z); }
    // Exact test that U lies in the closed disk of radius r.
    bool contained_in_disk(const mpq_class& r) const;

private:
    std::vector<Hole> holes_;
    double bounding_radius_ = 0.0;
};

struct PatchConfig {
    unsigned grid_resolution = 256;     // initial grid points per axis
    unsigned max_grid_resolution = 2048;
    std::uint64_t max_degree = 4096;    // cap on deg p = M d
    unsigned denominator_limit = 64;    // for rationalize
    unsigned r_denominator = 4;         // r is searched on the grid Z / r_denominator
    unsigned spot_samples = 1000;
    std::uint64_t seed = 1;
};

struct PatchParams {
    mpq_class epsilon;
    mpq_class r;
    mpq_class R_lower;
    unsigned long k = 0;
    unsigned long N = 0;
    mpz_class M = 1;
    unsigned long d = 0;
};

struct GreedyStep {
    unsigned long q = 0;
    unsigned long r = 0;
    mpq_class fraction;
};

struct ClearResult {
    IntPoly p;
    std::vector<GreedyStep> ledger;
};

struct SpotCheck {
    unsigned num_samples = 0;
    double min_abs_value = 0.0; // +inf when the minimum overflows a double
    double min_log_abs = 0.0;   // natural log of the minimum
};

struct PatchCertificate {
    IntPoly p;
    PatchParams params;
    std::size_t greedy_steps = 0;
    SpotCheck spot_check;
    bool exact_cert_ok = false;
    bool reconstruction_ok = false;
    bool unchanged = false; // input was already a monic integer polynomial
};

// Lower bound L <= inf |f| over K intersected with the closed disk of radius r.
// Starts at `grid` points per axis and refines up to config.max_grid_resolution
// while L <= 0; throws NoMargin when no positive bound is reached.
mpq_class certified_lower_bound(const RatPoly& f, const RegionSpec& region, const mpq_class& r, unsigned grid,
                                unsigned max_grid = 2048);

// Lower bound for |f(x)| on |x| >= r from |x|^{d-1} (|x| - sum_{i<d} |b_i|).
mpq_class outside_lower_bound(const RatPoly& f, const mpq_class& r);

// Sum of |b_i| over the non-leading coefficients.
mpq_class nonleading_abs_sum(const RatPoly& f);

// Smallest r in (1/den) Z with U inside the closed r-disk and r > S + 2; with
// `growth` also r^{d-2} (r - S) >= 1, i.e. |f(x)| > |x| outside the disk.
mpq_class choose_radius(const RatPoly& f, const RegionSpec& region, unsigned den, bool growth);

PatchParams choose_parameters(const RatPoly& f, const RegionSpec& region, const PatchConfig& config = {});

// Both k-inequalities, R > 1, N = d k and M > k, all exact.
bool verify_inequalities(const PatchParams& params);

ClearResult clear_fractional_parts(const RatPoly& f, const mpz_class& M, unsigned long N, bool check_steps = false);

// p + sum fraction_i f^{q_i} x^{r_i}; equals f^M for a correct ledger.
RatPoly reconstruct(const IntPoly& p, const RatPoly& f, const std::vector<GreedyStep>& ledger);

// Closest rational with denominator <= max_den.
mpq_class best_rational_approximation(const mpq_class& a, const mpz_class& max_den);

RatPoly rationalize(const RatPoly& m, const mpq_class& epsilon, const mpq_class& r, unsigned denominator_limit = 64);

// |p| at sample points of K within the closed r-disk, in MPFR arithmetic with
// enough bits to absorb cancellation.
SpotCheck spot_check(const IntPoly& p, const RegionSpec& region, const mpq_class& r, unsigned samples,
                     std::uint64_t seed);

PatchCertificate patch(const RatPoly& m, const RegionSpec& region, const PatchConfig& config = {});

// Best-effort search for a monic real polynomial with |p| > 1 on a sample
// cloud, seeded with Leja (greedy Fekete) points of the empty region the cloud
// encloses. Throws NotFound when nothing works, which is the expected outcome
// whenever the enclosed region has capacity >= 1.
RatPoly heuristic_real_candidate(const std::vector<std::complex<double>>& samples, unsigned degree_budget);

} // namespace arithcap
