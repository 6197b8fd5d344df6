#pragma once

// Holomorphic maps on a neighbourhood of V: complex polynomials, truncated
// power series around a point (with a radius of validity), and compositions.
// Preimage-based operations accept polynomials only.

#include <memory>
#include <vector>

#include "arithcap/domain.hpp"
#include "arithcap/exact_algebra.hpp"

namespace arithcap {

class GreenSolution;

class AnalyticMap {
public:
    enum class Kind { Polynomial, Series, Composite };

    // sum_k c_k z^k
    static AnalyticMap polynomial(std::vector<cplx> coeffs);
    static AnalyticMap polynomial(const RatPoly& p);
    static AnalyticMap polynomial(const IntPoly& p);
    // sum_k c_k (z - center)^k for |z - center| < radius; tail_bound is a
    // caller-supplied bound on the truncation error, reported but not used.
    static AnalyticMap series(std::vector<cplx> coeffs, cplx center, double radius, double tail_bound = 0.0);
    // outer(inner(z))
    static AnalyticMap composed(const AnalyticMap& outer, const AnalyticMap& inner);

    Kind kind() const { return kind_; }
    bool is_polynomial() const { return kind_ == Kind::Polynomial; }
    // Coefficients of a polynomial (trailing zeros removed) or of a series.
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    double radius() const { return radius_; }
    double tail_bound() const { return tail_bound_; }

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;

private:
    Kind kind_ = Kind::Polynomial;
    std::vector<cplx> coeffs_;
    cplx center_ = 0.0;
    double radius_ = 0.0;
    double tail_bound_ = 0.0;
    std::shared_ptr<const AnalyticMap> outer_, inner_;
};

struct JetData {
    unsigned e = 0;            // vanishing order of f - f(O)
    std::vector<cplx> coeffs;  // Taylor coefficients c_0, c_1, ... in z - O
    double tolerance = 0.0;    // relative threshold used to decide zero coefficients
    double radius = 0.0;       // Cauchy circle radius
    cplx leading() const { return coeffs.at(e); }
};

// Taylor coefficients c_0..c_order at O by the trapezoid rule on a circle of
// radius half the distance from O to the boundary. A coefficient counts as
// zero when |c_i| rho^i <= rel_tol * max_j |c_j| rho^j.
JetData taylor_jet(const AnalyticMap& f, const DomainSpec& domain, std::size_t order, double rel_tol = 1e-10);

// log |c_e| + e * robin_c.
double jet_cap_norm(const JetData& jet, const GreenSolution& sol);

struct Root {
    cplx z;
    unsigned multiplicity = 1;
};

// Roots of sum_k c_k z^k with multiplicities: companion-matrix eigenvalues,
// Newton polishing, and clustering within 1e-4 (1 + |z|) for repeated ones.
std::vector<Root> polynomial_roots(const std::vector<cplx>& coeffs);

struct Preimage {
    cplx z;
    unsigned multiplicity = 1;
    bool inside = false; // in the open interior of V
};

// Solutions of f(z) = y for a polynomial f. Throws ConstantMap for constant f
// and InvalidArgument for other kinds of map.
std::vector<Preimage> preimages(const AnalyticMap& f, cplx y, const DomainSpec& domain);

} // namespace arithcap
