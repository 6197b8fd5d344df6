#pragma once

// Numerical checks of the pushforward, overflow and jet-norm identities for a
// solved Green's function. Every integral over mu runs over measure nodes on
// the boundary.

#include <string>
#include <vector>

#include "arithcap/analytic_map.hpp"
#include "arithcap/green.hpp"

namespace arithcap {

struct IdentityConfig {
    std::size_t nodes = 256;            // measure nodes per curve
    double boundary_zero = 1e-8;        // min |f| on the boundary nodes
    double center_zero = 1e-10;         // |f(O)| below this counts as f(O) = 0
    double vanishing_tolerance = 1e-10; // relative, for Taylor jets
    std::size_t jet_order = 16;
};

// integral of log|f| d mu; throws BoundaryZero when |f| <= boundary_zero at a node.
double log_abs_boundary_integral(const GreenSolution& sol, const AnalyticMap& f, const IdentityConfig& cfg = {});

// sum over preimages v of w of mult(v) g(v); zero contributions outside V.
double pushforward_green(const GreenSolution& sol, const AnalyticMap& f, cplx w);

// sum of mult(y) g(y) over the fiber of f(O) with O removed.
double divisor_sum(const GreenSolution& sol, const AnalyticMap& f);

enum class OverflowMethod { Definition, Energy };

double overflow(const GreenSolution& sol, const AnalyticMap& f, OverflowMethod method, const IdentityConfig& cfg = {});

// Double integral of log|f(z1) - f(z2)| against mu x mu for a polynomial f.
double boundary_energy(const GreenSolution& sol, const AnalyticMap& f, const IdentityConfig& cfg = {});

enum class Identity { Pushforward, ConstantTerm, Combined };

struct IdentityTerms {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual() const { return std::abs(lhs - rhs); }
};

// The two sides of the chosen identity. Pushforward and Combined need x with f(x) != 0.
IdentityTerms identity_terms(const GreenSolution& sol, const AnalyticMap& f, Identity which, cplx x = 0.0,
                             const IdentityConfig& cfg = {});
double identity_residual(const GreenSolution& sol, const AnalyticMap& f, Identity which, cplx x = 0.0,
                         const IdentityConfig& cfg = {});

// Deterministic sample points for the pointwise identities: spread over a
// box around V, avoiding O and the zeros of f.
std::vector<cplx> identity_sample_points(const GreenSolution& sol, const AnalyticMap& f, std::size_t count);

struct ClassicalCheck {
    double max_residual = 0.0;
    double v_infinity = 0.0;
    std::vector<cplx> points;
    std::vector<double> residuals;
};

// K = closed disk of the given radius about 0, handled in the chart w = 1/z
// where V is the disk of radius 1/hole_radius with O = 0. Checks
// G_K(z, inf) + V_inf = integral of log|z - w| d mu_inf(w), with
// V_inf = log cap(K) = -log ||dw(O)||.
ClassicalCheck classical_inverse_check(double hole_radius, std::size_t samples, const GreenConfig& gcfg = {},
                                       const IdentityConfig& cfg = {});

struct SymmetryReport {
    double max_deviation = 0.0;
    std::vector<cplx> points;
    std::vector<double> deviations;
};

// |f(conj z) - conj f(z)| over boundary samples. Throws AsymmetricDomain when
// O is not real or the boundary is not closed under conjugation.
SymmetryReport symmetry_check(const AnalyticMap& f, const DomainSpec& domain, std::size_t samples);

struct ArakelovDegree {
    double degree = 0.0;
    bool pseudoconvex = false;
};

// degree = log|c_1| + robin_c for a gluing jet of vanishing order 1.
ArakelovDegree arakelov_degree(const GreenSolution& sol, const JetData& gluing_jet);

struct DegreeRelation {
    unsigned e = 0;
    double jet_norm = 0.0;      // log norm of the jet of f o phi
    double e_times_degree = 0.0;
    double residual() const { return std::abs(jet_norm - e_times_degree); }
};

// For a monic integer f of vanishing order e at 0, compares the jet norm of
// f o phi with e times the degree of phi.
DegreeRelation degree_relation(const GreenSolution& sol, const AnalyticMap& phi, const IntPoly& f,
                               const IdentityConfig& cfg = {});

std::string to_string(Identity which);
std::string to_string(OverflowMethod method);

} // namespace arithcap
