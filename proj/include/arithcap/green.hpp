#pragma once

// Equilibrium Green's function g of a planar region V with pole at O, by the
// method of fundamental solutions:
//     g(z) = -log|z - O| + h(z),   h(z) = C + sum_j q_j log|z - s_j|,
// with sources s_j placed on the complexified boundary z(t - i tau), which
// lies outside V, and (C, q) fitted by least squares to h = log|z - O| on the
// boundary. g extends by zero outside the open interior.
//
// The equilibrium measure is mu = (1/2 pi) dg/dn_in ds, evaluated from the
// analytic derivative of the representation.

#include <cmath>
#include <cstddef>
#include <vector>

#include "arithcap/domain.hpp"

namespace arithcap {

struct GreenConfig {
    std::size_t collocation = 256;     // collocation points per curve
    double residual_threshold = 1e-6;  // max boundary mismatch before SolverIllConditioned
    bool convergence_check = true;     // also solve at half resolution and report the change
    std::vector<double> tau_candidates{0.8, 0.6, 0.4, 0.3, 0.2, 0.15, 0.1, 0.05};
};

struct MeasureNode {
    std::size_t curve = 0;
    double t = 0.0;
    cplx z;
    double weight = 0.0;
};

class GreenSolution {
public:
    const DomainSpec& domain() const { return domain_; }
    double robin_c() const { return robin_c_; }
    double capacity() const;
    double collocation_residual() const { return residual_; }
    // |robin_c at n - robin_c at n/2|; negative when not computed.
    double convergence_delta() const { return convergence_delta_; }
    double tau() const { return tau_; }
    std::size_t collocation() const { return collocation_; }
    const std::vector<cplx>& sources() const { return sources_; }
    const std::vector<double>& strengths() const { return strengths_; }
    double constant() const { return constant_; }

    // Harmonic part h, and g = -log|z-O| + h without the zero extension.
    double harmonic_part(cplx z) const;
    double raw_green(cplx z) const { return -std::log(std::abs(z - domain_.center())) + harmonic_part(z); }
    // Complex derivative of the analytic completion of g.
    cplx green_derivative(cplx z) const;

    // d mu / dt on curve i, before normalization.
    double density_dt(std::size_t curve, double t) const;
    // d mu / ds (per unit arclength), before normalization.
    double density_ds(std::size_t curve, double t) const;

    // Total mass of the trapezoid discretization with `nodes` points per curve.
    double raw_mass(std::size_t nodes) const;

private:
    friend GreenSolution solve_green(const DomainSpec&, const GreenConfig&);

    DomainSpec domain_;
    std::vector<cplx> sources_;
    std::vector<double> strengths_;
    double constant_ = 0.0;
    double robin_c_ = 0.0;
    double residual_ = 0.0;
    double convergence_delta_ = -1.0;
    double tau_ = 0.0;
    std::size_t collocation_ = 0;
};

GreenSolution solve_green(const DomainSpec& domain, const GreenConfig& config = {});

// g(x); exactly 0 outside the open interior. Throws PoleAtCenter at O.
double green_eval(const GreenSolution& sol, cplx x);

// Trapezoid discretization of mu with `nodes` points per curve; weights are
// normalized to sum to 1. Throws SolverIllConditioned when the raw mass is
// more than 1e-3 away from 1 or a weight is negative.
std::vector<MeasureNode> equilibrium_measure(const GreenSolution& sol, std::size_t nodes);

// U(zeta) = integral of log|zeta - x| d mu(x). Points far from the boundary
// use the trapezoid rule on the measure nodes; points near or on a curve use
// graded Gauss-Legendre panels around the closest boundary parameter.
class LogPotential {
public:
    LogPotential(const GreenSolution& sol, std::size_t nodes);
    double operator()(cplx zeta) const;
    const std::vector<MeasureNode>& nodes() const { return nodes_; }
    double mass() const { return mass_; }

private:
    const GreenSolution* sol_;
    std::vector<MeasureNode> nodes_;
    std::vector<double> spacing_; // max node spacing per curve
    std::size_t per_curve_;
    double mass_;
};

} // namespace arithcap
