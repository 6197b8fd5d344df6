#include "arithcap/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "arithcap/parallel.hpp"

namespace arithcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_polynomial(const AnalyticMap& f) {
    if (!f.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "operation needs a polynomial map");
    if (f.degree() < 1) throw Error(ErrorCode::ConstantMap, "map is constant");
}

double coefficient_scale(const AnalyticMap& f, cplx z) {
    double s = 0.0, p = 1.0;
    for (const auto& c : f.coeffs()) {
        s += std::abs(c) * p;
        p *= std::abs(z);
    }
    return std::max(1.0, s);
}

void require_center_zero(const GreenSolution& sol, const AnalyticMap& f, const IdentityConfig& cfg) {
    const cplx O = sol.domain().center();
    if (std::abs(f(O)) > cfg.center_zero * coefficient_scale(f, O))
        throw Error(ErrorCode::CenterNotZero, "f(O) is not zero");
}

// integral of log|f(x') - y| d mu(x') = log|lead| + sum over roots of U(root).
double log_abs_shifted_integral(const LogPotential& U, const AnalyticMap& f, cplx y) {
    std::vector<cplx> c = f.coeffs();
    c[0] -= y;
    double acc = std::log(std::abs(c.back()));
    for (const auto& r : polynomial_roots(c)) acc += r.multiplicity * U(r.z);
    return acc;
}

} // namespace

double log_abs_boundary_integral(const GreenSolution& sol, const AnalyticMap& f, const IdentityConfig& cfg) {
    double acc = 0.0;
    for (const auto& n : equilibrium_measure(sol, cfg.nodes)) {
        const double v = std::abs(f(n.z));
        if (v <= cfg.boundary_zero) throw Error(ErrorCode::BoundaryZero, "f vanishes on the boundary");
        acc += n.weight * std::log(v);
    }
    return acc;
}

double pushforward_green(const GreenSolution& sol, const AnalyticMap& f, cplx w) {
    require_polynomial(f);
    double acc = 0.0;
    for (const auto& p : preimages(f, w, sol.domain()))
        if (p.inside) acc += p.multiplicity * green_eval(sol, p.z);
    return acc;
}

double divisor_sum(const GreenSolution& sol, const AnalyticMap& f) {
    require_polynomial(f);
    const cplx O = sol.domain().center();
    double acc = 0.0;
    for (const auto& p : preimages(f, f(O), sol.domain())) {
        if (std::abs(p.z - O) < 1e-6 * sol.domain().scale()) continue;
        if (p.inside) acc += p.multiplicity * green_eval(sol, p.z);
    }
    return acc;
}

double boundary_energy(const GreenSolution& sol, const AnalyticMap& f, const IdentityConfig& cfg) {
    require_polynomial(f);
    const auto& dom = sol.domain();
    const std::size_t n = cfg.nodes;
    const LogPotential U(sol, n);
    const auto& nodes = U.nodes();
    const std::size_t nc = dom.curves().size();

    // Diagonal factor: log|z1 - z2| with the periodic log-sine kernel split off.
    double diag = 0.0;
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b) {
            if (a != b) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const auto &p = nodes[a * n + i], &q = nodes[b * n + j];
                        diag += p.weight * q.weight * std::log(std::abs(p.z - q.z));
                    }
                continue;
            }
            const auto& curve = dom.curves()[a];
            double singular = 0.0;
            for (std::size_t k = 1; k < n / 2; ++k) {
                cplx W = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                    W += nodes[a * n + j].weight * std::polar(1.0, -static_cast<double>(k * j % n) * kTwoPi / static_cast<double>(n));
                singular -= std::norm(W) / static_cast<double>(k);
            }
            double smooth = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto &p = nodes[a * n + i], &q = nodes[a * n + j];
                    const double R = i == j ? std::log(std::abs(curve.deriv(p.t)))
                                            : std::log(std::abs(p.z - q.z)) -
                                                  std::log(std::abs(2.0 * std::sin(0.5 * (p.t - q.t))));
                    smooth += p.weight * q.weight * R;
                }
            diag += singular + smooth;
        }

    // Quotient factor: (f(z2) - f(z1)) / (z2 - z1) = lead * prod_k (z2 - zeta_k(z1)).
    const std::vector<cplx>& c = f.coeffs();
    const std::size_t d = c.size() - 1;
    std::vector<double> per_node(nodes.size(), 0.0);
    parallel_for(nodes.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const cplx z1 = nodes[i].z;
            double v = std::log(std::abs(c[d]));
            if (d >= 2) {
                std::vector<cplx> q(d);
                q[d - 1] = c[d];
                for (std::size_t k = d - 1; k >= 1; --k) q[k - 1] = c[k] + z1 * q[k];
                for (const auto& r : polynomial_roots(q)) v += r.multiplicity * U(r.z);
            }
            per_node[i] = v;
        }
    });
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (std::abs(f.derivative(nodes[i].z)) <= cfg.boundary_zero)
            throw Error(ErrorCode::BoundaryZero, "f' vanishes on the boundary, f(z1) - f(z2) degenerates on the diagonal");
    double quotient = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) quotient += nodes[i].weight * per_node[i];
    return diag + quotient;
}

double overflow(const GreenSolution& sol, const AnalyticMap& f, OverflowMethod method, const IdentityConfig& cfg) {
    require_polynomial(f);
    if (method == OverflowMethod::Energy) {
        const JetData jet = taylor_jet(f, sol.domain(), cfg.jet_order, cfg.vanishing_tolerance);
        return boundary_energy(sol, f, cfg) - jet_cap_norm(jet, sol);
    }
    const auto nodes = equilibrium_measure(sol, cfg.nodes);
    std::vector<double> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) vals[i] = pushforward_green(sol, f, f(nodes[i].z));
    });
    double acc = divisor_sum(sol, f);
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += nodes[i].weight * vals[i];
    return acc;
}

IdentityTerms identity_terms(const GreenSolution& sol, const AnalyticMap& f, Identity which, cplx x,
                             const IdentityConfig& cfg) {
    require_polynomial(f);
    require_center_zero(sol, f, cfg);
    const double L = log_abs_boundary_integral(sol, f, cfg);
    IdentityTerms t;
    if (which == Identity::ConstantTerm) {
        const JetData jet = taylor_jet(f, sol.domain(), cfg.jet_order, cfg.vanishing_tolerance);
        t.lhs = L;
        t.rhs = divisor_sum(sol, f) + jet_cap_norm(jet, sol);
        return t;
    }
    const cplx fx = f(x);
    if (std::abs(fx) <= cfg.center_zero) throw Error(ErrorCode::InvalidArgument, "f(x) must be nonzero");
    const LogPotential U(sol, cfg.nodes);
    const double push = pushforward_green(sol, f, fx);
    // integral of log|1/f(x) - 1/f(x')| d mu(x')
    const double I1 = log_abs_shifted_integral(U, f, fx) - std::log(std::abs(fx)) - L;
    if (which == Identity::Pushforward) {
        t.lhs = push;
        t.rhs = I1 + L;
    } else {
        const JetData jet = taylor_jet(f, sol.domain(), cfg.jet_order, cfg.vanishing_tolerance);
        t.lhs = push - (divisor_sum(sol, f) + jet_cap_norm(jet, sol));
        t.rhs = I1;
    }
    return t;
}

double identity_residual(const GreenSolution& sol, const AnalyticMap& f, Identity which, cplx x,
                         const IdentityConfig& cfg) {
    return identity_terms(sol, f, which, x, cfg).residual();
}

std::vector<cplx> identity_sample_points(const GreenSolution& sol, const AnalyticMap& f, std::size_t count) {
    const auto& dom = sol.domain();
    const cplx O = dom.center();
    double reach = 0.0;
    for (const auto& c : dom.curves())
        for (std::size_t j = 0; j < 256; ++j) reach = std::max(reach, std::abs(c.eval(kTwoPi * static_cast<double>(j) / 256.0) - O));
    reach *= 1.4;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<cplx> out;
    for (std::size_t j = 0; out.size() < count && j < 100 * count; ++j) {
        const double r = reach * std::sqrt((static_cast<double>(j) + 0.5) / static_cast<double>(count));
        const cplx x = O + std::polar(r, golden * static_cast<double>(j));
        if (std::abs(x - O) < 1e-3 * dom.scale() || std::abs(f(x)) < 1e-3) continue;
        if (dom.boundary_distance(x) < 1e-6 * dom.scale()) continue;
        out.push_back(x);
    }
    return out;
}

ClassicalCheck classical_inverse_check(double hole_radius, std::size_t samples, const GreenConfig& gcfg,
                                       const IdentityConfig& cfg) {
    if (!(hole_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "hole radius must be positive");
    const GreenSolution sol = solve_green(DomainSpec::circle(1.0 / hole_radius), gcfg);
    const AnalyticMap identity = AnalyticMap::polynomial(std::vector<cplx>{0.0, 1.0});
    const JetData jet = taylor_jet(identity, sol.domain(), cfg.jet_order, cfg.vanishing_tolerance);
    ClassicalCheck out;
    out.v_infinity = -jet_cap_norm(jet, sol);
    const auto nodes = equilibrium_measure(sol, cfg.nodes);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t j = 0; j < samples; ++j) {
        const double s = 1.25 * std::pow(4.0, static_cast<double>(j) / static_cast<double>(std::max<std::size_t>(samples - 1, 1)));
        const cplx z = std::polar(hole_radius * s, golden * static_cast<double>(j));
        const double G = green_eval(sol, 1.0 / z);
        double rhs = 0.0;
        for (const auto& n : nodes) rhs += n.weight * std::log(std::abs(z - 1.0 / n.z));
        const double res = std::abs(G + out.v_infinity - rhs);
        out.points.push_back(z);
        out.residuals.push_back(res);
        out.max_residual = std::max(out.max_residual, res);
    }
    return out;
}

SymmetryReport symmetry_check(const AnalyticMap& f, const DomainSpec& domain, std::size_t samples) {
    const double tol = 1e-8 * domain.scale();
    if (std::abs(domain.center().imag()) > tol) throw Error(ErrorCode::AsymmetricDomain, "O is not real");
    const std::size_t nc = domain.curves().size();
    const std::size_t per = std::max<std::size_t>(1, samples / nc);
    SymmetryReport rep;
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t j = 0; j < per; ++j) {
            const cplx z = domain.curves()[c].eval(kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(per));
            if (domain.boundary_distance(std::conj(z)) > tol)
                throw Error(ErrorCode::AsymmetricDomain, "boundary is not symmetric under conjugation");
            const double dev = std::abs(f(std::conj(z)) - std::conj(f(z)));
            rep.points.push_back(z);
            rep.deviations.push_back(dev);
            rep.max_deviation = std::max(rep.max_deviation, dev);
        }
    return rep;
}

ArakelovDegree arakelov_degree(const GreenSolution& sol, const JetData& gluing_jet) {
    if (gluing_jet.e != 1) throw Error(ErrorCode::WrongVanishingOrder, "gluing jet must have vanishing order 1");
    ArakelovDegree d;
    d.degree = std::log(std::abs(gluing_jet.leading())) + sol.robin_c();
    d.pseudoconvex = d.degree < 0.0;
    return d;
}

DegreeRelation degree_relation(const GreenSolution& sol, const AnalyticMap& phi, const IntPoly& f,
                               const IdentityConfig& cfg) {
    if (f.is_zero() || f[0] != 0) throw Error(ErrorCode::NonzeroConstantTerm, "f must vanish at 0");
    std::size_t e = 1;
    while (f[e] == 0) ++e;
    if (f[e] != 1) throw Error(ErrorCode::NotMonic, "lowest coefficient of f must be 1");
    const JetData phi_jet = taylor_jet(phi, sol.domain(), cfg.jet_order, cfg.vanishing_tolerance);
    const ArakelovDegree deg = arakelov_degree(sol, phi_jet);
    const AnalyticMap fphi = AnalyticMap::composed(AnalyticMap::polynomial(f), phi);
    const JetData jet = taylor_jet(fphi, sol.domain(), std::max(cfg.jet_order, e + 1), cfg.vanishing_tolerance);
    DegreeRelation r;
    r.e = jet.e;
    r.jet_norm = jet_cap_norm(jet, sol);
    r.e_times_degree = static_cast<double>(e) * deg.degree;
    return r;
}

std::string to_string(Identity which) {
    switch (which) {
    case Identity::Pushforward:
        return "prop34";
    case Identity::ConstantTerm:
        return "prop35";
    case Identity::Combined:
        return "cor36";
    }
    return "";
}

std::string to_string(OverflowMethod method) { return method == OverflowMethod::Energy ? "energy" : "def"; }

} // namespace arithcap
