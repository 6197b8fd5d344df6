#include "arithcap/green.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <limits>
#include <numbers>
#include <optional>

#include "arithcap/errors.hpp"

namespace arithcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Fit {
    std::vector<cplx> sources;
    std::vector<double> strengths;
    double constant = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    double tau = 0.0;
};

double eval_h(const Fit& f, cplx z) {
    double h = f.constant;
    for (std::size_t j = 0; j < f.sources.size(); ++j) h += f.strengths[j] * std::log(std::abs(z - f.sources[j]));
    return h;
}

double param(std::size_t j, std::size_t n, double shift = 0.0) {
    return kTwoPi * (static_cast<double>(j) + shift) / static_cast<double>(n);
}

std::optional<Fit> fit_at(const DomainSpec& dom, std::size_t n, double tau) {
    const std::size_t ns = std::max<std::size_t>(n / 2, 4);
    const cplx O = dom.center();
    Fit f;
    f.tau = tau;
    for (std::size_t c = 0; c < dom.curves().size(); ++c) {
        const auto& curve = dom.curves()[c];
        double spacing = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            spacing = std::max(spacing, std::abs(curve.eval(param(j + 1, n)) - curve.eval(param(j, n))));
        for (std::size_t j = 0; j < ns; ++j) {
            const cplx s = curve.eval(cplx(param(j, ns), -tau));
            if (dom.contains(s, 0.0) || dom.boundary_distance(s) < 0.5 * spacing) return std::nullopt;
            f.sources.push_back(s);
        }
    }
    const std::size_t rows = n * dom.curves().size();
    const std::size_t cols = f.sources.size() + 1;
    Eigen::MatrixXd A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(rows));
    Eigen::Index r = 0;
    for (const auto& curve : dom.curves())
        for (std::size_t j = 0; j < n; ++j, ++r) {
            const cplx z = curve.eval(param(j, n));
            A(r, 0) = 1.0;
            for (std::size_t k = 0; k < f.sources.size(); ++k)
                A(r, static_cast<Eigen::Index>(k + 1)) = std::log(std::abs(z - f.sources[k]));
            rhs(r) = std::log(std::abs(z - O));
        }
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(rhs);
    if (!x.allFinite()) return std::nullopt;
    f.constant = x(0);
    f.strengths.assign(x.data() + 1, x.data() + x.size());

    double res = 0.0;
    for (const auto& curve : dom.curves())
        for (std::size_t j = 0; j < n; ++j)
            for (double shift : {0.0, 0.5}) {
                const cplx z = curve.eval(param(j, n, shift));
                res = std::max(res, std::abs(eval_h(f, z) - std::log(std::abs(z - O))));
            }
    f.residual = res;
    return f;
}

Fit best_fit(const DomainSpec& dom, std::size_t n, const std::vector<double>& taus) {
    Fit best;
    for (double tau : taus) {
        auto f = fit_at(dom, n, tau);
        if (f && f->residual < best.residual) best = std::move(*f);
    }
    return best;
}

// Closest parameter on one curve to zeta, starting from the nearest node.
double closest_parameter(const TrigCurve& c, cplx zeta, double t0, double h) {
    double t = t0;
    for (int it = 0; it < 40; ++it) {
        const cplx e = c.eval(t) - zeta, d1 = c.deriv(t), d2 = c.deriv2(t);
        const double F = std::real(std::conj(e) * d1);
        const double dF = std::norm(d1) + std::real(std::conj(e) * d2);
        double step = dF > 0 ? -F / dF : 0.0;
        step = std::clamp(step, -h, h);
        t += step;
        if (std::abs(step) < 1e-15) break;
    }
    return t;
}

} // namespace

double GreenSolution::capacity() const { return std::exp(-robin_c_); }

double GreenSolution::harmonic_part(cplx z) const {
    double h = constant_;
    for (std::size_t j = 0; j < sources_.size(); ++j) h += strengths_[j] * std::log(std::abs(z - sources_[j]));
    return h;
}

cplx GreenSolution::green_derivative(cplx z) const {
    cplx d = -1.0 / (z - domain_.center());
    for (std::size_t j = 0; j < sources_.size(); ++j) d += strengths_[j] / (z - sources_[j]);
    return d;
}

double GreenSolution::density_dt(std::size_t curve, double t) const {
    const auto& c = domain_.curves()[curve];
    // Outward normal times |z'| is -i z'.
    const cplx n_ds = cplx(0.0, -1.0) * c.deriv(t);
    return -std::real(green_derivative(c.eval(t)) * n_ds) / kTwoPi;
}

double GreenSolution::density_ds(std::size_t curve, double t) const {
    return density_dt(curve, t) / std::abs(domain_.curves()[curve].deriv(t));
}

double GreenSolution::raw_mass(std::size_t nodes) const {
    double m = 0.0;
    for (std::size_t c = 0; c < domain_.curves().size(); ++c)
        for (std::size_t j = 0; j < nodes; ++j) m += density_dt(c, param(j, nodes)) * kTwoPi / static_cast<double>(nodes);
    return m;
}

GreenSolution solve_green(const DomainSpec& domain, const GreenConfig& config) {
    if (config.collocation < 16) throw Error(ErrorCode::InvalidArgument, "collocation count must be at least 16");
    Fit f = best_fit(domain, config.collocation, config.tau_candidates);
    if (!(f.residual <= config.residual_threshold))
        throw Error(ErrorCode::SolverIllConditioned,
                    "collocation residual " + std::to_string(f.residual) + " above threshold");
    GreenSolution sol;
    sol.domain_ = domain;
    sol.sources_ = std::move(f.sources);
    sol.strengths_ = std::move(f.strengths);
    sol.constant_ = f.constant;
    sol.residual_ = f.residual;
    sol.tau_ = f.tau;
    sol.collocation_ = config.collocation;
    sol.robin_c_ = sol.harmonic_part(domain.center());
    if (config.convergence_check) {
        Fit half = best_fit(domain, config.collocation / 2, config.tau_candidates);
        if (std::isfinite(half.residual)) sol.convergence_delta_ = std::abs(eval_h(half, domain.center()) - sol.robin_c_);
    }
    return sol;
}

double green_eval(const GreenSolution& sol, cplx x) {
    const auto& dom = sol.domain();
    if (std::abs(x - dom.center()) <= 1e-14 * dom.scale()) throw Error(ErrorCode::PoleAtCenter, "g has a pole at O");
    if (!dom.contains(x)) return 0.0;
    return sol.raw_green(x);
}

std::vector<MeasureNode> equilibrium_measure(const GreenSolution& sol, std::size_t nodes) {
    if (nodes < 16) throw Error(ErrorCode::InvalidArgument, "node count must be at least 16");
    std::vector<MeasureNode> out;
    double total = 0.0;
    const auto& dom = sol.domain();
    for (std::size_t c = 0; c < dom.curves().size(); ++c)
        for (std::size_t j = 0; j < nodes; ++j) {
            const double t = param(j, nodes);
            const double w = sol.density_dt(c, t) * kTwoPi / static_cast<double>(nodes);
            if (w < 0.0) throw Error(ErrorCode::SolverIllConditioned, "negative equilibrium density");
            out.push_back({c, t, dom.curves()[c].eval(t), w});
            total += w;
        }
    if (std::abs(total - 1.0) > 1e-3)
        throw Error(ErrorCode::SolverIllConditioned, "equilibrium mass " + std::to_string(total) + " is not 1");
    for (auto& n : out) n.weight /= total;
    return out;
}

LogPotential::LogPotential(const GreenSolution& sol, std::size_t nodes)
    : sol_(&sol), nodes_(equilibrium_measure(sol, nodes)), per_curve_(nodes), mass_(sol.raw_mass(nodes)) {
    const std::size_t nc = sol.domain().curves().size();
    spacing_.assign(nc, 0.0);
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t j = 0; j < nodes; ++j) {
            const cplx a = nodes_[c * nodes + j].z, b = nodes_[c * nodes + (j + 1) % nodes].z;
            spacing_[c] = std::max(spacing_[c], std::abs(b - a));
        }
}

double LogPotential::operator()(cplx zeta) const {
    using boost::math::quadrature::gauss;
    const auto& dom = sol_->domain();
    double total = 0.0;
    for (std::size_t c = 0; c < dom.curves().size(); ++c) {
        std::size_t jbest = 0;
        double dbest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < per_curve_; ++j) {
            const double d = std::abs(nodes_[c * per_curve_ + j].z - zeta);
            if (d < dbest) {
                dbest = d;
                jbest = j;
            }
        }
        if (dbest > 6.0 * spacing_[c]) {
            for (std::size_t j = 0; j < per_curve_; ++j) {
                const auto& n = nodes_[c * per_curve_ + j];
                total += n.weight * std::log(std::abs(zeta - n.z));
            }
            continue;
        }
        const auto& curve = dom.curves()[c];
        const double h = kTwoPi / static_cast<double>(per_curve_);
        const double s = closest_parameter(curve, zeta, nodes_[c * per_curve_ + jbest].t, h);
        auto integrand = [&](double t) {
            const double d = std::abs(zeta - curve.eval(t));
            if (d == 0.0) return 0.0;
            return std::log(d) * sol_->density_dt(c, t) / mass_;
        };
        constexpr int kLevels = 52;
        double acc = 0.0;
        for (double side : {1.0, -1.0}) {
            double outer = std::numbers::pi;
            for (int k = 0; k < kLevels; ++k) {
                const double inner = outer / 2.0;
                const double a = s + side * inner, b = s + side * outer;
                acc += gauss<double, 20>::integrate(integrand, std::min(a, b), std::max(a, b));
                outer = inner;
            }
            const double a = s, b = s + side * outer;
            acc += gauss<double, 20>::integrate(integrand, std::min(a, b), std::max(a, b));
        }
        total += acc;
    }
    return total;
}

} // namespace arithcap
