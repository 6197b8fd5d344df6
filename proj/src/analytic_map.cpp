#include "arithcap/analytic_map.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "arithcap/green.hpp"

namespace arithcap {

namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
    std::vector<cplx> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
    return d;
}

void trim(std::vector<cplx>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

cplx newton_polish(const std::vector<cplx>& p, const std::vector<cplx>& dp, cplx z) {
    double best = std::abs(horner(p, z));
    for (int it = 0; it < 8 && best > 0.0; ++it) {
        const cplx d = horner(dp, z);
        if (d == 0.0) break;
        const cplx next = z - horner(p, z) / d;
        const double v = std::abs(horner(p, next));
        if (!(v < best)) break;
        best = v;
        z = next;
    }
    return z;
}

} // namespace

AnalyticMap AnalyticMap::polynomial(std::vector<cplx> coeffs) {
    trim(coeffs);
    AnalyticMap m;
    m.kind_ = Kind::Polynomial;
    m.coeffs_ = std::move(coeffs);
    m.radius_ = std::numeric_limits<double>::infinity();
    return m;
}

AnalyticMap AnalyticMap::polynomial(const RatPoly& p) {
    std::vector<cplx> c;
    for (const auto& a : p.coeffs()) c.emplace_back(a.get_d(), 0.0);
    return polynomial(std::move(c));
}

AnalyticMap AnalyticMap::polynomial(const IntPoly& p) {
    std::vector<cplx> c;
    for (const auto& a : p.coeffs()) c.emplace_back(a.get_d(), 0.0);
    return polynomial(std::move(c));
}

AnalyticMap AnalyticMap::series(std::vector<cplx> coeffs, cplx center, double radius, double tail_bound) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "series radius must be positive");
    AnalyticMap m;
    m.kind_ = Kind::Series;
    m.coeffs_ = std::move(coeffs);
    m.center_ = center;
    m.radius_ = radius;
    m.tail_bound_ = tail_bound;
    return m;
}

AnalyticMap AnalyticMap::composed(const AnalyticMap& outer, const AnalyticMap& inner) {
    AnalyticMap m;
    m.kind_ = Kind::Composite;
    m.outer_ = std::make_shared<const AnalyticMap>(outer);
    m.inner_ = std::make_shared<const AnalyticMap>(inner);
    m.radius_ = inner.radius();
    return m;
}

cplx AnalyticMap::operator()(cplx z) const {
    switch (kind_) {
    case Kind::Polynomial:
        return horner(coeffs_, z);
    case Kind::Series:
        return horner(coeffs_, z - center_);
    case Kind::Composite:
        return (*outer_)((*inner_)(z));
    }
    return 0.0;
}

cplx AnalyticMap::derivative(cplx z) const {
    switch (kind_) {
    case Kind::Polynomial:
        return horner(poly_derivative(coeffs_), z);
    case Kind::Series:
        return horner(poly_derivative(coeffs_), z - center_);
    case Kind::Composite:
        return outer_->derivative((*inner_)(z)) * inner_->derivative(z);
    }
    return 0.0;
}

JetData taylor_jet(const AnalyticMap& f, const DomainSpec& domain, std::size_t order, double rel_tol) {
    if (!(rel_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    const cplx O = domain.center();
    double rho = 0.5 * domain.boundary_distance(O);
    if (f.kind() == AnalyticMap::Kind::Series) rho = std::min(rho, 0.5 * f.radius());
    const std::size_t n = std::max<std::size_t>(64, 4 * (order + 1));
    std::vector<cplx> samples(n);
    for (std::size_t j = 0; j < n; ++j)
        samples[j] = f(O + std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)));

    JetData jet;
    jet.tolerance = rel_tol;
    jet.radius = rho;
    jet.coeffs.resize(order + 1);
    std::vector<double> scaled(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * j % n) / static_cast<double>(n));
        acc /= static_cast<double>(n);
        scaled[k] = std::abs(acc);
        jet.coeffs[k] = acc / std::pow(rho, static_cast<double>(k));
    }
    const double top = *std::max_element(scaled.begin(), scaled.end());
    for (std::size_t k = 1; k <= order; ++k)
        if (scaled[k] > rel_tol * top) {
            jet.e = static_cast<unsigned>(k);
            return jet;
        }
    throw Error(ErrorCode::AllCoefficientsBelowTolerance, "no Taylor coefficient above tolerance up to order " + std::to_string(order));
}

double jet_cap_norm(const JetData& jet, const GreenSolution& sol) {
    return std::log(std::abs(jet.leading())) + static_cast<double>(jet.e) * sol.robin_c();
}

std::vector<Root> polynomial_roots(const std::vector<cplx>& coeffs_in) {
    std::vector<cplx> c = coeffs_in;
    trim(c);
    if (c.size() < 2) throw Error(ErrorCode::ConstantMap, "constant polynomial has no roots to locate");
    const std::size_t n = c.size() - 1;
    std::vector<cplx> raw;
    if (n == 1) {
        raw.push_back(-c[0] / c[1]);
    } else {
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 1; i < n; ++i) C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < n; ++i) C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -c[i] / c[n];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) raw.push_back(es.eigenvalues()(i));
    }
    const auto dc = poly_derivative(c);
    for (auto& z : raw) z = newton_polish(c, dc, z);

    std::vector<Root> out;
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::vector<cplx> cluster{raw[i]};
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (!used[j] && std::abs(raw[j] - raw[i]) < 1e-4 * (1.0 + std::abs(raw[i]))) {
                used[j] = true;
                cluster.push_back(raw[j]);
            }
        cplx center = 0.0;
        for (auto z : cluster) center += z;
        center /= static_cast<double>(cluster.size());
        if (cluster.size() > 1) {
            // A root of multiplicity m is a simple root of the (m-1)-th derivative.
            std::vector<cplx> d = c;
            for (std::size_t k = 1; k < cluster.size(); ++k) d = poly_derivative(d);
            center = newton_polish(d, poly_derivative(d), center);
        }
        out.push_back({center, static_cast<unsigned>(cluster.size())});
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        return a.z.real() != b.z.real() ? a.z.real() < b.z.real() : a.z.imag() < b.z.imag();
    });
    return out;
}

std::vector<Preimage> preimages(const AnalyticMap& f, cplx y, const DomainSpec& domain) {
    if (!f.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "preimages need a polynomial map");
    if (f.degree() < 1) throw Error(ErrorCode::ConstantMap, "map is constant");
    std::vector<cplx> c = f.coeffs();
    c[0] -= y;
    std::vector<Preimage> out;
    for (const auto& r : polynomial_roots(c)) out.push_back({r.z, r.multiplicity, domain.contains(r.z)});
    return out;
}

} // namespace arithcap
