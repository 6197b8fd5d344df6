#include "arithcap/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "arithcap/errors.hpp"

namespace arithcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t polygon_size(const TrigCurve& c) { return std::max<std::size_t>(512, 64 * c.max_frequency()); }

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

bool point_in_polygon(const std::vector<cplx>& poly, cplx z) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const cplx a = poly[i], b = poly[j];
        if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
            const double x = a.real() + (z.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
            if (z.real() < x) in = !in;
        }
    }
    return in;
}

} // namespace

TrigCurve::TrigCurve(std::vector<cplx> a, std::vector<cplx> b) : a_(std::move(a)), b_(std::move(b)) {
    const std::size_t n = std::max(a_.size(), b_.size());
    a_.resize(n, 0.0);
    b_.resize(n, 0.0);
    if (n > 0) b_[0] = 0.0;
}

cplx TrigCurve::eval(double t) const {
    cplx z = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        const double kt = static_cast<double>(k) * t;
        z += a_[k] * std::cos(kt) + b_[k] * std::sin(kt);
    }
    return z;
}

cplx TrigCurve::eval(cplx t) const {
    cplx z = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        const cplx kt = static_cast<double>(k) * t;
        z += a_[k] * std::cos(kt) + b_[k] * std::sin(kt);
    }
    return z;
}

cplx TrigCurve::deriv(double t) const {
    cplx z = 0.0;
    for (std::size_t k = 1; k < a_.size(); ++k) {
        const double kd = static_cast<double>(k), kt = kd * t;
        z += kd * (-a_[k] * std::sin(kt) + b_[k] * std::cos(kt));
    }
    return z;
}

cplx TrigCurve::deriv2(double t) const {
    cplx z = 0.0;
    for (std::size_t k = 1; k < a_.size(); ++k) {
        const double kd = static_cast<double>(k), kt = kd * t;
        z -= kd * kd * (a_[k] * std::cos(kt) + b_[k] * std::sin(kt));
    }
    return z;
}

TrigCurve TrigCurve::reversed() const {
    std::vector<cplx> b = b_;
    for (auto& x : b) x = -x;
    return TrigCurve(a_, std::move(b));
}

double TrigCurve::signed_area() const {
    const std::size_t n = polygon_size(*this);
    double area = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        area += cross(eval(t), deriv(t));
    }
    return 0.5 * area * kTwoPi / static_cast<double>(n);
}

DomainSpec::DomainSpec(std::vector<TrigCurve> curves, cplx center) : curves_(std::move(curves)), center_(center) {
    validate();
}

DomainSpec DomainSpec::circle(double radius, cplx circle_center, cplx O) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidDomain, "circle radius must be positive");
    DomainSpec d({TrigCurve({circle_center, radius}, {0.0, cplx(0.0, radius)})}, O);
    d.description_ = "circle(" + std::to_string(radius) + ")";
    return d;
}

DomainSpec DomainSpec::ellipse(double semi_a, double semi_b, double angle, cplx ellipse_center, cplx O) {
    if (!(semi_a > 0.0) || !(semi_b > 0.0)) throw Error(ErrorCode::InvalidDomain, "ellipse semi-axes must be positive");
    const cplx rot = std::polar(1.0, angle);
    DomainSpec d({TrigCurve({ellipse_center, semi_a * rot}, {0.0, cplx(0.0, semi_b) * rot})}, O);
    d.description_ = "ellipse(" + std::to_string(semi_a) + "," + std::to_string(semi_b) + ")";
    return d;
}

DomainSpec DomainSpec::conformal_poly_image(const std::vector<cplx>& c) {
    if (c.empty()) throw Error(ErrorCode::InvalidDomain, "empty conformal map");
    return conformal_poly_image(c, c[0]);
}

DomainSpec DomainSpec::conformal_poly_image(const std::vector<cplx>& c, cplx O) {
    std::vector<cplx> a(c.begin(), c.end()), b(c.size());
    for (std::size_t k = 1; k < c.size(); ++k) b[k] = cplx(0.0, 1.0) * c[k];
    DomainSpec d({TrigCurve(std::move(a), std::move(b))}, O);
    d.description_ = "conformal_poly_image";
    return d;
}

DomainSpec DomainSpec::fourier(const std::vector<std::pair<int, cplx>>& terms, cplx O) {
    std::size_t n = 0;
    for (const auto& [k, c] : terms) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::abs(k)));
    std::vector<cplx> a(n + 1), b(n + 1);
    const cplx I(0.0, 1.0);
    for (const auto& [k, c] : terms) {
        const auto m = static_cast<std::size_t>(std::abs(k));
        a[m] += c;
        if (k > 0) b[m] += I * c;
        if (k < 0) b[m] -= I * c;
    }
    DomainSpec d({TrigCurve(std::move(a), std::move(b))}, O);
    d.description_ = "fourier";
    return d;
}

void DomainSpec::validate() {
    if (curves_.empty()) throw Error(ErrorCode::InvalidDomain, "domain needs at least one boundary curve");
    polygons_.clear();
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
    for (const auto& c : curves_) {
        const std::size_t n = polygon_size(c);
        std::vector<cplx> poly(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
            poly[j] = c.eval(t);
            if (!(std::abs(c.deriv(t)) > 0.0) || !std::isfinite(std::abs(poly[j])))
                throw Error(ErrorCode::InvalidDomain, "boundary curve is singular");
            lo_x = std::min(lo_x, poly[j].real());
            hi_x = std::max(hi_x, poly[j].real());
            lo_y = std::min(lo_y, poly[j].imag());
            hi_y = std::max(hi_y, poly[j].imag());
        }
        polygons_.push_back(std::move(poly));
    }
    scale_ = std::max(hi_x - lo_x, hi_y - lo_y);

    // Simplicity and disjointness, checked on the sampling polygons.
    for (std::size_t i = 0; i < polygons_.size(); ++i)
        for (std::size_t j = i; j < polygons_.size(); ++j) {
            const auto& P = polygons_[i];
            const auto& Q = polygons_[j];
            for (std::size_t a = 0; a < P.size(); ++a)
                for (std::size_t b = (i == j ? a + 2 : 0); b < Q.size(); ++b) {
                    if (i == j && a == 0 && b == Q.size() - 1) continue;
                    if (segments_cross(P[a], P[(a + 1) % P.size()], Q[b], Q[(b + 1) % Q.size()]))
                        throw Error(ErrorCode::InvalidDomain,
                                    i == j ? "boundary curve is not simple" : "boundary curves intersect");
                }
        }

    outer_.assign(curves_.size(), true);
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        std::size_t depth = 0;
        for (std::size_t j = 0; j < curves_.size(); ++j)
            if (j != i && point_in_polygon(polygons_[j], polygons_[i][0])) ++depth;
        outer_[i] = depth % 2 == 0;
        const double area = curves_[i].signed_area();
        if ((outer_[i] && area < 0) || (!outer_[i] && area > 0)) {
            curves_[i] = curves_[i].reversed();
            const auto& c = curves_[i];
            for (std::size_t j = 0; j < polygons_[i].size(); ++j)
                polygons_[i][j] = c.eval(kTwoPi * static_cast<double>(j) / static_cast<double>(polygons_[i].size()));
        }
    }

    if (boundary_distance(center_) < 1e-9 * scale_)
        throw Error(ErrorCode::CenterOnBoundary, "center lies on the boundary");
    if (!contains(center_)) throw Error(ErrorCode::InvalidDomain, "center lies outside the region");
}

cplx DomainSpec::normal(std::size_t i, double t) const {
    const cplx d = curves_[i].deriv(t);
    return cplx(0.0, -1.0) * d / std::abs(d);
}

BoundaryPoint DomainSpec::nearest_boundary_point(cplx z) const {
    BoundaryPoint best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        const auto& P = polygons_[i];
        const auto& c = curves_[i];
        std::size_t jbest = 0;
        double dbest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < P.size(); ++j) {
            const double d = std::abs(P[j] - z);
            if (d < dbest) {
                dbest = d;
                jbest = j;
            }
        }
        const double h = kTwoPi / static_cast<double>(P.size());
        double t = h * static_cast<double>(jbest);
        // Newton on F(t) = Re(conj(z(t) - z) z'(t)), steps kept within one sample cell.
        for (int it = 0; it < 30; ++it) {
            const cplx e = c.eval(t) - z, d1 = c.deriv(t), d2 = c.deriv2(t);
            const double F = std::real(std::conj(e) * d1);
            const double dF = std::norm(d1) + std::real(std::conj(e) * d2);
            double step = dF > 0 ? -F / dF : 0.0;
            step = std::clamp(step, -h, h);
            t += step;
            if (std::abs(step) < 1e-15) break;
        }
        t = std::fmod(t, kTwoPi);
        if (t < 0) t += kTwoPi;
        const cplx zb = c.eval(t);
        const double d = std::abs(zb - z);
        if (d < best.distance) best = {i, t, zb, d};
        if (dbest < best.distance) best = {i, h * static_cast<double>(jbest), P[jbest], dbest};
    }
    return best;
}

bool DomainSpec::inside_curve_polygon(std::size_t i, cplx z) const { return point_in_polygon(polygons_[i], z); }

bool DomainSpec::contains(cplx z, double tol) const {
    const BoundaryPoint bp = nearest_boundary_point(z);
    if (bp.distance <= tol * scale_) return false;
    const auto& P = polygons_[bp.curve];
    double seg = 0.0;
    for (std::size_t j = 0; j < P.size(); ++j) seg = std::max(seg, std::abs(P[(j + 1) % P.size()] - P[j]));
    if (bp.distance < 3.0 * seg) return std::real(std::conj(z - bp.z) * normal(bp.curve, bp.t)) < 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < curves_.size(); ++i)
        if (inside_curve_polygon(i, z)) ++count;
    return count % 2 == 1;
}

} // namespace arithcap
