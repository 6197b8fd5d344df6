#pragma once

// Compact planar regions bounded by smooth closed curves
//     z(t) = sum_k a_k cos(k t) + b_k sin(k t),   t in [0, 2 pi),
// with complex coefficients, plus a distinguished interior point O.
//
// Curves are reoriented on construction so that the region lies to the left
// of the direction of travel: outer boundaries run counterclockwise, hole
// boundaries clockwise. The outward unit normal is then -i z'(t) / |z'(t)|.

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace arithcap {

using cplx = std::complex<double>;

class TrigCurve {
public:
    TrigCurve() = default;
    // a[k], b[k] for k = 0..n; b[0] is ignored.
    TrigCurve(std::vector<cplx> a, std::vector<cplx> b);

    cplx eval(double t) const;
    cplx deriv(double t) const;
    cplx deriv2(double t) const;
    // Analytic continuation to complex parameter values.
    cplx eval(cplx t) const;

    const std::vector<cplx>& a() const { return a_; }
    const std::vector<cplx>& b() const { return b_; }
    std::size_t max_frequency() const { return a_.empty() ? 0 : a_.size() - 1; }

    // Same curve run backwards: t -> -t.
    TrigCurve reversed() const;
    double signed_area() const;

private:
    std::vector<cplx> a_, b_;
};

struct BoundaryPoint {
    std::size_t curve = 0;
    double t = 0.0;
    cplx z;
    double distance = 0.0;
};

class DomainSpec {
public:
    DomainSpec() = default;
    DomainSpec(std::vector<TrigCurve> curves, cplx center);

    static DomainSpec circle(double radius, cplx circle_center = 0.0, cplx O = 0.0);
    static DomainSpec ellipse(double semi_a, double semi_b, double angle, cplx ellipse_center = 0.0, cplx O = 0.0);
    // Image of the unit circle under psi(w) = sum_k c_k w^k; O defaults to psi(0).
    static DomainSpec conformal_poly_image(const std::vector<cplx>& c);
    static DomainSpec conformal_poly_image(const std::vector<cplx>& c, cplx O);
    // One curve z(t) = sum_k c_k e^{i k t} over integer k of either sign.
    static DomainSpec fourier(const std::vector<std::pair<int, cplx>>& terms, cplx O);

    const std::vector<TrigCurve>& curves() const { return curves_; }
    cplx center() const { return center_; }
    // True when V lies inside the curve (even nesting depth).
    bool is_outer(std::size_t i) const { return outer_[i]; }
    // Diameter-like length scale of the boundary.
    double scale() const { return scale_; }

    // Outward unit normal of V at parameter t of curve i.
    cplx normal(std::size_t i, double t) const;

    BoundaryPoint nearest_boundary_point(cplx z) const;
    double boundary_distance(cplx z) const { return nearest_boundary_point(z).distance; }
    // z in the open interior V; points within tol * scale of the boundary
    // count as boundary points and are rejected.
    bool contains(cplx z, double tol = 1e-10) const;

    // Shorthand for error messages and JSON.
    std::string describe() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

private:
    void validate();
    bool inside_curve_polygon(std::size_t i, cplx z) const;

    std::vector<TrigCurve> curves_;
    std::vector<bool> outer_;
    std::vector<std::vector<cplx>> polygons_;
    cplx center_;
    double scale_ = 1.0;
    std::string description_;
};

} // namespace arithcap
