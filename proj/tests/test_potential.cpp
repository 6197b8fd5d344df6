#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arithcap/analytic_map.hpp"
#include "arithcap/domain.hpp"
#include "arithcap/green.hpp"
#include "arithcap/identities.hpp"

using namespace arithcap;

namespace {

constexpr double pi = std::numbers::pi;

AnalyticMap cmap(std::vector<cplx> c) { return AnalyticMap::polynomial(std::move(c)); }

// Green's function of the disk |z - c| < rho with pole a, in closed form.
double disk_green(cplx z, cplx c, double rho, cplx a) {
    const cplx u = (z - c) / rho, b = (a - c) / rho;
    return std::log(std::abs((1.0 - std::conj(b) * u) / (u - b)));
}

DomainSpec perturbed_circle() {
    return DomainSpec::fourier({{1, 1.0}, {4, 0.025}, {-2, 0.025}}, 0.0);
}

} // namespace

TEST_CASE("domain construction and validation") {
    DomainSpec d = DomainSpec::circle(2.0);
    CHECK(d.contains(1.0));
    CHECK_FALSE(d.contains(3.0));
    CHECK(d.boundary_distance(cplx(0.5, 0.0)) == doctest::Approx(1.5));
    try {
        DomainSpec::circle(1.0, 0.0, 1.0);
        FAIL("expected CenterOnBoundary");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CenterOnBoundary);
    }
    try {
        DomainSpec::circle(1.0, 0.0, 2.0);
        FAIL("expected InvalidDomain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidDomain);
    }
    // A figure eight crosses itself.
    CHECK_THROWS_AS(DomainSpec({TrigCurve({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0})}, 0.3), Error);
    // Annulus: outer circle plus a hole.
    DomainSpec ann({TrigCurve({0.0, 2.0}, {0.0, cplx(0, 2.0)}), TrigCurve({0.0, 0.5}, {0.0, cplx(0, 0.5)})}, 1.0);
    CHECK(ann.is_outer(0));
    CHECK_FALSE(ann.is_outer(1));
    CHECK_FALSE(ann.contains(0.0));
    CHECK(ann.contains(cplx(0.0, 1.2)));
}

TEST_CASE("disk capacity in closed form") {
    for (double rho : {0.5, 1.5, 3.0}) {
        auto sol = solve_green(DomainSpec::circle(rho));
        CHECK(sol.capacity() == doctest::Approx(1.0 / rho).epsilon(1e-9));
        CHECK(sol.robin_c() == doctest::Approx(std::log(rho)).epsilon(1e-9));
        CHECK(green_eval(sol, cplx(0.3 * rho, 0.2 * rho)) == doctest::Approx(disk_green(cplx(0.3 * rho, 0.2 * rho), 0.0, rho, 0.0)));
    }
}

TEST_CASE("off-center pole and the Poisson kernel") {
    auto sol = solve_green(DomainSpec::circle(1.0, 0.0, 0.4));
    CHECK(sol.robin_c() == doctest::Approx(std::log(0.84)).epsilon(1e-8));
    const double poisson = 0.84 / (2 * pi * 0.36);
    CHECK(std::abs(sol.density_ds(0, 0.0) - poisson) < 1e-6);
    for (double t : {0.7, 2.0, 3.1}) {
        const cplx z = std::polar(1.0, t);
        CHECK(std::abs(sol.density_ds(0, t) - 0.84 / (2 * pi * std::norm(z - 0.4))) < 1e-6);
    }
    const cplx x(-0.2, 0.5);
    CHECK(std::abs(green_eval(sol, x) - disk_green(x, 0.0, 1.0, 0.4)) < 1e-9);
    CHECK_THROWS_AS(green_eval(sol, 0.4), Error);
    CHECK(green_eval(sol, 2.0) == 0.0);
}

TEST_CASE("equilibrium measure of a disk is uniform") {
    auto sol = solve_green(DomainSpec::circle(2.0));
    auto nodes = equilibrium_measure(sol, 64);
    REQUIRE(nodes.size() == 64);
    double total = 0.0;
    for (const auto& n : nodes) {
        CHECK(n.weight == doctest::Approx(1.0 / 64).epsilon(1e-9));
        total += n.weight;
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK_THROWS_AS(equilibrium_measure(sol, 8), Error);
}

TEST_CASE("conformal transplant") {
    std::vector<cplx> psi{0.0, 1.3, 0.2};
    auto sol = solve_green(DomainSpec::conformal_poly_image(psi));
    CHECK(std::abs(sol.capacity() - 1.0 / 1.3) < 1e-8);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> rad(0.1, 0.95), ang(0.0, 2 * pi);
    for (int i = 0; i < 25; ++i) {
        const cplx w = std::polar(rad(rng), ang(rng));
        const cplx z = 1.3 * w + 0.2 * w * w;
        CHECK(std::abs(green_eval(sol, z) + std::log(std::abs(w))) < 1e-7);
    }
}

TEST_CASE("log potential of the equilibrium measure") {
    // On a centered disk, U(z) = log rho inside and log|z| outside.
    auto sol = solve_green(DomainSpec::circle(1.5));
    LogPotential U(sol, 256);
    CHECK(U(0.3) == doctest::Approx(std::log(1.5)).epsilon(1e-10));
    CHECK(U(cplx(0.0, 4.0)) == doctest::Approx(std::log(4.0)).epsilon(1e-10));
    CHECK(U(cplx(1.5 * std::cos(0.3), 1.5 * std::sin(0.3))) == doctest::Approx(std::log(1.5)).epsilon(1e-8));
    CHECK(U(cplx(1.5001, 0.0)) == doctest::Approx(std::log(1.5001)).epsilon(1e-8));
}

TEST_CASE("jets and roots") {
    auto dom = DomainSpec::circle(1.5);
    auto sol = solve_green(dom);
    JetData j = taylor_jet(cmap({0.0, 0.0, 3.0, 1.0}), dom, 8);
    CHECK(j.e == 2);
    CHECK(std::abs(j.leading() - 3.0) < 1e-12);
    CHECK(jet_cap_norm(j, sol) == doctest::Approx(std::log(3.0) + 2 * std::log(1.5)));
    CHECK_THROWS_AS(taylor_jet(cmap({2.0}), dom, 8), Error);

    auto roots = polynomial_roots({-2.0, 5.0, -4.0, 1.0}); // (x - 1)^2 (x - 2)
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].z - 1.0) < 1e-10);
    CHECK(roots[0].multiplicity == 2);
    CHECK(std::abs(roots[1].z - 2.0) < 1e-12);
    CHECK_THROWS_AS(polynomial_roots({3.0}), Error);

    auto pre = preimages(cmap({0.0, -0.5, 1.0}), 0.0, dom);
    REQUIRE(pre.size() == 2);
    CHECK(pre[0].inside);
}

TEST_CASE("constant-term identity on a disk") {
    auto sol = solve_green(DomainSpec::circle(1.5));
    auto f = cmap({0.0, -0.5, 1.0});
    auto t = identity_terms(sol, f, Identity::ConstantTerm);
    CHECK(std::abs(t.lhs - 2 * std::log(1.5)) < 1e-10);
    CHECK(std::abs(t.rhs - 2 * std::log(1.5)) < 1e-10);
    CHECK(log_abs_boundary_integral(sol, f) == doctest::Approx(2 * std::log(1.5)));
    // g(0.5) on the disk of radius 1.5 plus log|c_1| + robin.
    CHECK(divisor_sum(sol, f) == doctest::Approx(std::log(3.0)));
    auto g = cmap({1.0, 1.0});
    CHECK_THROWS_AS(identity_terms(sol, g, Identity::ConstantTerm), Error);
}

TEST_CASE("pointwise identities") {
    auto sol = solve_green(DomainSpec::circle(1.5));
    auto f = cmap({0.0, -0.5, 1.0});
    auto pts = identity_sample_points(sol, f, 12);
    CHECK(pts.size() == 12);
    for (auto x : pts) {
        CHECK(identity_residual(sol, f, Identity::Pushforward, x) < 1e-8);
        CHECK(identity_residual(sol, f, Identity::Combined, x) < 1e-8);
    }
}

TEST_CASE("overflow vanishes for powers on centered disks") {
    for (double rho : {0.7, 1.5}) {
        auto sol = solve_green(DomainSpec::circle(rho));
        for (int e : {1, 2}) {
            std::vector<cplx> c(static_cast<std::size_t>(e) + 1, 0.0);
            c.back() = 1.0;
            auto f = AnalyticMap::polynomial(c);
            CHECK(std::abs(overflow(sol, f, OverflowMethod::Definition)) < 1e-8);
            CHECK(std::abs(overflow(sol, f, OverflowMethod::Energy)) < 1e-8);
        }
    }
}

TEST_CASE("overflow routes agree on a perturbed circle") {
    auto sol = solve_green(perturbed_circle());
    CHECK(sol.collocation_residual() < 1e-9);
    auto f = cmap({0.0, -0.5, 1.0});
    const double a = overflow(sol, f, OverflowMethod::Definition);
    const double b = overflow(sol, f, OverflowMethod::Energy);
    CHECK(std::abs(a - b) < 1e-6);
    CHECK(a > 0.0);
}

TEST_CASE("boundary zero is reported") {
    auto sol = solve_green(DomainSpec::circle(1.0));
    auto f = cmap({-1.0, 1.0});
    try {
        log_abs_boundary_integral(sol, f);
        FAIL("expected BoundaryZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundaryZero);
    }
}

TEST_CASE("classical inverse check") {
    auto unit = classical_inverse_check(1.0, 20);
    CHECK(unit.points.size() == 20);
    CHECK(unit.max_residual < 1e-9);
    CHECK(std::abs(unit.v_infinity) < 1e-9);
    auto big = classical_inverse_check(2.5, 10);
    CHECK(std::abs(big.v_infinity - std::log(2.5)) < 1e-9);
}

TEST_CASE("conjugation symmetry") {
    auto dom = DomainSpec::circle(1.5);
    auto ok = symmetry_check(cmap({0.0, 1.0, 0.0, 1.0}), dom, 32);
    CHECK(ok.max_deviation < 1e-12);
    auto bad = symmetry_check(cmap({0.0, 0.0, cplx(0, 1)}), dom, 32);
    for (std::size_t i = 0; i < bad.points.size(); ++i) CHECK(std::abs(bad.deviations[i] - 2 * std::norm(bad.points[i])) < 1e-8);
    CHECK_THROWS_AS(symmetry_check(cmap({0.0, 1.0}), DomainSpec::circle(1.0, cplx(0, 0.1), cplx(0, 0.1)), 8), Error);
}

TEST_CASE("degree of the gluing datum") {
    for (double rho : {0.8, 1.25}) {
        auto dom = DomainSpec::circle(rho);
        auto sol = solve_green(dom);
        auto phi = cmap({0.0, 1.0});
        auto deg = arakelov_degree(sol, taylor_jet(phi, dom, 8));
        CHECK(deg.degree == doctest::Approx(std::log(rho)));
        CHECK(deg.pseudoconvex == (rho < 1.0));
        for (unsigned e = 1; e <= 3; ++e) {
            auto r = degree_relation(sol, phi, IntPoly::monomial(e));
            CHECK(r.e == e);
            CHECK(r.residual() < 1e-8);
        }
    }
    auto dom = DomainSpec::circle(0.8);
    auto sol = solve_green(dom);
    CHECK_THROWS_AS(arakelov_degree(sol, taylor_jet(cmap({0.0, 0.0, 1.0}), dom, 8)), Error);
}
