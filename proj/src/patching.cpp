#include "arithcap/patching.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <random>

#include "arithcap/integerization.hpp"
#include "arithcap/parallel.hpp"

namespace arithcap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

mpq_class abs_q(const mpq_class& a) { return sgn(a) < 0 ? mpq_class(-a) : a; }

mpq_class pow_q(const mpq_class& a, unsigned long e) {
    mpq_class out(1);
    for (unsigned long i = 0; i < e; ++i) out *= a;
    return out;
}

// Double with |x - q| tiny, rounded away from zero by one ulp so that it is an
// upper bound for nonnegative q.
double upper_double(const mpq_class& q) { return std::nextafter(q.get_d(), std::numeric_limits<double>::infinity()); }

std::vector<std::complex<double>> to_complex(const RatPoly& f) {
    std::vector<std::complex<double>> c;
    for (const auto& a : f.coeffs()) c.emplace_back(a.get_d(), 0.0);
    return c;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double abs_horner(const std::vector<double>& absc, double rho) {
    double acc = 0.0;
    for (std::size_t i = absc.size(); i-- > 0;) acc = acc * rho + absc[i];
    return acc;
}

// Minimal complex arithmetic on MPFR reals for the spot check.
class MpfrComplexHorner {
public:
    MpfrComplexHorner(const IntPoly& p, mpfr_prec_t prec) : prec_(prec), n_(p.coeffs().size()) {
        coeffs_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            mpfr_init2(&coeffs_[i], prec_);
            mpfr_set_z(&coeffs_[i], p.coeffs()[i].get_mpz_t(), MPFR_RNDN);
        }
        for (auto* v : {&re_, &im_, &t1_, &t2_, &xr_, &xi_}) mpfr_init2(*v, prec_);
    }
    ~MpfrComplexHorner() {
        for (auto& c : coeffs_) mpfr_clear(&c);
        for (auto* v : {&re_, &im_, &t1_, &t2_, &xr_, &xi_}) mpfr_clear(*v);
    }
    MpfrComplexHorner(const MpfrComplexHorner&) = delete;
    MpfrComplexHorner& operator=(const MpfrComplexHorner&) = delete;

    // log |p(x)| in natural units, -inf at an exact zero.
    double log_abs(std::complex<double> x) {
        mpfr_set_d(xr_, x.real(), MPFR_RNDN);
        mpfr_set_d(xi_, x.imag(), MPFR_RNDN);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
        for (std::size_t i = n_; i-- > 0;) {
            // (re + i im) * (xr + i xi) + c_i
            mpfr_mul(t1_, re_, xr_, MPFR_RNDN);
            mpfr_mul(t2_, im_, xi_, MPFR_RNDN);
            mpfr_sub(t1_, t1_, t2_, MPFR_RNDN);
            mpfr_mul(t2_, re_, xi_, MPFR_RNDN);
            mpfr_mul(im_, im_, xr_, MPFR_RNDN);
            mpfr_add(im_, im_, t2_, MPFR_RNDN);
            mpfr_add(re_, t1_, &coeffs_[i], MPFR_RNDN);
        }
        mpfr_sqr(t1_, re_, MPFR_RNDN);
        mpfr_sqr(t2_, im_, MPFR_RNDN);
        mpfr_add(t1_, t1_, t2_, MPFR_RNDN);
        if (mpfr_zero_p(t1_) != 0) return -std::numeric_limits<double>::infinity();
        mpfr_log(t1_, t1_, MPFR_RNDN);
        return 0.5 * mpfr_get_d(t1_, MPFR_RNDN);
    }

private:
    mpfr_prec_t prec_;
    std::size_t n_;
    std::vector<__mpfr_struct> coeffs_;
    mpfr_t re_, im_, t1_, t2_, xr_, xi_;
};

// log2 of sum |c_j| rho^j, computed in the log domain.
double log2_abs_sum(const std::vector<double>& log2c, double rho) {
    double best = -std::numeric_limits<double>::infinity();
    const double lr = std::log2(std::max(rho, 1e-300));
    for (std::size_t j = 0; j < log2c.size(); ++j) best = std::max(best, log2c[j] + static_cast<double>(j) * lr);
    double acc = 0.0;
    for (std::size_t j = 0; j < log2c.size(); ++j) {
        double e = log2c[j] + static_cast<double>(j) * lr - best;
        if (e > -1100) acc += std::exp2(e);
    }
    return best + std::log2(acc);
}

double mpz_log2(const mpz_class& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log2(std::abs(m)) + static_cast<double>(exp);
}

} // namespace

RegionSpec::RegionSpec(std::vector<Hole> holes) : holes_(std::move(holes)) {
    for (const auto& h : holes_) {
        if (!(h.radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "hole radius must be positive");
        bounding_radius_ = std::max(bounding_radius_, std::abs(h.center) + h.radius);
    }
}

bool RegionSpec::in_hole(std::complex<double> z) const {
    return std::any_of(holes_.begin(), holes_.end(), [&](const Hole& h) { return std::abs(z - h.center) < h.radius; });
}

bool RegionSpec::contained_in_disk(const mpq_class& r) const {
    for (const auto& h : holes_) {
        mpq_class rad(h.radius);
        if (rad > r) return false;
        mpq_class cx(h.center.real()), cy(h.center.imag());
        mpq_class slack = r - rad;
        if (cx * cx + cy * cy > slack * slack) return false;
    }
    return true;
}

mpq_class nonleading_abs_sum(const RatPoly& f) {
    mpq_class s(0);
    for (long i = 0; i < f.degree(); ++i) s += abs_q(f[static_cast<std::size_t>(i)]);
    return s;
}

mpq_class outside_lower_bound(const RatPoly& f, const mpq_class& r) {
    const auto d = static_cast<unsigned long>(f.degree());
    return pow_q(r, d - 1) * (r - nonleading_abs_sum(f));
}

mpq_class certified_lower_bound(const RatPoly& f, const RegionSpec& region, const mpq_class& r, unsigned grid,
                                unsigned max_grid) {
    if (grid == 0) throw Error(ErrorCode::InvalidArgument, "grid resolution must be positive");
    if (f.is_zero()) throw Error(ErrorCode::NoMargin, "zero polynomial");
    const auto coeffs = to_complex(f);
    std::vector<double> absc;
    for (const auto& a : f.coeffs()) absc.push_back(upper_double(abs_q(a)));
    const auto d = static_cast<double>(std::max<long>(f.degree(), 1));

    // Lipschitz constant of f on the closed r-disk: sum j |a_j| r^{j-1}.
    mpq_class lip(0);
    for (long j = 1; j <= f.degree(); ++j)
        lip += mpq_class(j) * abs_q(f[static_cast<std::size_t>(j)]) * pow_q(r, static_cast<unsigned long>(j - 1));
    const double L = upper_double(lip);
    const double rd = r.get_d();

    for (unsigned res = std::max(2U, grid);; res *= 2) {
        const double step = 2.0 * rd / res;
        const double cover = step / std::numbers::sqrt2 * (1.0 + 1e-12) + 4.0 * kEps * rd;
        std::vector<double> row_min(res + 1, std::numeric_limits<double>::infinity());
        parallel_for(res + 1, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const double x = -rd + static_cast<double>(i) * step;
                double best = std::numeric_limits<double>::infinity();
                for (unsigned j = 0; j <= res; ++j) {
                    const std::complex<double> y(x, -rd + j * step);
                    const double ay = std::abs(y);
                    if (ay > rd + cover) continue;
                    bool deep = false;
                    for (const auto& h : region.holes())
                        if (std::abs(y - h.center) < h.radius - cover) {
                            deep = true;
                            break;
                        }
                    if (deep) continue;
                    // Horner rounding: bounded by a small multiple of d eps sum |a_j| |y|^j.
                    const double err = (4.0 * d + 8.0) * kEps * abs_horner(absc, ay);
                    best = std::min(best, std::abs(horner(coeffs, y)) - err);
                }
                row_min[i] = best;
            }
        });
        const double m = *std::min_element(row_min.begin(), row_min.end());
        double bound = m - L * cover;
        bound -= 1e-12 * std::abs(bound);
        if (std::isfinite(bound) && bound > 0.0) return mpq_class(bound);
        if (res * 2 > max_grid) break;
    }
    throw Error(ErrorCode::NoMargin, "no positive lower bound for |f| on K within the r-disk");
}

mpq_class choose_radius(const RatPoly& f, const RegionSpec& region, unsigned den, bool growth) {
    const mpq_class S = nonleading_abs_sum(f);
    const auto d = static_cast<unsigned long>(f.degree());
    const double lower = std::max(region.bounding_radius(), S.get_d() + 2.0);
    long j = std::max<long>(1, static_cast<long>(std::floor(lower * den)) - 1);
    for (;; ++j) {
        mpq_class r(j, den);
        r.canonicalize();
        if (!(r > S + 2)) continue;
        if (!region.contained_in_disk(r)) continue;
        if (growth && d >= 2 && pow_q(r, d - 2) * (r - S) < 1) continue;
        return r;
    }
}

bool verify_inequalities(const PatchParams& P) {
    if (!(P.R_lower > 1)) return false;
    if (P.d < 1 || P.N != P.d * P.k) return false;
    if (!(P.M > P.k)) return false;
    if (P.k < P.d + 1) return false;
    const mpq_class R = P.R_lower;
    const mpq_class d(static_cast<long>(P.d));
    const mpq_class lhs1 = pow_q(R, P.k - 1);
    const mpq_class rhs1 = pow_q(P.r, P.d) * d / (R - 1) + 2;
    const mpq_class lhs2 = pow_q(R, P.k - P.d - 1);
    const mpq_class rhs2 = d / (R - 1) + 2;
    return lhs1 > rhs1 && lhs2 > rhs2;
}

PatchParams choose_parameters(const RatPoly& f, const RegionSpec& region, const PatchConfig& config) {
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "choose_parameters needs a monic polynomial");
    if (f.degree() < 2) throw Error(ErrorCode::InvalidArgument, "choose_parameters needs degree >= 2");
    PatchParams P;
    P.d = static_cast<unsigned long>(f.degree());
    P.r = choose_radius(f, region, config.r_denominator, true);
    mpq_class inside = certified_lower_bound(f, region, P.r, config.grid_resolution, config.max_grid_resolution);
    P.R_lower = std::min(inside, outside_lower_bound(f, P.r));
    if (!(P.R_lower > 1)) throw Error(ErrorCode::InsufficientMargin, "certified inf |f| on K is not above 1");
    P.epsilon = std::min(mpq_class(P.R_lower - 1), mpq_class(1));

    constexpr unsigned long kMaxK = 100000;
    for (P.k = P.d + 1; P.k <= kMaxK; ++P.k) {
        P.N = P.d * P.k;
        P.M = P.k + 1; // placeholder so verify_inequalities only judges the k-inequalities here
        if (verify_inequalities(P)) break;
    }
    if (P.k > kMaxK) throw Error(ErrorCode::InsufficientMargin, "R is too close to 1 for any k");
    P.N = P.d * P.k;

    const std::uint64_t cap = config.max_degree / P.d;
    if (cap <= P.k) throw Error(ErrorCode::DegreeCapExceeded, "degree cap leaves no room for M > k");
    try {
        P.M = minimal_integerizing_exponent(f, static_cast<unsigned>(P.N), cap, P.k).M;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotFound)
            throw Error(ErrorCode::DegreeCapExceeded,
                        "no integerizing M with M*d <= " + std::to_string(config.max_degree));
        throw;
    }
    return P;
}

ClearResult clear_fractional_parts(const RatPoly& f, const mpz_class& M, unsigned long N, bool check_steps) {
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "clear_fractional_parts needs a monic polynomial");
    if (!M.fits_ulong_p() || M < 1) throw Error(ErrorCode::InvalidArgument, "M out of range");
    const unsigned long d = static_cast<unsigned long>(f.degree());
    const unsigned long Md = d * M.get_ui();
    if (N > Md) throw Error(ErrorCode::DegreeTooSmall, "N exceeds M*d");

    std::vector<mpq_class> work = poly_pow(f, M.get_ui()).coeffs();
    for (unsigned long i = 1; i <= N; ++i)
        if (work[Md - i].get_den() != 1)
            throw Error(ErrorCode::TopCoefficientsNotIntegral, "coefficient of x^" + std::to_string(Md - i) + " is not an integer");

    ClearResult out;
    const unsigned long top = Md - N;
    unsigned long q_cur = top / d;
    RatPoly power = poly_pow(f, q_cur);
    out.ledger.reserve(top + 1);
    for (unsigned long t = top + 1; t-- > 0;) {
        const unsigned long q = t / d;
        const unsigned long r = t % d;
        while (q_cur > q) {
            power = poly_div_exact(power, f);
            --q_cur;
        }
        mpq_class frac = fractional_part(work[t]);
        if (frac != 0) {
            const auto& pc = power.coeffs();
            for (std::size_t j = 0; j < pc.size(); ++j) {
                if (pc[j] == 0) continue;
                work[j + r] -= frac * pc[j];
            }
        }
        out.ledger.push_back({q, r, frac});
        if (check_steps) {
            for (unsigned long i = t; i <= Md; ++i)
                if (work[i].get_den() != 1)
                    throw Error(ErrorCode::TopCoefficientsNotIntegral, "greedy step left a fraction at x^" + std::to_string(i));
        }
    }
    out.p = to_int_poly(RatPoly(std::move(work)));
    return out;
}

RatPoly reconstruct(const IntPoly& p, const RatPoly& f, const std::vector<GreedyStep>& ledger) {
    // Group the ledger by q and evaluate sum_q f^q c_q(x) by Horner in f.
    std::map<unsigned long, std::vector<mpq_class>> by_q;
    unsigned long qmax = 0;
    for (const auto& s : ledger) {
        auto& v = by_q[s.q];
        if (v.size() <= s.r) v.resize(s.r + 1, 0);
        v[s.r] += s.fraction;
        qmax = std::max(qmax, s.q);
    }
    RatPoly acc;
    for (unsigned long q = qmax + 1; q-- > 0;) {
        acc = acc * f;
        auto it = by_q.find(q);
        if (it != by_q.end()) acc += RatPoly(it->second);
    }
    return acc + to_rat_poly(p);
}

mpq_class best_rational_approximation(const mpq_class& a, const mpz_class& max_den) {
    if (a.get_den() <= max_den) return a;
    // Continued-fraction convergents with the final semiconvergent check.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = a.get_num(), dd = a.get_den();
    while (true) {
        mpz_class aq;
        mpz_fdiv_q(aq.get_mpz_t(), n.get_mpz_t(), dd.get_mpz_t());
        mpz_class q2 = q0 + aq * q1;
        if (q2 > max_den) break;
        mpz_class p2 = p0 + aq * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        mpz_class rem = n - aq * dd;
        n = dd;
        dd = rem;
        if (dd == 0) break;
    }
    mpz_class kk = (max_den - q0) / q1;
    mpq_class b1(p0 + kk * p1, q0 + kk * q1);
    mpq_class b2(p1, q1);
    b1.canonicalize();
    b2.canonicalize();
    return abs_q(b2 - a) <= abs_q(b1 - a) ? b2 : b1;
}

RatPoly rationalize(const RatPoly& m, const mpq_class& epsilon, const mpq_class& r, unsigned denominator_limit) {
    if (!m.is_monic()) throw Error(ErrorCode::NotMonic, "rationalize needs a monic polynomial");
    if (!(epsilon > 0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
    const auto d = static_cast<unsigned long>(m.degree());
    if (d == 0) return m;
    const mpq_class tol = epsilon / (2 * mpq_class(static_cast<long>(d)) * pow_q(r, d - 1));
    std::vector<mpq_class> out = m.coeffs();
    for (unsigned long i = 0; i < d; ++i) {
        const mpq_class& a = out[i];
        if (a.get_den() <= denominator_limit) continue;
        mpz_class limit = denominator_limit;
        mpq_class b = best_rational_approximation(a, limit);
        while (!(abs_q(b - a) < tol)) {
            limit *= 2;
            b = best_rational_approximation(a, limit);
        }
        out[i] = b;
    }
    return RatPoly(std::move(out));
}

SpotCheck spot_check(const IntPoly& p, const RegionSpec& region, const mpq_class& r, unsigned samples,
                     std::uint64_t seed) {
    const double rd = r.get_d();
    std::vector<std::complex<double>> pts;
    pts.reserve(samples);
    // A quarter on the outer circle, a quarter on hole boundaries (those
    // points lie in K since holes are open), the rest scattered in K.
    const unsigned n_outer = samples / 4;
    for (unsigned i = 0; i < n_outer; ++i)
        pts.push_back(std::polar(rd, 2.0 * std::numbers::pi * (i + 0.5) / n_outer));
    const unsigned n_holes = samples / 4;
    if (!region.holes().empty()) {
        for (unsigned i = 0; i < n_holes; ++i) {
            const auto& h = region.holes()[i % region.holes().size()];
            auto z = h.center + std::polar(h.radius, 2.0 * std::numbers::pi * (i + 0.25) / n_holes);
            if (region.in_K(z) && std::abs(z) <= rd) pts.push_back(z);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-rd, rd);
    std::size_t attempts = 0;
    while (pts.size() < samples && attempts < 200ULL * samples) {
        ++attempts;
        std::complex<double> z(u(rng), u(rng));
        if (std::abs(z) <= rd && region.in_K(z)) pts.push_back(z);
    }
    // Degenerate K within the disk (for instance a single circle): fill the
    // remainder on the outer circle with a shifted phase.
    for (unsigned i = 0; pts.size() < samples; ++i)
        pts.push_back(std::polar(rd, 2.0 * std::numbers::pi * (i + 0.75) / samples));

    std::vector<double> log2c;
    for (const auto& c : p.coeffs()) log2c.push_back(mpz_log2(c));

    std::vector<double> logs(pts.size());
    parallel_for(pts.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double scale_bits = log2_abs_sum(log2c, std::abs(pts[i]));
            mpfr_prec_t prec = 128;
            double value = 0.0;
            // Raise precision until it covers the cancellation between the
            // coefficient magnitudes and the computed value.
            for (int round = 0; round < 8; ++round) {
                MpfrComplexHorner ev(p, prec);
                value = ev.log_abs(pts[i]);
                const double lost = scale_bits - value / std::numbers::ln2;
                const auto need = static_cast<mpfr_prec_t>(std::ceil(lost)) + 64;
                if (need <= prec) break;
                prec = need;
            }
            logs[i] = value;
        }
    });
    SpotCheck sc;
    sc.num_samples = static_cast<unsigned>(pts.size());
    sc.min_log_abs = *std::min_element(logs.begin(), logs.end());
    sc.min_abs_value = sc.min_log_abs > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(sc.min_log_abs);
    return sc;
}

PatchCertificate patch(const RatPoly& m, const RegionSpec& region, const PatchConfig& config) {
    if (!m.is_monic()) throw Error(ErrorCode::NotMonic, "patch needs a monic polynomial");
    if (m.degree() < 1) throw Error(ErrorCode::InvalidArgument, "patch needs degree >= 1");

    const mpq_class r_m = choose_radius(m, region, config.r_denominator, false);
    const mpq_class inside_m = certified_lower_bound(m, region, r_m, config.grid_resolution, config.max_grid_resolution);
    const mpq_class R_m = std::min(inside_m, outside_lower_bound(m, r_m));
    if (!(R_m > 1)) throw Error(ErrorCode::InsufficientMargin, "certified inf |m| on K is not above 1");
    const mpq_class epsilon = std::min(mpq_class(R_m - 1), mpq_class(1));

    PatchCertificate cert;
    if (is_integral(m)) {
        cert.p = to_int_poly(m);
        cert.unchanged = true;
        cert.params.epsilon = epsilon;
        cert.params.r = r_m;
        cert.params.R_lower = R_m;
        cert.params.d = static_cast<unsigned long>(m.degree());
        cert.params.M = 1;
        cert.reconstruction_ok = true;
        cert.exact_cert_ok = R_m > 1;
        cert.spot_check = spot_check(cert.p, region, r_m, config.spot_samples, config.seed);
        return cert;
    }

    RatPoly f = rationalize(m, epsilon, r_m, config.denominator_limit);
    if (f.degree() <= 1) f = f * f;

    cert.params = choose_parameters(f, region, config);
    cert.params.epsilon = epsilon;
    ClearResult cleared = clear_fractional_parts(f, cert.params.M, cert.params.N);
    cert.p = std::move(cleared.p);
    cert.greedy_steps = cleared.ledger.size();
    cert.reconstruction_ok = reconstruct(cert.p, f, cleared.ledger) == poly_pow(f, cert.params.M.get_ui());
    cert.spot_check = spot_check(cert.p, region, cert.params.r, config.spot_samples, config.seed);
    const bool shape_ok = cert.p.is_monic() && cert.p.degree() == static_cast<long>(cert.params.d * cert.params.M.get_ui());
    cert.exact_cert_ok = verify_inequalities(cert.params) && cert.reconstruction_ok && shape_ok;
    return cert;
}

// ---------------------------------------------------------------------------
// heuristic_real_candidate

namespace {

struct HoleCells {
    std::vector<std::complex<double>> cells;
    std::complex<double> centroid;
};

std::vector<HoleCells> enclosed_empty_regions(const std::vector<std::complex<double>>& samples) {
    double xmin = samples[0].real(), xmax = xmin, ymin = samples[0].imag(), ymax = ymin;
    for (auto z : samples) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
    }
    constexpr int G = 96;
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double cell = span / G;
    const int nx = static_cast<int>(std::ceil((xmax - xmin) / cell)) + 1;
    const int ny = static_cast<int>(std::ceil((ymax - ymin) / cell)) + 1;

    // Occupancy radius: twice the median nearest-neighbour distance.
    std::vector<double> nn(samples.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < samples.size(); ++j)
            if (i != j) nn[i] = std::min(nn[i], std::abs(samples[i] - samples[j]));
    std::nth_element(nn.begin(), nn.begin() + static_cast<std::ptrdiff_t>(nn.size() / 2), nn.end());
    double reach = nn[nn.size() / 2];
    reach = 2.0 * (std::isfinite(reach) ? reach : span);
    reach = std::max(reach, cell);

    auto point = [&](int i, int j) { return std::complex<double>(xmin + i * cell, ymin + j * cell); };
    std::vector<char> empty(static_cast<std::size_t>(nx * ny), 1);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            auto z = point(i, j);
            for (auto s : samples)
                if (std::abs(z - s) < reach) {
                    empty[static_cast<std::size_t>(i * ny + j)] = 0;
                    break;
                }
        }

    std::vector<char> seen(empty.size(), 0);
    std::vector<HoleCells> holes;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            auto idx = static_cast<std::size_t>(i * ny + j);
            if (!empty[idx] || seen[idx]) continue;
            std::queue<std::pair<int, int>> todo;
            todo.emplace(i, j);
            seen[idx] = 1;
            bool touches_border = false;
            HoleCells h;
            while (!todo.empty()) {
                auto [a, b] = todo.front();
                todo.pop();
                h.cells.push_back(point(a, b));
                if (a == 0 || b == 0 || a == nx - 1 || b == ny - 1) touches_border = true;
                const int da[4] = {1, -1, 0, 0};
                const int db[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int u = a + da[k], v = b + db[k];
                    if (u < 0 || v < 0 || u >= nx || v >= ny) continue;
                    auto id2 = static_cast<std::size_t>(u * ny + v);
                    if (empty[id2] && !seen[id2]) {
                        seen[id2] = 1;
                        todo.emplace(u, v);
                    }
                }
            }
            if (touches_border) continue;
            std::complex<double> c = 0.0;
            for (auto z : h.cells) c += z;
            h.centroid = c / static_cast<double>(h.cells.size());
            holes.push_back(std::move(h));
        }
    return holes;
}

std::vector<std::complex<double>> leja_points(const HoleCells& hole, unsigned n) {
    std::vector<std::complex<double>> pts;
    if (n == 0) return pts;
    pts.push_back(hole.centroid);
    std::vector<double> logprod(hole.cells.size(), 0.0);
    while (pts.size() < n) {
        for (std::size_t i = 0; i < hole.cells.size(); ++i)
            logprod[i] += std::log(std::max(std::abs(hole.cells[i] - pts.back()), 1e-300));
        auto it = std::max_element(logprod.begin(), logprod.end());
        pts.push_back(hole.cells[static_cast<std::size_t>(it - logprod.begin())]);
    }
    return pts;
}

} // namespace

RatPoly heuristic_real_candidate(const std::vector<std::complex<double>>& samples, unsigned degree_budget) {
    if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "empty sample set");
    if (degree_budget == 0) throw Error(ErrorCode::InvalidArgument, "degree budget must be positive");
    const auto holes = enclosed_empty_regions(samples);
    if (holes.empty()) throw Error(ErrorCode::NotFound, "sample cloud encloses no region");

    std::size_t total_cells = 0;
    for (const auto& h : holes) total_cells += h.cells.size();

    auto min_abs_on_samples = [&](const std::vector<double>& c) {
        double best = std::numeric_limits<double>::infinity();
        for (auto s : samples) {
            std::complex<double> acc = 0.0;
            for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
            best = std::min(best, std::abs(acc));
        }
        return best;
    };

    for (unsigned n = 1; n <= degree_budget; ++n) {
        // Split the degree across holes in proportion to their area.
        std::vector<unsigned> share(holes.size(), 0);
        unsigned assigned = 0;
        std::vector<std::pair<double, std::size_t>> rem;
        for (std::size_t h = 0; h < holes.size(); ++h) {
            double exact = static_cast<double>(n) * holes[h].cells.size() / total_cells;
            share[h] = static_cast<unsigned>(std::floor(exact));
            assigned += share[h];
            rem.emplace_back(exact - share[h], h);
        }
        std::sort(rem.begin(), rem.end(), std::greater<>());
        for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++share[rem[i % rem.size()].second];

        for (double shrink : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            std::vector<std::complex<double>> poly{1.0};
            for (std::size_t h = 0; h < holes.size(); ++h)
                for (auto z : leja_points(holes[h], share[h])) {
                    auto root = holes[h].centroid + shrink * (z - holes[h].centroid);
                    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
                    for (std::size_t i = 0; i < poly.size(); ++i) {
                        next[i + 1] += poly[i];
                        next[i] -= root * poly[i];
                    }
                    poly = std::move(next);
                }
            std::vector<mpq_class> exact;
            std::vector<double> real;
            for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
                mpq_class q = best_rational_approximation(mpq_class(poly[i].real()), mpz_class(1024));
                exact.push_back(q);
                real.push_back(q.get_d());
            }
            exact.emplace_back(1);
            real.push_back(1.0);
            if (min_abs_on_samples(real) > 1.0) return RatPoly(std::move(exact));
        }
    }
    throw Error(ErrorCode::NotFound, "no monic candidate exceeded 1 on all samples");
}

} // namespace arithcap
