#include "wlab/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void sort_truncate(std::vector<double>& v, int count) {
    std::sort(v.begin(), v.end());
    if (static_cast<int>(v.size()) > count) v.resize(count);
}

// Arclength of a closed polar curve r(th) by composite Gauss-Legendre; enough
// panels that the result is exact to roundoff for the shipped domains.
template <typename R, typename Rp>
double polar_arclength(R r, Rp rp) {
    // 5-point GL on 256 panels.
    static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};
    const int panels = 256;
    const double hw = kPi / panels;  // half-width of each panel
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (2 * p + 1) * hw;
        for (int i = 0; i < 5; ++i) {
            const double th = mid + hw * gx[i];
            const double rr = r(th);
            const double dd = rp(th);
            total += gw[i] * hw * std::sqrt(rr * rr + dd * dd);
        }
    }
    return total;
}

}  // namespace

void validate_domain(const DomainSpec& d) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DiskSpec>) {
                if (!(s.R > 0.0)) throw std::invalid_argument("disk: R must be > 0");
            } else if constexpr (std::is_same_v<T, BallSpec>) {
                if (s.n < 2) throw std::invalid_argument("ball: n must be >= 2");
                if (!(s.R > 0.0)) throw std::invalid_argument("ball: R must be > 0");
            } else if constexpr (std::is_same_v<T, AnnulusSpec>) {
                if (!(s.R_in > 0.0 && s.R_in < s.R_out))
                    throw std::invalid_argument("annulus: need 0 < R_in < R_out");
            } else if constexpr (std::is_same_v<T, EllipseSpec>) {
                if (!(s.b > 0.0 && s.a >= s.b))
                    throw std::invalid_argument("ellipse: need a >= b > 0");
            } else {
                if (!(s.R > 0.0) || !(s.eps >= 0.0) || s.m < 1 || !(s.eps < 1.0))
                    throw std::invalid_argument("star: need R > 0, 0 <= eps < 1, m >= 1");
            }
        },
        d);
}

std::string domain_name(const DomainSpec& d) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DiskSpec>) return "disk";
            else if constexpr (std::is_same_v<T, BallSpec>) return "ball";
            else if constexpr (std::is_same_v<T, AnnulusSpec>) return "annulus";
            else if constexpr (std::is_same_v<T, EllipseSpec>) return "ellipse";
            else return "star";
        },
        d);
}

int domain_dim(const DomainSpec& d) {
    if (const auto* b = std::get_if<BallSpec>(&d)) return b->n;
    return 2;
}

double boundary_volume(const DomainSpec& d) {
    validate_domain(d);
    if (const auto* s = std::get_if<DiskSpec>(&d)) return 2.0 * kPi * s->R;
    if (const auto* s = std::get_if<BallSpec>(&d)) {
        // Area of S^{n-1}(R) = n * omega_n * R^{n-1}.
        return s->n * unit_ball_volume(s->n) * std::pow(s->R, s->n - 1);
    }
    if (const auto* s = std::get_if<AnnulusSpec>(&d)) return 2.0 * kPi * (s->R_in + s->R_out);
    if (const auto* s = std::get_if<EllipseSpec>(&d)) {
        const double a = s->a, b = s->b;
        return polar_arclength(
            [&](double th) {
                const double c = std::cos(th), sn_ = std::sin(th);
                return a * b / std::sqrt(b * b * c * c + a * a * sn_ * sn_);
            },
            [&](double th) {
                // d/dth of the polar radius of the ellipse
                const double c = std::cos(th), sn_ = std::sin(th);
                const double den = b * b * c * c + a * a * sn_ * sn_;
                return a * b * (b * b - a * a) * sn_ * c / std::pow(den, 1.5);
            });
    }
    const auto& s = std::get<StarSpec>(d);
    return polar_arclength(
        [&](double th) { return s.R * (1.0 + s.eps * std::cos(s.m * th)); },
        [&](double th) { return -s.R * s.eps * s.m * std::sin(s.m * th); });
}

SpectrumTriple disk_spectra(double R, double beta, int count) {
    if (count < 1) throw std::invalid_argument("disk_spectra: count must be >= 1");
    if (!(R > 0.0)) throw std::invalid_argument("disk_spectra: R must be > 0");
    SpectrumTriple out;
    out.beta = beta;
    out.steklov.push_back(0.0);
    out.eta.push_back(0.0);
    out.wentzel.push_back(0.0);
    for (int k = 1; static_cast<int>(out.steklov.size()) < count; ++k) {
        // Same fp expressions as ball_spectra at n = 2, so the two agree bitwise.
        const double s = k / R;
        const double e = double(k) * k / (R * R);
        for (int copy = 0; copy < 2 && static_cast<int>(out.steklov.size()) < count; ++copy) {
            out.steklov.push_back(s);
            out.eta.push_back(e);
            out.wentzel.push_back(s + beta * e);
        }
    }
    return out;
}

long long spherical_harmonic_dim(int n, int k) {
    if (k < 0) return 0;
    auto binom = [](long long m, long long j) -> long long {
        if (j < 0 || j > m) return 0;
        j = std::min(j, m - j);
        long long r = 1;
        for (long long i = 1; i <= j; ++i) r = r * (m - j + i) / i;
        return r;
    };
    return binom(n + k - 1, k) - binom(n + k - 3, k - 2);
}

SpectrumTriple ball_spectra(int n, double R, double beta, int count) {
    if (count < 1) throw std::invalid_argument("ball_spectra: count must be >= 1");
    if (n < 2 || !(R > 0.0)) throw std::invalid_argument("ball_spectra: bad parameters");
    SpectrumTriple out;
    out.beta = beta;
    for (int k = 0; static_cast<int>(out.steklov.size()) < count; ++k) {
        const double s = k / R;
        const double e = double(k) * (k + n - 2) / (R * R);
        const long long mult = spherical_harmonic_dim(n, k);
        for (long long c = 0; c < mult && static_cast<int>(out.steklov.size()) < count; ++c) {
            out.steklov.push_back(s);
            out.eta.push_back(e);
            out.wentzel.push_back(s + beta * e);
        }
    }
    return out;
}

AnnulusMode annulus_mode_system(double R_in, double R_out, double beta, int k) {
    if (!(R_in > 0.0 && R_in < R_out))
        throw std::invalid_argument("annulus_mode_system: need 0 < R_in < R_out");
    if (k < 0) throw std::invalid_argument("annulus_mode_system: k must be >= 0");
    const double a = R_in, b = R_out;
    AnnulusMode mode;
    mode.k = k;
    if (k == 0) {
        // u = A + B ln(r/b): outer (1/b)B = lambda*A,
        // inner -(1/a)B = lambda*(A + ln(a/b) B); the boundary Laplacian term
        // vanishes on locally constant data.
        mode.T << 0.0, 1.0 / b, 0.0, -1.0 / a;
        mode.M << 1.0, 0.0, 1.0, std::log(a / b);
        return mode;
    }
    // u = A (r/b)^k + B (a/r)^k, q = (a/b)^k keeps entries O(1) for large k.
    const double q = std::pow(a / b, k);
    const double cb = beta * k * k / (b * b);
    const double ca = beta * k * k / (a * a);
    mode.T << cb + k / b, q * (cb - k / b), q * (ca - k / a), ca + k / a;
    mode.M << 1.0, q, q, 1.0;
    return mode;
}

double annulus_mode_det(const AnnulusMode& mode, double lambda) {
    return (mode.T - lambda * mode.M).determinant();
}

std::array<double, 2> annulus_mode_eigenvalues(const AnnulusMode& mode) {
    // det(T - lambda M) = c2 lambda^2 - c1 lambda + c0.
    const auto& T = mode.T;
    const auto& M = mode.M;
    const double c2 = M.determinant();
    const double c1 = T(0, 0) * M(1, 1) + T(1, 1) * M(0, 0) - T(0, 1) * M(1, 0) -
                      T(1, 0) * M(0, 1);
    const double c0 = T.determinant();
    if (std::fabs(c2) < 1e-14)
        throw std::runtime_error("annulus mode: degenerate 2x2 system (det M ~ 0)");
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) {
        if (disc < -1e-10 * c1 * c1)
            throw std::runtime_error("annulus mode: complex eigenvalue pair");
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    // Citardauq form for the small root avoids cancellation.
    const double big = (c1 + (c1 >= 0 ? root : -root)) / (2.0 * c2);
    const double small = (big != 0.0) ? (c0 / c2) / big : c1 / (2.0 * c2);
    double lo = std::min(small, big), hi = std::max(small, big);
    return {lo, hi};
}

SpectrumTriple annulus_spectra(double R_in, double R_out, double beta, int count) {
    if (count < 1) throw std::invalid_argument("annulus_spectra: count must be >= 1");
    const double a = R_in, b = R_out;
    SpectrumTriple out;
    out.beta = beta;

    std::vector<double> wentzel, steklov, eta;
    const int k_max = count + 2;
    for (int k = 0; k <= k_max; ++k) {
        const int mult = (k == 0) ? 1 : 2;  // cos and sin branches
        const auto w = annulus_mode_eigenvalues(annulus_mode_system(a, b, beta, k));
        const auto s = annulus_mode_eigenvalues(annulus_mode_system(a, b, 0.0, k));
        for (int c = 0; c < mult; ++c) {
            wentzel.push_back(w[0]);
            wentzel.push_back(w[1]);
            steklov.push_back(s[0]);
            steklov.push_back(s[1]);
        }
        if (k == 0) {
            eta.push_back(0.0);  // inner circle constant
            eta.push_back(0.0);  // outer circle constant
        } else {
            for (int c = 0; c < 2; ++c) {
                eta.push_back(k * k / (a * a));
                eta.push_back(k * k / (b * b));
            }
        }
    }
    // The k = 0 Steklov/Wentzel ground mode comes out as an exact 0 root.
    sort_truncate(wentzel, count);
    sort_truncate(steklov, count);
    sort_truncate(eta, count);
    if (std::fabs(steklov.front()) < 1e-13) steklov.front() = 0.0;
    if (std::fabs(wentzel.front()) < 1e-13) wentzel.front() = 0.0;
    out.steklov = std::move(steklov);
    out.eta = std::move(eta);
    out.wentzel = std::move(wentzel);
    return out;
}

bool has_closed_form(const DomainSpec& d) {
    return std::holds_alternative<DiskSpec>(d) || std::holds_alternative<BallSpec>(d) ||
           std::holds_alternative<AnnulusSpec>(d);
}

SpectrumTriple closed_form_spectra(const DomainSpec& d, double beta, int count) {
    if (const auto* s = std::get_if<DiskSpec>(&d)) return disk_spectra(s->R, beta, count);
    if (const auto* s = std::get_if<BallSpec>(&d)) return ball_spectra(s->n, s->R, beta, count);
    if (const auto* s = std::get_if<AnnulusSpec>(&d))
        return annulus_spectra(s->R_in, s->R_out, beta, count);
    throw std::invalid_argument("closed_form_spectra: no closed form for " + domain_name(d));
}

double star_curvature(const StarSpec& s, double theta) {
    const double r = s.R * (1.0 + s.eps * std::cos(s.m * theta));
    const double rp = -s.R * s.eps * s.m * std::sin(s.m * theta);
    const double rpp = -s.R * s.eps * s.m * s.m * std::cos(s.m * theta);
    return (r * r + 2.0 * rp * rp - r * rpp) / std::pow(r * r + rp * rp, 1.5);
}

namespace {

struct StarGeometry {
    double kappa_min, kappa_max, roll;
};

StarGeometry star_geometry(const StarSpec& s) {
    auto extrema = [&](int n) {
        double lo = star_curvature(s, 0.0), hi = lo;
        for (int i = 1; i < n; ++i) {
            const double k = star_curvature(s, 2.0 * kPi * i / n);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [lo_h, hi_h] = extrema(2048);
    const auto [lo, hi] = extrema(4096);
    // Richardson check on the O(h^2) sampling error near smooth extrema.
    const double err = std::max(std::fabs(lo - lo_h), std::fabs(hi - hi_h)) / 3.0;
    if (err > 1e-6)
        throw std::runtime_error("star_geometry: curvature sampling did not converge");

    // Rolling radius: curvature cap plus inward normal-collision sampling.
    double roll = hi > 0.0 ? 1.0 / hi : std::numeric_limits<double>::infinity();
    const int n = 1024;
    std::vector<double> px(n), py(n), nx(n), ny(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * kPi * i / n;
        const double r = s.R * (1.0 + s.eps * std::cos(s.m * th));
        const double rp = -s.R * s.eps * s.m * std::sin(s.m * th);
        const double c = std::cos(th), sn_ = std::sin(th);
        px[i] = r * c;
        py[i] = r * sn_;
        // CCW tangent p' = (r'c - r s, r's + r c); outward normal is the
        // tangent rotated by -90 deg, inward is its negative.
        const double tx = rp * c - r * sn_;
        const double ty = rp * sn_ + r * c;
        const double len = std::hypot(tx, ty);
        nx[i] = -ty / len;
        ny[i] = tx / len;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dx = px[j] - px[i], dy = py[j] - py[i];
            const double proj = dx * nx[i] + dy * ny[i];
            if (proj <= 1e-12) continue;
            const double t = (dx * dx + dy * dy) / (2.0 * proj);
            roll = std::min(roll, t);
        }
    }
    return {lo, hi, roll};
}

}  // namespace

GeometryBounds geometry_of(const DomainSpec& d) {
    validate_domain(d);
    GeometryBounds g;
    if (const auto* s = std::get_if<DiskSpec>(&d)) {
        g.dim = 2;
        g.kappa_minus = g.kappa_plus = 1.0 / s->R;
        g.mean_kappa_minus = 1.0 / s->R;
        g.roll = s->R;
    } else if (const auto* s = std::get_if<BallSpec>(&d)) {
        g.dim = s->n;
        g.kappa_minus = g.kappa_plus = 1.0 / s->R;
        g.mean_kappa_minus = 1.0 / s->R;
        g.roll = s->R;
    } else if (const auto* s = std::get_if<AnnulusSpec>(&d)) {
        g.dim = 2;
        g.kappa_minus = -1.0 / s->R_in;  // inner circle bends away from the outward normal
        g.kappa_plus = 1.0 / s->R_out;
        g.mean_kappa_minus = -1.0 / s->R_in;
        g.roll = 0.5 * (s->R_out - s->R_in);
    } else if (const auto* s = std::get_if<EllipseSpec>(&d)) {
        g.dim = 2;
        g.kappa_minus = s->b / (s->a * s->a);
        g.kappa_plus = s->a / (s->b * s->b);
        g.mean_kappa_minus = g.kappa_minus;
        g.roll = s->b * s->b / s->a;
    } else {
        const auto& star = std::get<StarSpec>(d);
        const StarGeometry sg = star_geometry(star);
        g.dim = 2;
        g.kappa_minus = sg.kappa_min;
        g.kappa_plus = sg.kappa_max;
        g.mean_kappa_minus = sg.kappa_min;
        g.roll = sg.roll;
    }
    g.validate();
    return g;
}

}  // namespace wlab
