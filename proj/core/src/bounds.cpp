#include "wlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "wlab/model_geometry.hpp"

namespace wlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kCertAbsFloor = 1e-12;
}  // namespace

void GeometryBounds::validate() const {
    if (dim < 2) throw std::invalid_argument("GeometryBounds: dim must be >= 2");
    if (!(K_minus <= K_plus)) throw std::invalid_argument("GeometryBounds: K_minus > K_plus");
    if (!(kappa_minus <= kappa_plus))
        throw std::invalid_argument("GeometryBounds: kappa_minus > kappa_plus");
    if (!(roll > 0.0)) throw std::invalid_argument("GeometryBounds: roll must be > 0");
}

DerivedConstants derive_constants(const GeometryBounds& g) {
    g.validate();
    DerivedConstants out;
    out.B = (g.dim - 1) * (std::sqrt(std::fabs(g.K_minus)) + std::fabs(g.kappa_minus));
    out.h_tilde = h_tilde(g.K_plus, g.kappa_plus);
    const double inv_h = out.h_tilde.reciprocal();
    out.B_bar = 2.0 * (out.B + inv_h);
    out.A_bar = 2.0 * (out.B / (g.dim - 1) + (g.dim - 1) * inv_h);
    return out;
}

double thm1_bound(double beta, double eta_k, double B_bar) {
    if (!(beta > 0.0)) throw std::domain_error("thm1_bound: beta must be > 0");
    const double root = 1.0 / std::sqrt(beta) + std::sqrt(B_bar + beta * eta_k);
    return root * root;
}

double thm2_bound(double beta, double lambda_s, double A_bar) {
    if (!(beta > 0.0)) throw std::domain_error("thm2_bound: beta must be > 0");
    return (1.0 + beta * A_bar) * lambda_s + beta * lambda_s * lambda_s;
}

Thm3Result thm3_bound(int n, double K_minus, double kappa_minus, double beta, double eta_k) {
    Thm3Result out;
    if (!(kappa_minus > 0.0)) {
        out.reason = "kappa_minus <= 0";
        return out;
    }
    const double p = K_minus + 2.0 * eta_k;
    double Q = p * p - 4.0 * kappa_minus * (n - 1) * eta_k;
    if (Q < 0.0 && std::fabs(Q) <= 1e-12 * p * p) Q = 0.0;  // sharp cases sit at Q = 0
    out.Q = Q;
    if (Q < 0.0) {
        out.reason = "Q < 0";
        return out;
    }
    out.applicable = true;
    out.value = (p + std::sqrt(Q)) / (2.0 * (n - 1) * kappa_minus) + beta * eta_k;
    return out;
}

double lower_bound(double beta, double lambda_s_k, double eta_k) {
    return lambda_s_k + beta * eta_k;
}

double unit_ball_volume(int m) {
    // omega_m = pi^{m/2} / Gamma(m/2 + 1); low dimensions kept exact.
    switch (m) {
        case 0: return 1.0;
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
        case 4: return kPi * kPi / 2.0;
        default: return std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
    }
}

double weyl_constant(int n, double vol_boundary) {
    if (!(vol_boundary > 0.0)) throw std::invalid_argument("weyl_constant: Vol(Gamma) must be > 0");
    return 2.0 * kPi / std::pow(unit_ball_volume(n - 1) * vol_boundary, 1.0 / (n - 1));
}

double weyl_predict(WeylKind kind, int n, double vol_boundary, int k, double beta) {
    const double cn = weyl_constant(n, vol_boundary);
    if (kind == WeylKind::steklov) return cn * std::pow(double(k), 1.0 / (n - 1));
    return beta * cn * cn * std::pow(double(k), 2.0 / (n - 1));
}

void SpectrumTriple::validate() const {
    if (steklov.size() != eta.size() || steklov.size() != wentzel.size())
        throw std::invalid_argument("SpectrumTriple: list lengths differ");
    if (beta < 0.0) throw std::invalid_argument("SpectrumTriple: beta < 0");
    auto check = [](const std::vector<double>& v, const char* name) {
        if (v.empty()) return;
        if (std::fabs(v.front()) > 1e-12)
            throw std::invalid_argument(std::string("SpectrumTriple: ") + name +
                                        " does not start at 0");
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] < v[i - 1] - 1e-12)
                throw std::invalid_argument(std::string("SpectrumTriple: ") + name +
                                            " not ascending");
    };
    check(steklov, "steklov");
    check(eta, "eta");
    check(wentzel, "wentzel");
}

std::vector<SpectrumGroup> group_spectrum(const std::vector<double>& ascending, double rel_tol) {
    std::vector<SpectrumGroup> groups;
    for (double v : ascending) {
        if (!groups.empty() &&
            std::fabs(v - groups.back().value) <= rel_tol * std::max(1.0, std::fabs(v))) {
            ++groups.back().multiplicity;
        } else {
            groups.push_back({v, 1});
        }
    }
    return groups;
}

bool certified_le(double lhs, double rhs, double tol) {
    return lhs <= rhs * (1.0 + tol) + kCertAbsFloor;
}

std::vector<BoundReport> verify(const SpectrumTriple& spectra, const GeometryBounds& g,
                                double tol) {
    spectra.validate();
    g.validate();
    const DerivedConstants dc = derive_constants(g);
    const double beta = spectra.beta;

    std::vector<BoundReport> reports;
    reports.reserve(spectra.wentzel.size());
    for (size_t i = 0; i < spectra.wentzel.size(); ++i) {
        BoundReport r;
        r.k = static_cast<int>(i);
        r.lambda_w = spectra.wentzel[i];
        r.lambda_s = spectra.steklov[i];
        r.eta = spectra.eta[i];

        r.lower.applicable = true;
        r.lower.value = lower_bound(beta, r.lambda_s, r.eta);
        r.lower.slack = r.lambda_w - r.lower.value;
        r.lower.pass = certified_le(r.lower.value, r.lambda_w, tol);

        if (beta > 0.0) {
            r.thm1.applicable = true;
            r.thm1.value = thm1_bound(beta, r.eta, dc.B_bar);
            r.thm1.slack = r.thm1.value - r.lambda_w;
            r.thm1.pass = certified_le(r.lambda_w, r.thm1.value, tol);

            r.thm2.applicable = true;
            r.thm2.value = thm2_bound(beta, r.lambda_s, dc.A_bar);
            r.thm2.slack = r.thm2.value - r.lambda_w;
            r.thm2.pass = certified_le(r.lambda_w, r.thm2.value, tol);
        }

        if (g.mean_kappa_minus > 0.0) {
            const Thm3Result t3 =
                thm3_bound(g.dim, g.ricci_K_minus, g.mean_kappa_minus, beta, r.eta);
            if (t3.applicable) {
                r.thm3.applicable = true;
                r.thm3.value = t3.value;
                r.thm3.slack = t3.value - r.lambda_w;
                r.thm3.pass = certified_le(r.lambda_w, t3.value, tol);
            } else {
                r.thm3_reason = t3.reason;
            }
        } else {
            r.thm3_reason = "kappa_minus <= 0";
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

bool all_pass(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) {
        if (r.lower.applicable && !r.lower.pass) return false;
        if (r.thm1.applicable && !r.thm1.pass) return false;
        if (r.thm2.applicable && !r.thm2.pass) return false;
        if (r.thm3.applicable && !r.thm3.pass) return false;
    }
    return true;
}

}  // namespace wlab
