// Acceptance suite: one criterion per command-line argument (1..7), all when
// run bare. Prints one PASS/FAIL line per criterion plus indented detail and
// exits nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wlab/bounds.hpp"
#include "wlab/closed_form.hpp"
#include "wlab/commands.hpp"
#include "wlab/fem.hpp"
#include "wlab/identities.hpp"
#include "wlab/model_geometry.hpp"

#include <json.hpp>

using namespace wlab;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---- 1. closed-form beginnings, exact arithmetic ---------------------------
Criterion criterion1() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();

    const SpectrumTriple disk = disk_spectra(1.0, 1.0, 7);
    const std::vector<double> disk_expected{0, 2, 2, 6, 6, 12, 12};
    c.require(disk.wentzel == disk_expected, "disk(1) beta=1 Wentzel start is not exact");

    for (double beta : {1.0, 0.5, 0.25}) {  // dyadic, so the doubles are exact
        const SpectrumTriple ball = ball_spectra(3, 1.0, beta, 9);
        std::vector<double> expected{0};
        for (int i = 0; i < 3; ++i) expected.push_back(1.0 + 2.0 * beta);
        for (int i = 0; i < 5; ++i) expected.push_back(2.0 + 6.0 * beta);
        c.require(ball.wentzel == expected,
                  "ball(3,1) Wentzel start is not exact at beta=" + fmt(beta));
    }

    const double elapsed = seconds_since(t0);
    c.info("runtime " + fmt(elapsed) + "s (budget 1s)");
    c.require(elapsed < 1.0, "runtime exceeds 1s");
    return c;
}

// ---- 2. FEM convergence on the disk ----------------------------------------
Criterion criterion2() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<double> err_s, err_w;
    for (int nr : {16, 32, 64}) {
        const Mesh m = gen_polar_mesh(DiskSpec{1.0}, nr, 4 * nr);
        const DtNSystem s = assemble(m);
        const Eigen::MatrixXd N = dtn_matrix(s);
        const double ls = solve_spectrum_with(N, s, 0.0, 2).values[1];
        const double lw = solve_spectrum_with(N, s, 1.0, 2).values[1];
        err_s.push_back(std::fabs(ls - 1.0));
        err_w.push_back(std::fabs(lw - 2.0) / 2.0);
    }
    c.info("steklov lambda1 errors: " + fmt(err_s[0]) + " " + fmt(err_s[1]) + " " +
           fmt(err_s[2]));
    c.require(err_s[2] <= 0.01, "steklov lambda1 error at 64x256 above 1%");
    c.require(err_w[2] <= 0.01, "wentzel lambda1 error at 64x256 above 1%");
    for (int i = 0; i < 2; ++i) {
        c.require(std::log2(err_s[i] / err_s[i + 1]) >= 1.5, "steklov convergence order < 1.5");
        c.require(std::log2(err_w[i] / err_w[i + 1]) >= 1.5, "wentzel convergence order < 1.5");
    }

    const double elapsed = seconds_since(t0);
    c.info("runtime " + fmt(elapsed) + "s (budget 60s)");
    c.require(elapsed < 60.0, "runtime exceeds 60s");
    return c;
}

// ---- 3. theorem suite over the domain/beta grid ----------------------------
Criterion criterion3() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> betas{0.1, 1.0, 10.0};
    const int count = 21;

    const std::vector<DomainSpec> domains{DiskSpec{1.0}, DiskSpec{2.0}, BallSpec{3, 1.0},
                                          AnnulusSpec{1.0, 2.0}, EllipseSpec{2.0, 1.0}};

    // Ellipse spectra come from the FEM route at the 64x256 mesh.
    const Mesh emesh = gen_polar_mesh(EllipseSpec{2.0, 1.0}, 64, 256);
    const DtNSystem esys = assemble(emesh);
    const Eigen::MatrixXd eN = dtn_matrix(esys);

    for (const auto& d : domains) {
        const GeometryBounds g = geometry_of(d);
        for (double beta : betas) {
            const SpectrumTriple t = has_closed_form(d)
                                         ? closed_form_spectra(d, beta, count)
                                         : fem_spectrum_triple_with(eN, esys, beta, count);
            const auto reports = verify(t, g);
            // One summary line per (inequality, domain, beta) leg.
            const char* names[4] = {"lower bound", "thm1", "thm2", "thm3"};
            std::vector<int> bad[4];
            for (const auto& r : reports) {
                const BoundCheck* checks[4] = {&r.lower, &r.thm1, &r.thm2, &r.thm3};
                for (int i = 0; i < 4; ++i)
                    if (checks[i]->applicable && !checks[i]->pass) bad[i].push_back(r.k);
            }
            for (int i = 0; i < 4; ++i) {
                if (bad[i].empty()) continue;
                std::string ks;
                for (int k : bad[i]) ks += (ks.empty() ? "" : ",") + std::to_string(k);
                c.require(false, std::string(names[i]) + " fails at " + domain_name(d) +
                                     " beta=" + fmt(beta) + " for k=" + ks);
            }
        }
    }

    // Thm3 sharpness (beta-independent part) at the first nonzero mode.
    const SpectrumTriple d1 = disk_spectra(1.0, 1.0, 3);
    c.require(std::fabs(thm3_bound(2, 0.0, 1.0, 0.0, d1.eta[1]).value - d1.steklov[1]) <= 1e-10,
              "thm3 not sharp on the unit disk");
    const SpectrumTriple b1 = ball_spectra(3, 1.0, 1.0, 4);
    c.require(std::fabs(thm3_bound(3, 0.0, 1.0, 0.0, b1.eta[1]).value - b1.steklov[1]) <= 1e-10,
              "thm3 not sharp on the unit ball");

    // Exit-code contract over the same grid through the CLI.
    const auto tmp = std::filesystem::temp_directory_path() / "wlab_acceptance3";
    std::filesystem::create_directories(tmp);
    const auto cfg_path = tmp / "config.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"domains":[{"kind":"disk","R":1},{"kind":"disk","R":2},)"
            << R"({"kind":"ball","n":3,"R":1},{"kind":"annulus","R_in":1,"R_out":2},)"
            << R"({"kind":"ellipse","a":2,"b":1}],)"
            << R"("beta":[0.1,1,10],"count":21,"refine":[64],"out":")" << (tmp / "out").string()
            << R"("})";
    }
    const std::string cmd =
        std::string(WLAB_CLI_PATH) + " verify --config " + cfg_path.string() + " > /dev/null";
    const int rc = std::system(cmd.c_str());
    const int exit_code = WEXITSTATUS(rc);
    c.require(exit_code == 0, "verify exit code " + std::to_string(exit_code) + ", expected 0");

    const double elapsed = seconds_since(t0);
    c.info("runtime " + fmt(elapsed) + "s (budget 120s)");
    c.require(elapsed < 120.0, "runtime exceeds 120s");
    return c;
}

// ---- 4. Weyl slope fits ------------------------------------------------------
Criterion criterion4() {
    Criterion c;
    RunConfig config;
    config.domains.push_back(DiskSpec{1.0});
    config.betas = {1.0, 10.0};
    config.count = 101;  // top-half fit covers k in [50, 100]
    const CommandOutput out = cmd_weyl(config);
    std::string summary_text;
    for (const auto& [name, content] : out.files)
        if (name == "weyl_summary.json") summary_text = content;
    const auto summary = nlohmann::json::parse(summary_text);

    const double s_slope = summary[0]["steklov_slope"];
    c.info("steklov slope " + fmt(s_slope) + " vs C_2 = 0.5");
    c.require(std::fabs(s_slope - 0.5) <= 0.025, "steklov slope off C_2 by more than 5%");
    for (const auto& wf : summary[0]["wentzel"]) {
        const double slope = wf["slope"];
        const double predicted = wf["predicted"];
        c.info("wentzel slope " + fmt(slope) + " vs beta*C_2^2 = " + fmt(predicted));
        c.require(std::fabs(slope - predicted) <= 0.05 * predicted,
                  "wentzel slope off beta*C_2^2 by more than 5%");
    }
    return c;
}

// ---- 5. identity suite -------------------------------------------------------
Criterion criterion5() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();

    double worst_poh = 0.0;
    for (int k = 0; k <= 8; ++k)
        for (double h : {0.1, 0.3, 0.5})
            worst_poh = std::max(worst_poh,
                                 poh_residual(1.0, harmonic_disk_mode(k), h, 1.0).residual);
    c.info("max poh residual " + fmt(worst_poh));
    c.require(worst_poh <= 1e-9, "poh residual above 1e-9");

    double worst_reilly = 0.0;
    for (const auto& f : reilly_catalog_disk())
        worst_reilly = std::max(worst_reilly, reilly_residual_disk(1.0, f).residual);
    for (const auto& f : reilly_catalog_ball())
        worst_reilly = std::max(worst_reilly, reilly_residual_ball(1.0, f).residual);
    c.info("max reilly residual " + fmt(worst_reilly));
    c.require(worst_reilly <= 1e-9, "reilly residual above 1e-9");

    double worst_hess = 0.0;
    for (double h : {0.25, 0.5, 0.75})
        worst_hess = std::max(worst_hess, hess_eta_polar_check(1.0, h, 1000));
    c.require(worst_hess <= 1e-12, "hessian eigenvalue deviation above 1e-12");

    const double elapsed = seconds_since(t0);
    c.info("runtime " + fmt(elapsed) + "s (budget 30s)");
    c.require(elapsed < 30.0, "runtime exceeds 30s");
    return c;
}

// ---- 6. riccati layer --------------------------------------------------------
Criterion criterion6() {
    Criterion c;
    std::mt19937 rng(20250809);
    std::uniform_real_distribution<double> dK(-4.0, 4.0), da(-2.5, 2.5), gap(0.0, 2.0),
        dkap(0.05, 4.0);

    // Closed form vs RK4 on 100 random (K, a0).
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double K = dK(rng);
        const double a0 = da(rng);
        const RiccatiSolution closed(K, a0);
        const double t_end = 0.75 * std::min(closed.pole_time().value_or(4.0 / 3.0), 4.0 / 3.0);
        const RiccatiPath path = riccati_numeric(K, a0, t_end, t_end / 8000.0);
        for (size_t j = 0; j < path.times.size(); j += 400)
            worst = std::max(worst, std::fabs(path.values[j] - closed(path.times[j])));
    }
    c.info("max |closed - rk4| = " + fmt(worst));
    c.require(worst <= 1e-6, "closed form vs RK4 disagreement above 1e-6");

    // Comparison-principle monotonicity on 100 admissible pairs.
    bool monotone = true, poles_ordered = true;
    for (int i = 0; i < 100; ++i) {
        const double K2 = dK(rng), K1 = K2 + gap(rng);
        const double a2_0 = da(rng), a1_0 = a2_0 - gap(rng);
        const RiccatiSolution a1(K1, a1_0), a2(K2, a2_0);
        if (a1.pole_time().infinite()) {
            poles_ordered = poles_ordered && a2.pole_time().infinite();
        } else if (a2.pole_time().finite()) {
            poles_ordered =
                poles_ordered && a1.pole_time().value() <= a2.pole_time().value() + 1e-12;
        }
        const double hi = 0.95 * std::min({a1.pole_time().value_or(3.0),
                                           a2.pole_time().value_or(3.0), 3.0});
        for (int j = 0; j <= 20; ++j) {
            const double t = hi * j / 20.0;
            monotone = monotone && (a1(t) <= a2(t) + 1e-9);
        }
    }
    c.require(monotone, "comparison principle violated on an admissible pair");
    c.require(poles_ordered, "pole times not ordered");

    // Pole-time formulas.
    double worst_pole = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double kp = dkap(rng);
        worst_pole = std::max(worst_pole, std::fabs(riccati_closed(0.0, -kp).pole_time().value() -
                                                    1.0 / kp));
        const double K = dkap(rng);
        const double s = std::sqrt(K);
        const double expected = std::atan2(1.0, kp / s) / s;
        worst_pole = std::max(
            worst_pole, std::fabs(riccati_closed(K, -kp).pole_time().value() - expected));
    }
    c.info("max pole formula deviation " + fmt(worst_pole));
    c.require(worst_pole <= 1e-10, "pole time off the closed formula by more than 1e-10");
    return c;
}

// ---- 7. determinism ----------------------------------------------------------
Criterion criterion7() {
    Criterion c;
    const auto tmp = std::filesystem::temp_directory_path() / "wlab_acceptance7";
    std::filesystem::remove_all(tmp);
    std::filesystem::create_directories(tmp);
    const auto cfg_path = tmp / "config.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"domain":{"kind":"disk","R":1},"beta":[0.1,1],"count":15})";
    }
    auto run = [&](const std::string& out_dir) {
        const std::string cmd = std::string(WLAB_CLI_PATH) + " verify --config " +
                                cfg_path.string() + " --out " + (tmp / out_dir).string() +
                                " > /dev/null";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    const int rc1 = run("a");
    const int rc2 = run("b");
    c.require(rc1 == 0 && rc2 == 0, "verify runs did not both exit 0");
    for (const char* name : {"verify.csv", "verdict.json"}) {
        std::ifstream fa(tmp / "a" / name, std::ios::binary);
        std::ifstream fb(tmp / "b" / name, std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        c.require(fa.good() && fb.good(), std::string(name) + " missing");
        c.require(sa.str() == sb.str(), std::string(name) + " differs between runs");
    }
    return c;
}

const char* kDescriptions[7] = {
    "closed-form spectra begin exactly as derived",
    "FEM disk convergence (<=1% at 64x256, order >= 1.5)",
    "theorem suite over {disk(1), disk(2), ball(3,1), annulus(1,2), ellipse(2,1)}",
    "Weyl slope fits within 5%",
    "integral identity residuals at quadrature accuracy",
    "riccati closed form vs RK4, comparison principle, pole formulas",
    "byte-identical verify reruns",
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    } else {
        for (int i = 1; i <= 7; ++i) selected.push_back(i);
    }

    Criterion (*runners[7])() = {criterion1, criterion2, criterion3, criterion4,
                                 criterion5, criterion6, criterion7};
    bool all_ok = true;
    for (int n : selected) {
        if (n < 1 || n > 7) {
            std::cerr << "unknown criterion " << n << "\n";
            return 2;
        }
        const Criterion c = runners[n - 1]();
        std::cout << (c.pass ? "PASS" : "FAIL") << " - criterion " << n << ": "
                  << kDescriptions[n - 1] << "\n";
        for (const auto& note : c.notes) std::cout << "       " << note << "\n";
        all_ok = all_ok && c.pass;
    }
    return all_ok ? 0 : 1;
}
