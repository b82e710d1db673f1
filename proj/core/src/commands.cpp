#include "wlab/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wlab/fem.hpp"
#include "wlab/identities.hpp"
#include "wlab/numfmt.hpp"
#include "wlab/report.hpp"

namespace wlab {

namespace {

using nlohmann::ordered_json;

// Comma-free so the label can sit in a CSV cell.
std::string domain_label(const DomainSpec& d) {
    std::ostringstream os;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DiskSpec>) os << "disk(" << format_double(s.R) << ")";
            else if constexpr (std::is_same_v<T, BallSpec>)
                os << "ball(" << s.n << ":" << format_double(s.R) << ")";
            else if constexpr (std::is_same_v<T, AnnulusSpec>)
                os << "annulus(" << format_double(s.R_in) << ":" << format_double(s.R_out) << ")";
            else if constexpr (std::is_same_v<T, EllipseSpec>)
                os << "ellipse(" << format_double(s.a) << ":" << format_double(s.b) << ")";
            else
                os << "star(" << format_double(s.R) << ":" << format_double(s.eps) << ":" << s.m
                   << ")";
        },
        d);
    return os.str();
}

bool is_planar(const DomainSpec& d) { return !std::holds_alternative<BallSpec>(d); }

DomainSpec parse_domain(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("domain: expected an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "disk") return DiskSpec{j.value("R", 1.0)};
        if (kind == "ball") return BallSpec{j.value("n", 3), j.value("R", 1.0)};
        if (kind == "annulus") return AnnulusSpec{j.value("R_in", 1.0), j.value("R_out", 2.0)};
        if (kind == "ellipse") return EllipseSpec{j.value("a", 2.0), j.value("b", 1.0)};
        if (kind == "star")
            return StarSpec{j.value("R", 1.0), j.value("eps", 0.1), j.value("m", 5)};
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("domain: ") + e.what());
    }
    throw ConfigError("domain: unknown kind \"" + kind + "\"");
}

std::string maybe_header(const RunConfig& config) {
    if (!config.header) return {};
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return std::string("# generated ") + buf + "\n";
}

// Spectrum plus provenance for one (domain, beta) cell. FEM results are cached
// per domain so beta sweeps reuse the DtN matrix.
struct FemCache {
    std::map<std::string, std::pair<DtNSystem, Eigen::MatrixXd>> by_domain;

    const std::pair<DtNSystem, Eigen::MatrixXd>& get(const DomainSpec& d, int n_radial) {
        const std::string key = domain_label(d) + "@" + std::to_string(n_radial);
        auto it = by_domain.find(key);
        if (it == by_domain.end()) {
            const Mesh mesh = gen_polar_mesh(d, n_radial, 4 * n_radial);
            DtNSystem sys = assemble(mesh);
            Eigen::MatrixXd N = dtn_matrix(sys);
            it = by_domain.emplace(key, std::make_pair(std::move(sys), std::move(N))).first;
        }
        return it->second;
    }
};

SpectrumTriple spectra_for(const DomainSpec& d, double beta, const RunConfig& config,
                           FemCache& cache, std::string* source) {
    if (has_closed_form(d)) {
        if (source) *source = "closed_form";
        return closed_form_spectra(d, beta, config.count);
    }
    if (config.refine.empty())
        throw ConfigError("domain " + domain_label(d) +
                          " has no closed form; set refine levels for the FEM route");
    if (source) *source = "fem";
    const auto& [sys, N] = cache.get(d, config.refine.back());
    if (config.count > sys.boundary_size())
        throw ConfigError("count exceeds boundary size of the FEM mesh for " + domain_label(d));
    return fem_spectrum_triple_with(N, sys, beta, config.count);
}

std::string fmt_or_na(const BoundCheck& c, bool slack) {
    if (!c.applicable) return "n/a";
    return format_double(slack ? c.slack : c.value);
}

}  // namespace

void RunConfig::validate() const {
    for (double b : betas)
        if (b < 0.0) throw ConfigError("beta entries must be >= 0");
    if (betas.empty()) throw ConfigError("beta list must not be empty");
    if (count < 1) throw ConfigError("count must be >= 1");
    for (size_t i = 1; i < refine.size(); ++i)
        if (refine[i] <= refine[i - 1]) throw ConfigError("refine levels must be ascending");
    for (int r : refine)
        if (r < 2) throw ConfigError("refine levels must be >= 2");
    if (quad_radial < 2 || quad_angular < 4) throw ConfigError("quadrature orders too small");
    if (!(cert_tol >= 0.0)) throw ConfigError("tol must be >= 0");
    for (const auto& d : domains) {
        try {
            validate_domain(d);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

RunConfig parse_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse: ") + e.what());
    }
    RunConfig c;
    try {
        if (j.contains("domain")) c.domains.push_back(parse_domain(j.at("domain")));
        if (j.contains("domains"))
            for (const auto& d : j.at("domains")) c.domains.push_back(parse_domain(d));
        if (j.contains("beta")) {
            c.betas.clear();
            if (j.at("beta").is_array())
                for (const auto& b : j.at("beta")) c.betas.push_back(b.get<double>());
            else
                c.betas.push_back(j.at("beta").get<double>());
        }
        c.count = j.value("count", c.count);
        if (j.contains("refine"))
            for (const auto& r : j.at("refine")) c.refine.push_back(r.get<int>());
        if (j.contains("quadrature")) {
            c.quad_radial = j.at("quadrature").value("radial", c.quad_radial);
            c.quad_angular = j.at("quadrature").value("angular", c.quad_angular);
        }
        c.cert_tol = j.value("tol", c.cert_tol);
        c.identity_threshold = j.value("identity_threshold", c.identity_threshold);
        c.out_dir = j.value("out", c.out_dir);
        c.spectra_csv = j.value("spectra_csv", c.spectra_csv);
        c.header = j.value("header", c.header);
        c.seed = j.value("seed", c.seed);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

CommandOutput cmd_spectra(const RunConfig& config) {
    config.validate();
    if (config.domains.empty()) throw ConfigError("spectra: no domain configured");
    FemCache cache;
    std::ostringstream csv;
    csv << maybe_header(config);
    csv << "domain,beta,k,lambda_S,eta,lambda_W,source\n";
    for (const auto& d : config.domains) {
        for (double beta : config.betas) {
            std::vector<std::pair<std::string, SpectrumTriple>> rows;
            if (has_closed_form(d))
                rows.emplace_back("closed_form", closed_form_spectra(d, beta, config.count));
            if (is_planar(d) && !config.refine.empty()) {
                const auto& [sys, N] = cache.get(d, config.refine.back());
                if (config.count > sys.boundary_size())
                    throw ConfigError("count exceeds boundary size of the FEM mesh");
                rows.emplace_back("fem", fem_spectrum_triple_with(N, sys, beta, config.count));
            }
            if (rows.empty())
                throw ConfigError("domain " + domain_label(d) +
                                  ": no closed form and no refine levels");
            for (const auto& [src, triple] : rows) {
                for (size_t k = 0; k < triple.wentzel.size(); ++k) {
                    csv << domain_label(d) << ',' << format_double(beta) << ',' << k << ','
                        << format_double(triple.steklov[k]) << ',' << format_double(triple.eta[k])
                        << ',' << format_double(triple.wentzel[k]) << ',' << src << '\n';
                }
            }
        }
    }
    CommandOutput out;
    out.files.emplace_back("spectra.csv", csv.str());
    // Grouped view of the first cell for the console line.
    std::ostringstream summary;
    summary << "spectra: wrote spectra.csv";
    if (!config.domains.empty()) {
        const auto& d0 = config.domains.front();
        if (has_closed_form(d0)) {
            const auto groups = group_spectrum(
                closed_form_spectra(d0, config.betas.front(), config.count).wentzel);
            summary << " (" << domain_label(d0) << " beta=" << format_double(config.betas.front())
                    << " wentzel:";
            for (size_t i = 0; i < groups.size() && i < 6; ++i)
                summary << ' ' << format_double(groups[i].value) << 'x'
                        << groups[i].multiplicity;
            if (groups.size() > 6) summary << " ...";
            summary << ')';
        }
    }
    out.summary = summary.str();
    return out;
}

namespace {

SpectrumTriple parse_spectra_csv(const std::string& text, double beta) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("spectra_csv: empty file");
    while (!line.empty() && line[0] == '#')
        if (!std::getline(in, line)) throw ConfigError("spectra_csv: empty file");
    if (line.rfind("k,lambda_S,eta,lambda_W", 0) != 0)
        throw ConfigError("spectra_csv: expected header \"k,lambda_S,eta,lambda_W\"");
    SpectrumTriple t;
    t.beta = beta;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        double vals[4];
        for (double& val : vals) {
            if (!std::getline(ls, cell, ',')) throw ConfigError("spectra_csv: short row");
            try {
                val = std::stod(cell);
            } catch (const std::exception&) {
                throw ConfigError("spectra_csv: bad number \"" + cell + "\"");
            }
        }
        t.steklov.push_back(vals[1]);
        t.eta.push_back(vals[2]);
        t.wentzel.push_back(vals[3]);
    }
    if (t.steklov.empty()) throw ConfigError("spectra_csv: no rows");
    return t;
}

}  // namespace

CommandOutput cmd_verify(const RunConfig& config) {
    config.validate();
    if (config.domains.empty()) throw ConfigError("verify: no domain configured");
    FemCache cache;
    std::ostringstream csv;
    csv << maybe_header(config);
    csv << "domain,beta,k,lambda_w,lower,lower_slack,lower_pass,bound1,bound1_slack,bound1_pass,"
           "bound2,bound2_slack,bound2_pass,bound3,bound3_slack,bound3_pass\n";
    ordered_json verdict;
    verdict["pass"] = true;
    verdict["violations"] = ordered_json::array();

    const bool external = !config.spectra_csv.empty();
    if (external && (config.domains.size() != 1 || config.betas.size() != 1))
        throw ConfigError("verify: spectra_csv mode needs exactly one domain and one beta");

    for (const auto& d : config.domains) {
        const GeometryBounds g = geometry_of(d);
        for (double beta : config.betas) {
            SpectrumTriple triple;
            if (external) {
                std::ifstream f(config.spectra_csv);
                if (!f) throw ConfigError("verify: cannot open " + config.spectra_csv);
                std::ostringstream buf;
                buf << f.rdbuf();
                triple = parse_spectra_csv(buf.str(), beta);
            } else {
                triple = spectra_for(d, beta, config, cache, nullptr);
            }
            const auto reports = verify(triple, g, config.cert_tol);
            for (const auto& r : reports) {
                csv << domain_label(d) << ',' << format_double(beta) << ',' << r.k << ','
                    << format_double(r.lambda_w) << ',' << format_double(r.lower.value) << ','
                    << format_double(r.lower.slack) << ',' << (r.lower.pass ? "1" : "0") << ','
                    << fmt_or_na(r.thm1, false) << ',' << fmt_or_na(r.thm1, true) << ','
                    << (r.thm1.applicable ? (r.thm1.pass ? "1" : "0") : "n/a") << ','
                    << fmt_or_na(r.thm2, false) << ',' << fmt_or_na(r.thm2, true) << ','
                    << (r.thm2.applicable ? (r.thm2.pass ? "1" : "0") : "n/a") << ','
                    << fmt_or_na(r.thm3, false) << ',' << fmt_or_na(r.thm3, true) << ','
                    << (r.thm3.applicable ? (r.thm3.pass ? "1" : "0") : "n/a") << '\n';
                auto add_violation = [&](const char* name, double lhs, double rhs) {
                    ordered_json v;
                    v["domain"] = domain_label(d);
                    v["beta"] = beta;
                    v["k"] = r.k;
                    v["inequality"] = name;
                    v["lhs"] = lhs;
                    v["rhs"] = rhs;
                    verdict["violations"].push_back(v);
                    verdict["pass"] = false;
                };
                if (r.lower.applicable && !r.lower.pass)
                    add_violation("lower", r.lower.value, r.lambda_w);
                if (r.thm1.applicable && !r.thm1.pass)
                    add_violation("thm1", r.lambda_w, r.thm1.value);
                if (r.thm2.applicable && !r.thm2.pass)
                    add_violation("thm2", r.lambda_w, r.thm2.value);
                if (r.thm3.applicable && !r.thm3.pass)
                    add_violation("thm3", r.lambda_w, r.thm3.value);
            }
        }
    }

    CommandOutput out;
    out.files.emplace_back("verify.csv", csv.str());
    out.files.emplace_back("verdict.json", verdict.dump(2) + "\n");
    const bool pass = verdict["pass"].get<bool>();
    out.exit_code = pass ? 0 : 1;
    out.summary = pass ? "verify: all applicable inequalities hold"
                       : "verify: VIOLATIONS, first: " +
                             verdict["violations"][0]["inequality"].get<std::string>() + " at " +
                             verdict["violations"][0]["domain"].get<std::string>() + " k=" +
                             std::to_string(verdict["violations"][0]["k"].get<int>());
    return out;
}

CommandOutput cmd_weyl(const RunConfig& config) {
    config.validate();
    if (config.domains.empty()) throw ConfigError("weyl: no domain configured");
    if (config.count < 40) throw ConfigError("weyl: count must be >= 40 for a slope fit");
    FemCache cache;

    std::ostringstream csv;
    csv << maybe_header(config);
    csv << "domain,beta,k,x_steklov,lambda_S,weyl_S,x_wentzel,lambda_W,weyl_W\n";
    ordered_json summary = ordered_json::array();
    std::vector<PlotSeries> series;

    for (const auto& d : config.domains) {
        const int n = domain_dim(d);
        const double vol = boundary_volume(d);
        const double cn = weyl_constant(n, vol);
        ordered_json dom_summary;
        dom_summary["domain"] = domain_label(d);
        dom_summary["C_n"] = cn;
        ordered_json wentzel_fits = ordered_json::array();

        for (size_t bi = 0; bi < config.betas.size(); ++bi) {
            const double beta = config.betas[bi];
            const SpectrumTriple triple = spectra_for(d, beta, config, cache, nullptr);
            std::vector<double> xs, ys, xw, yw;
            for (int k = config.count / 2; k < config.count; ++k) {
                xs.push_back(std::pow(double(k), 1.0 / (n - 1)));
                ys.push_back(triple.steklov[k]);
                xw.push_back(std::pow(double(k), 2.0 / (n - 1)));
                yw.push_back(triple.wentzel[k]);
            }
            const LineFit fs = fit_line(xs, ys);
            const LineFit fw = fit_line(xw, yw);
            if (bi == 0) {
                dom_summary["steklov_slope"] = fs.slope;
                dom_summary["steklov_predicted"] = cn;
            }
            ordered_json wf;
            wf["beta"] = beta;
            wf["slope"] = fw.slope;
            wf["predicted"] = beta * cn * cn;
            wentzel_fits.push_back(wf);

            PlotSeries data, pred;
            data.label = domain_label(d) + " lambda_W beta=" + format_double(beta);
            data.color = "#1f77b4";
            data.markers = true;
            pred.label = "prediction beta*C_n^2*k^{2/(n-1)}";
            pred.color = "#d62728";
            for (int k = 1; k < config.count; ++k) {
                data.x.push_back(k);
                data.y.push_back(triple.wentzel[k]);
                pred.x.push_back(k);
                pred.y.push_back(weyl_predict(WeylKind::wentzel, n, vol, k, beta));
                csv << domain_label(d) << ',' << format_double(beta) << ',' << k << ','
                    << format_double(std::pow(double(k), 1.0 / (n - 1))) << ','
                    << format_double(triple.steklov[k]) << ','
                    << format_double(weyl_predict(WeylKind::steklov, n, vol, k, beta)) << ','
                    << format_double(std::pow(double(k), 2.0 / (n - 1))) << ','
                    << format_double(triple.wentzel[k]) << ','
                    << format_double(weyl_predict(WeylKind::wentzel, n, vol, k, beta)) << '\n';
            }
            if (series.size() < 6) {
                series.push_back(std::move(data));
                series.push_back(std::move(pred));
            }
        }
        dom_summary["wentzel"] = wentzel_fits;
        summary.push_back(dom_summary);
    }

    CommandOutput out;
    out.files.emplace_back("weyl.csv", csv.str());
    out.files.emplace_back("weyl.svg",
                           svg_loglog_plot("eigenvalue growth vs prediction", "k", "lambda",
                                           series));
    out.files.emplace_back("weyl_summary.json", summary.dump(2) + "\n");
    out.summary = "weyl: wrote weyl.csv, weyl.svg, weyl_summary.json";
    return out;
}

CommandOutput cmd_identity(const RunConfig& config) {
    config.validate();
    const double disk_R = 1.0;
    std::ostringstream csv;
    csv << maybe_header(config);
    csv << "identity,domain,parameter,residual,quad\n";
    double max_residual = 0.0;
    const std::string quad_tag =
        std::to_string(config.quad_radial) + "x" + std::to_string(config.quad_angular);

    auto row = [&](const std::string& id, const std::string& dom, const std::string& param,
                   double residual) {
        csv << id << ',' << dom << ',' << param << ',' << format_double(residual) << ','
            << quad_tag << '\n';
        max_residual = std::max(max_residual, residual);
    };

    for (int k = 0; k <= 8; ++k) {
        const Field2D u = harmonic_disk_mode(k);
        for (double h : {0.1, 0.3, 0.5}) {
            const IdentityResult res = poh_residual(disk_R, u, h, 1.0, config.quad_radial,
                                                    config.quad_angular);
            row("poh", "disk(1)", "k=" + std::to_string(k) + " h=" + format_double(h) + " beta=1",
                res.residual);
        }
    }
    for (const auto& f : reilly_catalog_disk()) {
        const IdentityResult res =
            reilly_residual_disk(disk_R, f, config.quad_radial, config.quad_angular);
        row("reilly", "disk(1)", f.name, res.residual);
    }
    for (const auto& f : reilly_catalog_ball()) {
        const IdentityResult res = reilly_residual_ball(1.0, f, config.quad_radial,
                                                        config.quad_radial, config.quad_angular);
        row("reilly", "ball(3:1)", f.name, res.residual);
    }
    for (double h : {0.25, 0.5, 0.75})
        row("hess_eta", "disk(1)", "h=" + format_double(h) + " samples=1000",
            hess_eta_polar_check(disk_R, h, 1000));
    for (const auto& F : divergence_catalog()) {
        row("div_thm", "disk(1)", F.name,
            divergence_theorem_oracle(0.0, disk_R, F, config.quad_radial, config.quad_angular)
                .residual);
        row("div_thm", "annulus(1:2)", F.name,
            divergence_theorem_oracle(1.0, 2.0, F, config.quad_radial, config.quad_angular)
                .residual);
    }

    CommandOutput out;
    out.files.emplace_back("identity.csv", csv.str());
    const bool pass = max_residual <= config.identity_threshold;
    out.exit_code = pass ? 0 : 1;
    out.summary = "identity: max residual " + format_double(max_residual) +
                  (pass ? " (pass)" : " EXCEEDS threshold " +
                                          format_double(config.identity_threshold));
    return out;
}

CommandOutput cmd_mesh_generate(const RunConfig& config) {
    config.validate();
    if (config.domains.empty()) throw ConfigError("mesh: no domain configured");
    if (config.refine.empty()) throw ConfigError("mesh: set at least one refine level");
    if (!is_planar(config.domains.front())) throw ConfigError("mesh: planar domains only");
    const int n_radial = config.refine.back();
    const Mesh m = gen_polar_mesh(config.domains.front(), n_radial, 4 * n_radial);
    CommandOutput out;
    out.files.emplace_back("mesh.txt", save_mesh(m));
    out.summary = "mesh: " + std::to_string(m.num_vertices()) + " vertices, " +
                  std::to_string(m.num_triangles()) + " triangles, " +
                  std::to_string(m.boundary_loops.size()) + " boundary loops";
    return out;
}

CommandOutput cmd_mesh_validate(const std::string& mesh_text) {
    CommandOutput out;
    try {
        const Mesh m = load_mesh(mesh_text);
        out.summary = "mesh ok: " + std::to_string(m.num_vertices()) + " vertices, " +
                      std::to_string(m.num_triangles()) + " triangles, " +
                      std::to_string(m.boundary_loops.size()) + " boundary loops";
    } catch (const MeshError& e) {
        out.exit_code = 2;
        out.summary = std::string("mesh invalid: ") + e.what();
    }
    return out;
}

void write_outputs(const CommandOutput& out, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, content] : out.files) {
        std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + name + " in " + out_dir);
        f << content;
    }
}

}  // namespace wlab
