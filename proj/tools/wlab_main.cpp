// Command-line front end: spectra | verify | weyl | identity | mesh.
// Exit codes: 0 all pass, 1 mathematical violation, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlab/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw wlab::ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

struct Flags {
    std::string config_path;
    std::string out_dir;
    std::string beta_list;
    std::string refine_list;
    int count = -1;
    double tol = -1.0;
    unsigned long seed = 0;
    bool seed_set = false;
};

void add_common_flags(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON run configuration");
    cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
    cmd->add_option("--beta", flags.beta_list, "comma-separated beta list (overrides config)");
    cmd->add_option("--count", flags.count, "eigenvalue count (overrides config)");
    cmd->add_option("--refine", flags.refine_list,
                    "comma-separated mesh levels n_radial (overrides config)");
    cmd->add_option("--tol", flags.tol,
                    "certification / identity tolerance (overrides config)");
    cmd->add_option("--seed", flags.seed, "reserved")->each([&flags](const std::string&) {
        flags.seed_set = true;
    });
}

wlab::RunConfig build_config(const Flags& flags) {
    wlab::RunConfig config;
    if (!flags.config_path.empty()) config = wlab::parse_config(read_file(flags.config_path));
    if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
    if (!flags.beta_list.empty()) config.betas = parse_double_list(flags.beta_list);
    if (!flags.refine_list.empty()) config.refine = parse_int_list(flags.refine_list);
    if (flags.count > 0) config.count = flags.count;
    if (flags.tol >= 0.0) {
        config.cert_tol = flags.tol;
        config.identity_threshold = flags.tol;
    }
    if (flags.seed_set) config.seed = flags.seed;
    config.validate();
    return config;
}

int run(const wlab::CommandOutput& out, const std::string& out_dir) {
    wlab::write_outputs(out, out_dir);
    std::cout << out.summary << '\n';
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steklov / Wentzel spectrum laboratory"};
    app.require_subcommand(1);

    Flags flags;
    std::string mesh_input;

    CLI::App* spectra = app.add_subcommand("spectra", "eigenvalue tables (closed form and FEM)");
    CLI::App* verify = app.add_subcommand("verify", "check the eigenvalue inequalities");
    CLI::App* weyl = app.add_subcommand("weyl", "asymptotic slope fits and log-log plot");
    CLI::App* identity = app.add_subcommand("identity", "integral-identity residual suite");
    CLI::App* mesh = app.add_subcommand("mesh", "emit or validate the mesh text format");
    for (CLI::App* cmd : {spectra, verify, weyl, identity, mesh}) add_common_flags(cmd, flags);
    mesh->add_option("input", mesh_input, "mesh file to validate (omit to generate)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (mesh->parsed() && !mesh_input.empty()) {
            const wlab::CommandOutput out = wlab::cmd_mesh_validate(read_file(mesh_input));
            std::cout << out.summary << '\n';
            return out.exit_code;
        }
        const wlab::RunConfig config = build_config(flags);
        if (spectra->parsed()) return run(wlab::cmd_spectra(config), config.out_dir);
        if (verify->parsed()) return run(wlab::cmd_verify(config), config.out_dir);
        if (weyl->parsed()) return run(wlab::cmd_weyl(config), config.out_dir);
        if (identity->parsed()) return run(wlab::cmd_identity(config), config.out_dir);
        if (mesh->parsed()) return run(wlab::cmd_mesh_generate(config), config.out_dir);
    } catch (const wlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
