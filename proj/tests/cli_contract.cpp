// Exit-code contract of the command-line tool: 0 all pass, 1 violation,
// 2 usage/config error, and no crash on malformed input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(WLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

int failures = 0;

void expect(int got, int want, const std::string& what) {
    if (got != want) {
        std::cerr << "FAIL: " << what << " -> exit " << got << ", expected " << want << "\n";
        ++failures;
    }
}

}  // namespace

int main() {
    const auto tmp = std::filesystem::temp_directory_path() / "wlab_cli_contract";
    std::filesystem::remove_all(tmp);
    std::filesystem::create_directories(tmp);
    const std::string out = " --out " + (tmp / "out").string();

    const auto disk_cfg = tmp / "disk.json";
    std::ofstream(disk_cfg) << R"({"domain":{"kind":"disk","R":1},"beta":[1],"count":10})";
    const auto annulus_cfg = tmp / "annulus.json";
    std::ofstream(annulus_cfg)
        << R"({"domain":{"kind":"annulus","R_in":1,"R_out":2},"beta":[1],"count":21})";
    const auto broken_cfg = tmp / "broken.json";
    std::ofstream(broken_cfg) << "{not json";
    const auto bad_domain_cfg = tmp / "bad_domain.json";
    std::ofstream(bad_domain_cfg) << R"({"domain":{"kind":"moebius"}})";

    expect(run("verify --config " + disk_cfg.string() + out), 0, "disk verify");
    expect(run("verify --config " + annulus_cfg.string() + out), 1, "annulus verify (violations)");
    expect(run("spectra --config " + disk_cfg.string() + out), 0, "disk spectra");
    expect(run("identity --count 5" + out), 0, "identity default");
    expect(run("identity --tol 1e-15" + out), 1, "identity with impossible threshold");
    expect(run("weyl --config " + disk_cfg.string() + " --count 100" + out), 0, "weyl");

    expect(run("verify --config " + broken_cfg.string() + out), 2, "broken json");
    expect(run("verify --config " + bad_domain_cfg.string() + out), 2, "unknown domain kind");
    expect(run("verify --config /nonexistent.json" + out), 2, "missing config file");
    expect(run("weyl --config " + disk_cfg.string() + " --count 10" + out), 2,
           "weyl count too small");
    expect(run("spectra --config " + disk_cfg.string() + " --beta -1" + out), 2,
           "negative beta flag");
    expect(run("frobnicate"), 2, "unknown subcommand");
    expect(run("verify"), 2, "verify without any domain");

    // mesh: generate, validate, reject.
    const auto mesh_cfg = tmp / "mesh.json";
    std::ofstream(mesh_cfg)
        << R"({"domain":{"kind":"disk","R":1},"refine":[4],"out":")" + (tmp / "m").string() +
               R"("})";
    expect(run("mesh --config " + mesh_cfg.string()), 0, "mesh generate");
    expect(run("mesh " + (tmp / "m" / "mesh.txt").string()), 0, "mesh validate");
    const auto bad_mesh = tmp / "bad.txt";
    std::ofstream(bad_mesh) << "3 1\n0 0\n1 0\n0 1\n0 2 1\n";
    expect(run("mesh " + bad_mesh.string()), 2, "mesh validate clockwise");
    std::ofstream(bad_mesh) << "garbage";
    expect(run("mesh " + bad_mesh.string()), 2, "mesh validate garbage");

    if (failures == 0) std::cout << "cli contract: all exit codes as documented\n";
    return failures == 0 ? 0 : 1;
}
