#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlab/closed_form.hpp"

namespace wlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A run is one JSON document; command-line flags override individual fields.
// Refinement levels are n_radial values with n_angular = 4 * n_radial.
struct RunConfig {
    std::vector<DomainSpec> domains;
    std::vector<double> betas{1.0};
    int count = 20;
    std::vector<int> refine;
    int quad_radial = 32;
    int quad_angular = 64;
    double cert_tol = 1e-9;
    double identity_threshold = 1e-9;
    std::string out_dir = "out";
    std::string spectra_csv;  // verify an external spectrum CSV instead of computing
    bool header = false;      // prepend a generated-at comment line to CSV outputs
    unsigned long seed = 0;   // reserved

    void validate() const;  // throws ConfigError
};

RunConfig parse_config(const std::string& json_text);  // throws ConfigError

// Exit-code contract: 0 all pass, 1 mathematical violation, 2 usage/config
// error (the CLI maps thrown ConfigError/parse errors to 2).
struct CommandOutput {
    int exit_code = 0;
    std::vector<std::pair<std::string, std::string>> files;  // filename -> content
    std::string summary;                                     // one line for stdout
};

CommandOutput cmd_spectra(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);
CommandOutput cmd_weyl(const RunConfig& config);
CommandOutput cmd_identity(const RunConfig& config);
CommandOutput cmd_mesh_generate(const RunConfig& config);
CommandOutput cmd_mesh_validate(const std::string& mesh_text);

// Write every (filename, content) pair into out_dir, creating it if needed.
void write_outputs(const CommandOutput& out, const std::string& out_dir);

}  // namespace wlab
