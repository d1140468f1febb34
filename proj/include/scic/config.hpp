#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scic/optimizer.hpp"

namespace scic {

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A parsed run configuration: a scenario template plus the scan lists and
// output paths. Intensities may be pinned to skip the optimizer.
struct RunConfig {
    Scenario scenario;
    std::vector<double> lengths_km;
    std::vector<double> n_sents;
    std::optional<double> fixed_mu_k1;
    std::optional<double> fixed_mu_k2;
    std::string csv_path = "rates.csv";
    std::string plot_path;       // empty: no plot
    std::uint64_t seed = 1;      // used by the validation subcommand
};

/// Flat `section.key = value` text with '#' comments. Lists are either
/// comma separated or `start:stop:step` ranges. Unknown keys are errors.
RunConfig parse_config_text(const std::string& text);

RunConfig parse_config_file(const std::string& path);

/// The reference parameter set the shipped default config is generated
/// from.
RunConfig default_run_config();

} // namespace scic
