// Copyright 2026 The combsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMBSIM_CONFIG_H
#define COMBSIM_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combsim/analysis.h"
#include "combsim/combing.h"
#include "combsim/models.h"
#include "combsim/qaa.h"

namespace combsim {

struct OutputConfig {
    std::string csv;
    std::string json;
    int k_overlaps = 6;
};

struct EnsembleConfig {
    int members = 200;
    Sampler sampler = Sampler::Haar;
};

struct OptimizeConfig {
    int budget = 50;
    Objective objective = Objective::NegGsFidelity;
    int members = 1;  // initial states scored per sample
    std::optional<SearchSpace> space;  // unset: default_search_space of the problem
};

/// Everything a subcommand needs. Sections and keys mirror the INI file:
///
///   [model]       nt h b periodic
///   [comb]        nc nu0 tf kappa phi random_phis phi_seed
///   [interaction] g coupling coupling_seed
///   [run]         mode dt eta n_iters seed initial measure_last steps_per_iter threads
///   [qaa]         n_steps dt
///   [ensemble]    members sampler
///   [optimize]    budget objective members steps nu0 tf kappa g eta
///   [output]      csv json k
struct AppConfig {
    IsingParams ising;
    CombingConfig comb;
    QaaConfig qaa;
    EnsembleConfig ensemble;
    OptimizeConfig optimize;
    OutputConfig output;
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

/// `section.key` -> value overrides, applied on top of the file.
using ConfigOverrides = std::map<std::string, std::string>;

/// Loads `path` (may be empty for defaults only), applies overrides and validates. Throws ConfigError.
AppConfig parse_config(const std::string &path, const ConfigOverrides &overrides = {});
AppConfig parse_config_text(const std::string &text, const ConfigOverrides &overrides = {});

/// INI text that parses back to `cfg`.
std::string render_config(const AppConfig &cfg);

/// Every known `section.key` with its default, for help output.
std::vector<std::pair<std::string, std::string>> config_defaults();

std::string coupling_name(const CouplingMode &m);
std::string initial_name(const InitialState &s);

}  // namespace combsim

#endif
