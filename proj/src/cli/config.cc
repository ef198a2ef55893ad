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

#include "combsim/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "combsim/errors.h"
#include "combsim/io.h"

namespace combsim {

namespace pt = boost::property_tree;

namespace {

const std::vector<std::pair<std::string, std::string>> kDefaults = {
    {"model.nt", "3"},
    {"model.h", "1"},
    {"model.b", "0"},
    {"model.periodic", "true"},
    {"comb.nc", "3"},
    {"comb.nu0", "4"},
    {"comb.tf", "50"},
    {"comb.kappa", "0.05"},
    {"comb.phi", "1"},
    {"comb.random_phis", "false"},
    {"comb.phi_seed", "0"},
    {"interaction.g", "0.2"},
    {"interaction.coupling", "one_body_x"},
    {"interaction.coupling_seed", "0"},
    {"run.mode", "emulate"},
    {"run.dt", "0.1"},
    {"run.eta", "0.5"},
    {"run.n_iters", "1"},
    {"run.seed", "(entropy, printed)"},
    {"run.initial", "random"},
    {"run.measure_last", "false"},
    {"run.steps_per_iter", "(tf / dt each)"},
    {"run.threads", "0"},
    {"qaa.n_steps", "100"},
    {"qaa.dt", "0.1"},
    {"ensemble.members", "200"},
    {"ensemble.sampler", "haar"},
    {"optimize.budget", "50"},
    {"optimize.objective", "neg_gs_fidelity"},
    {"optimize.members", "1"},
    {"optimize.steps", "100"},
    {"optimize.nu0", "(0.5,4 x spectral norm,log)"},
    {"optimize.tf", "5,100,log"},
    {"optimize.kappa", "0.01,0.5,log"},
    {"optimize.g", "0.01,1,log"},
    {"optimize.eta", "0.3,0.9,lin"},
    {"output.csv", ""},
    {"output.json", ""},
    {"output.k", "6"},
};

class Reader {
   public:
    explicit Reader(const pt::ptree &tree) : tree_(tree) {
    }

    std::optional<std::string> raw(const std::string &key) const {
        auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '.'));
        if (!v) {
            return std::nullopt;
        }
        used_.insert(key);
        return *v;
    }

    double real(const std::string &key, double fallback) const {
        auto v = raw(key);
        if (!v) {
            return fallback;
        }
        try {
            std::size_t used = 0;
            const double x = std::stod(*v, &used);
            if (used == v->size()) {
                return x;
            }
        } catch (const std::exception &) {
        }
        throw ConfigError(key, "expected a number, got '" + *v + "'");
    }

    long long integer(const std::string &key, long long fallback) const {
        auto v = raw(key);
        if (!v) {
            return fallback;
        }
        try {
            std::size_t used = 0;
            const long long x = std::stoll(*v, &used);
            if (used == v->size()) {
                return x;
            }
        } catch (const std::exception &) {
        }
        throw ConfigError(key, "expected an integer, got '" + *v + "'");
    }

    std::uint64_t u64(const std::string &key, std::uint64_t fallback) const {
        auto v = raw(key);
        if (!v) {
            return fallback;
        }
        try {
            std::size_t used = 0;
            const auto x = std::stoull(*v, &used);
            if (used == v->size() && v->front() != '-') {
                return x;
            }
        } catch (const std::exception &) {
        }
        throw ConfigError(key, "expected a non-negative integer, got '" + *v + "'");
    }

    bool boolean(const std::string &key, bool fallback) const {
        auto v = raw(key);
        if (!v) {
            return fallback;
        }
        if (*v == "true" || *v == "1" || *v == "yes") {
            return true;
        }
        if (*v == "false" || *v == "0" || *v == "no") {
            return false;
        }
        throw ConfigError(key, "expected true or false, got '" + *v + "'");
    }

    std::string text(const std::string &key, const std::string &fallback) const {
        return raw(key).value_or(fallback);
    }

    void reject_unknown() const {
        std::set<std::string> known;
        for (const auto &[k, v] : kDefaults) {
            known.insert(k);
        }
        for (const auto &[section, body] : tree_) {
            if (body.empty()) {
                throw ConfigError(section, "keys must live in a [section]");
            }
            for (const auto &[key, value] : body) {
                const std::string full = section + "." + key;
                if (!known.count(full)) {
                    throw ConfigError(full, "unknown setting");
                }
            }
        }
    }

   private:
    const pt::ptree &tree_;
    mutable std::set<std::string> used_;
};

ParamRange parse_range(const Reader &r, const std::string &key, ParamRange fallback) {
    auto v = r.raw(key);
    if (!v) {
        return fallback;
    }
    std::vector<std::string> parts;
    std::stringstream ss(*v);
    std::string part;
    while (std::getline(ss, part, ',')) {
        parts.push_back(part);
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw ConfigError(key, "expected lo,hi[,log|lin]");
    }
    ParamRange out;
    try {
        out.lo = std::stod(parts[0]);
        out.hi = std::stod(parts[1]);
    } catch (const std::exception &) {
        throw ConfigError(key, "bounds must be numbers");
    }
    out.log = fallback.log;
    if (parts.size() == 3) {
        if (parts[2] != "log" && parts[2] != "lin") {
            throw ConfigError(key, "scale must be log or lin");
        }
        out.log = parts[2] == "log";
    }
    if (!(out.lo <= out.hi)) {
        throw ConfigError(key, "lower bound exceeds upper bound");
    }
    return out;
}

CouplingMode parse_coupling(const std::string &name, std::uint64_t seed) {
    if (name == "one_body_x") {
        return CouplingMode::one_body_x();
    }
    if (name == "random_pattern") {
        return CouplingMode::random_pattern(seed);
    }
    throw ConfigError("interaction.coupling", "expected one_body_x or random_pattern, got '" + name + "'");
}

Mode parse_mode(const std::string &key, const std::string &name) {
    if (name == "emulate") {
        return Mode::Emulate;
    }
    if (name == "circuit") {
        return Mode::Circuit;
    }
    throw ConfigError(key, "expected emulate or circuit, got '" + name + "'");
}

InitialState parse_initial(const std::string &name) {
    if (name == "random") {
        return {InitialState::Kind::Random, 0};
    }
    if (name == "ground_b_plus_1") {
        return {InitialState::Kind::GroundStateOfBPlus1, 0};
    }
    if (name.rfind("basis:", 0) == 0) {
        try {
            return {InitialState::Kind::BasisState, std::stoull(name.substr(6))};
        } catch (const std::exception &) {
        }
    }
    throw ConfigError("run.initial", "expected random, basis:<index> or ground_b_plus_1, got '" + name + "'");
}

std::vector<int> parse_steps(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception &) {
            throw ConfigError("run.steps_per_iter", "expected comma-separated integers");
        }
    }
    return out;
}

AppConfig from_tree(pt::ptree tree, const ConfigOverrides &overrides) {
    for (const auto &[key, value] : overrides) {
        if (key.find('.') == std::string::npos) {
            throw ConfigError(key, "override keys take the form section.key");
        }
        tree.put(pt::ptree::path_type(key, '.'), value);
    }
    const Reader r(tree);
    r.reject_unknown();

    AppConfig cfg;
    cfg.ising.nt = static_cast<int>(r.integer("model.nt", 3));
    cfg.ising.h = r.real("model.h", 1.0);
    cfg.ising.b = r.real("model.b", 0.0);
    cfg.ising.periodic = r.boolean("model.periodic", true);
    if (cfg.ising.nt < 1 || cfg.ising.nt > 7) {
        throw ConfigError("model.nt", "must lie in [1, 7]");
    }

    CombingConfig &c = cfg.comb;
    c.nc = static_cast<int>(r.integer("comb.nc", 3));
    c.nu0 = r.real("comb.nu0", 4.0);
    c.tf = r.real("comb.tf", 50.0);
    c.kappa = r.real("comb.kappa", 0.05);
    c.phi = r.real("comb.phi", 1.0);
    c.random_phis = r.boolean("comb.random_phis", false);
    c.phi_seed = r.u64("comb.phi_seed", 0);
    c.g = r.real("interaction.g", 0.2);
    c.coupling = parse_coupling(r.text("interaction.coupling", "one_body_x"), r.u64("interaction.coupling_seed", 0));
    c.mode = parse_mode("run.mode", r.text("run.mode", "emulate"));
    c.dt = r.real("run.dt", 0.1);
    c.eta = r.real("run.eta", 0.5);
    c.n_iters = static_cast<int>(r.integer("run.n_iters", 1));
    if (auto s = r.raw("run.seed")) {
        cfg.seed = r.u64("run.seed", 0);
        c.seed = *cfg.seed;
    }
    c.initial = parse_initial(r.text("run.initial", "random"));
    c.measure_last = r.boolean("run.measure_last", false);
    if (auto s = r.raw("run.steps_per_iter")) {
        c.steps_per_iter = parse_steps(*s);
    }
    cfg.threads = static_cast<int>(r.integer("run.threads", 0));
    if (cfg.threads < 0) {
        throw ConfigError("run.threads", "must be non-negative");
    }
    if (c.nc < 2 || cfg.ising.nt + c.nc > 10) {
        throw ConfigError("comb.nc", "needs nc >= 2 and nt + nc <= 10");
    }
    if (c.initial.kind == InitialState::Kind::BasisState && c.initial.index >= (std::size_t{1} << cfg.ising.nt)) {
        throw ConfigError("run.initial", "basis index outside the target register");
    }
    c.validate();

    cfg.qaa.ising = cfg.ising;
    cfg.qaa.n_steps = r.integer("qaa.n_steps", 100);
    cfg.qaa.dt = r.real("qaa.dt", kQaaDt);
    cfg.qaa.mode = c.mode;
    if (cfg.qaa.n_steps < 1) {
        throw ConfigError("qaa.n_steps", "must be at least 1");
    }
    if (!(cfg.qaa.dt > 0)) {
        throw ConfigError("qaa.dt", "must be positive");
    }

    cfg.ensemble.members = static_cast<int>(r.integer("ensemble.members", 200));
    const std::string sampler = r.text("ensemble.sampler", "haar");
    if (sampler != "haar" && sampler != "basis") {
        throw ConfigError("ensemble.sampler", "expected haar or basis");
    }
    cfg.ensemble.sampler = sampler == "haar" ? Sampler::Haar : Sampler::Basis;
    if (cfg.ensemble.members < 0) {
        throw ConfigError("ensemble.members", "must be non-negative");
    }

    cfg.optimize.budget = static_cast<int>(r.integer("optimize.budget", 50));
    const std::string objective = r.text("optimize.objective", "neg_gs_fidelity");
    if (objective != "neg_gs_fidelity" && objective != "final_energy") {
        throw ConfigError("optimize.objective", "expected final_energy or neg_gs_fidelity");
    }
    cfg.optimize.objective = objective == "final_energy" ? Objective::FinalEnergy : Objective::NegGsFidelity;
    cfg.optimize.members = static_cast<int>(r.integer("optimize.members", 1));
    const bool any_range = r.raw("optimize.steps") || r.raw("optimize.nu0") || r.raw("optimize.tf") ||
                           r.raw("optimize.kappa") || r.raw("optimize.g") || r.raw("optimize.eta");
    if (any_range) {
        SearchSpace s;
        s.steps = static_cast<int>(r.integer("optimize.steps", s.steps));
        s.nu0 = parse_range(r, "optimize.nu0", s.nu0);
        s.tf = parse_range(r, "optimize.tf", s.tf);
        s.kappa = parse_range(r, "optimize.kappa", s.kappa);
        s.g = parse_range(r, "optimize.g", s.g);
        s.eta = parse_range(r, "optimize.eta", s.eta);
        cfg.optimize.space = s;
    }
    if (cfg.optimize.budget < 1) {
        throw ConfigError("optimize.budget", "must be at least 1");
    }
    if (cfg.optimize.members < 1) {
        throw ConfigError("optimize.members", "must be at least 1");
    }

    cfg.output.csv = r.text("output.csv", "");
    cfg.output.json = r.text("output.json", "");
    cfg.output.k_overlaps = static_cast<int>(r.integer("output.k", 6));
    if (cfg.output.k_overlaps < 0 || cfg.output.k_overlaps > (1 << cfg.ising.nt)) {
        throw ConfigError("output.k", "must lie in [0, 2^nt]");
    }
    return cfg;
}

pt::ptree read_tree(std::istream &in, const std::string &name) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(name, e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    return tree;
}

std::string range_text(const ParamRange &r) {
    return format_double(r.lo) + "," + format_double(r.hi) + "," + (r.log ? "log" : "lin");
}

}  // namespace

AppConfig parse_config(const std::string &path, const ConfigOverrides &overrides) {
    if (path.empty()) {
        return from_tree({}, overrides);
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open " + path);
    }
    return from_tree(read_tree(in, path), overrides);
}

AppConfig parse_config_text(const std::string &text, const ConfigOverrides &overrides) {
    std::istringstream in(text);
    return from_tree(read_tree(in, "config"), overrides);
}

std::string coupling_name(const CouplingMode &m) {
    return m.kind == CouplingMode::Kind::OneBodyX ? "one_body_x" : "random_pattern";
}

std::string initial_name(const InitialState &s) {
    switch (s.kind) {
        case InitialState::Kind::Random:
            return "random";
        case InitialState::Kind::BasisState:
            return "basis:" + std::to_string(s.index);
        case InitialState::Kind::GroundStateOfBPlus1:
            return "ground_b_plus_1";
    }
    return "random";
}

std::string render_config(const AppConfig &cfg) {
    const CombingConfig &c = cfg.comb;
    std::ostringstream out;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "[model]\n"
        << "nt = " << cfg.ising.nt << "\nh = " << format_double(cfg.ising.h) << "\nb = " << format_double(cfg.ising.b)
        << "\nperiodic = " << b(cfg.ising.periodic) << "\n\n";
    out << "[comb]\n"
        << "nc = " << c.nc << "\nnu0 = " << format_double(c.nu0) << "\ntf = " << format_double(c.tf)
        << "\nkappa = " << format_double(c.kappa) << "\nphi = " << format_double(c.phi)
        << "\nrandom_phis = " << b(c.random_phis) << "\nphi_seed = " << c.phi_seed << "\n\n";
    out << "[interaction]\n"
        << "g = " << format_double(c.g) << "\ncoupling = " << coupling_name(c.coupling)
        << "\ncoupling_seed = " << c.coupling.seed << "\n\n";
    out << "[run]\n"
        << "mode = " << mode_name(c.mode) << "\ndt = " << format_double(c.dt) << "\neta = " << format_double(c.eta)
        << "\nn_iters = " << c.n_iters << "\n";
    if (cfg.seed) {
        out << "seed = " << *cfg.seed << "\n";
    }
    out << "initial = " << initial_name(c.initial) << "\nmeasure_last = " << b(c.measure_last) << "\n";
    if (!c.steps_per_iter.empty()) {
        out << "steps_per_iter = ";
        for (std::size_t i = 0; i < c.steps_per_iter.size(); ++i) {
            out << (i ? "," : "") << c.steps_per_iter[i];
        }
        out << "\n";
    }
    out << "threads = " << cfg.threads << "\n\n";
    out << "[qaa]\nn_steps = " << cfg.qaa.n_steps << "\ndt = " << format_double(cfg.qaa.dt) << "\n\n";
    out << "[ensemble]\nmembers = " << cfg.ensemble.members
        << "\nsampler = " << (cfg.ensemble.sampler == Sampler::Haar ? "haar" : "basis") << "\n\n";
    out << "[optimize]\nbudget = " << cfg.optimize.budget << "\nobjective = "
        << (cfg.optimize.objective == Objective::FinalEnergy ? "final_energy" : "neg_gs_fidelity")
        << "\nmembers = " << cfg.optimize.members << "\n";
    if (cfg.optimize.space) {
        const auto &s = *cfg.optimize.space;
        out << "steps = " << s.steps << "\nnu0 = " << range_text(s.nu0) << "\ntf = " << range_text(s.tf)
            << "\nkappa = " << range_text(s.kappa) << "\ng = " << range_text(s.g) << "\neta = " << range_text(s.eta)
            << "\n";
    }
    out << "\n[output]\nk = " << cfg.output.k_overlaps << "\n";
    if (!cfg.output.csv.empty()) {
        out << "csv = " << cfg.output.csv << "\n";
    }
    if (!cfg.output.json.empty()) {
        out << "json = " << cfg.output.json << "\n";
    }
    return out.str();
}

std::vector<std::pair<std::string, std::string>> config_defaults() {
    return kDefaults;
}

}  // namespace combsim
