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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "combsim/analysis.h"
#include "combsim/circuits.h"
#include "combsim/combing.h"
#include "combsim/config.h"
#include "combsim/errors.h"
#include "combsim/io.h"
#include "combsim/parallel.h"
#include "combsim/qaa.h"

namespace {

using namespace combsim;

struct Common {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out;
    std::string json;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<int> nt;
    std::optional<double> h;
    std::optional<double> b;
    std::optional<int> nc;
    std::optional<std::string> mode;
};

void add_common(CLI::App *app, Common &c) {
    app->set_help_flag("--help", "Print this help message and exit");
    app->add_option("-c,--config", c.config_path, "INI config file");
    app->add_option("--set", c.sets, "Override a setting: section.key=value (repeatable)");
    app->add_option("-o,--out", c.out, "CSV output path");
    app->add_option("--json", c.json, "JSON output path");
    app->add_option("--seed", c.seed, "RNG seed; drawn from entropy and printed when omitted");
    app->add_option("--threads", c.threads, "Worker threads, 0 = auto (env COMBSIM_THREADS)");
    app->add_option("--nt", c.nt, "Target qubits");
    app->add_option("--h", c.h, "Transverse field");
    app->add_option("--b", c.b, "Longitudinal field");
    app->add_option("--nc", c.nc, "Comb qubits");
    app->add_option("--mode", c.mode, "emulate or circuit");
}

AppConfig load(const Common &c) {
    ConfigOverrides o;
    for (const auto &s : c.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(s, "expected section.key=value");
        }
        o[s.substr(0, eq)] = s.substr(eq + 1);
    }
    char buf[40];
    if (c.nt) {
        o["model.nt"] = std::to_string(*c.nt);
    }
    if (c.h) {
        std::snprintf(buf, sizeof buf, "%.17g", *c.h);
        o["model.h"] = buf;
    }
    if (c.b) {
        std::snprintf(buf, sizeof buf, "%.17g", *c.b);
        o["model.b"] = buf;
    }
    if (c.nc) {
        o["comb.nc"] = std::to_string(*c.nc);
    }
    if (c.mode) {
        o["run.mode"] = *c.mode;
    }
    if (c.seed) {
        o["run.seed"] = std::to_string(*c.seed);
    }
    if (c.threads) {
        o["run.threads"] = std::to_string(*c.threads);
    }
    if (!c.out.empty()) {
        o["output.csv"] = c.out;
    }
    if (!c.json.empty()) {
        o["output.json"] = c.json;
    }
    AppConfig cfg = parse_config(c.config_path, o);
    if (!cfg.seed) {
        cfg.seed = entropy_seed();
        std::cerr << "seed: " << *cfg.seed << "\n";
    }
    cfg.comb.seed = *cfg.seed;
    cfg.threads = resolve_threads(cfg.threads);
    return cfg;
}

Metadata metadata(const AppConfig &cfg, const std::string &command) {
    Metadata m;
    m.set("combsim_version", COMBSIM_VERSION);
    m.set("command", command);
    std::istringstream in(render_config(cfg));
    std::string line;
    std::string section;
    while (std::getline(in, line)) {
        if (line.size() > 2 && line.front() == '[') {
            section = line.substr(1, line.size() - 2);
        } else if (const auto eq = line.find(" = "); eq != std::string::npos) {
            m.set(section + "." + line.substr(0, eq), line.substr(eq + 3));
        }
    }
    return m;
}

CombingProblem make_problem(const AppConfig &cfg) {
    return CombingProblem(cfg.ising, cfg.comb.coupling, cfg.comb.nc);
}

int cmd_comb(const AppConfig &cfg) {
    const auto problem = make_problem(cfg);
    Rng rng = Rng(cfg.comb.seed).split(0);
    const StateVector start = make_initial_state(cfg.comb, problem, rng);
    const int k = cfg.output.k_overlaps;
    RunResult r;
    const auto rows = overlap_trajectory(cfg.comb, problem, start, k, &r);
    const auto meta = metadata(cfg, "comb");
    if (!cfg.output.csv.empty()) {
        write_trajectory_csv(cfg.output.csv, rows, k, meta);
    }
    if (!cfg.output.json.empty()) {
        write_trajectory_json(cfg.output.json, rows, meta);
    }
    std::printf("initial_fidelity %.17g\n", r.initial_fidelity);
    for (std::size_t i = 0; i < r.iterations.size(); ++i) {
        const auto &it = r.iterations[i];
        std::printf("iteration %zu", i);
        if (it.outcome) {
            std::printf(" outcome %llu", static_cast<unsigned long long>(it.outcome->packed()));
        }
        std::printf("\n");
    }
    std::printf("final_fidelity %.17g\nfinal_energy %.17g\nground_energy %.17g\ntotal_steps %ld\n", r.final_fidelity,
                r.final_energy, problem.ground_energy(), r.total_steps);
    if (r.total_gates) {
        std::printf("total_gates %ld\n", r.total_gates);
    }
    return 0;
}

int cmd_qaa(const AppConfig &cfg, bool search, double target) {
    if (search) {
        const long n = steps_to_success(cfg.ising.h, cfg.ising.nt, target, cfg.qaa.mode, 1L << 20, cfg.qaa.dt);
        std::printf("steps_to_success %ld\ngates %ld\ndelta %.17g\n", n, n * qaa_step_gates(cfg.ising.nt),
                    path_gap(cfg.ising));
        return 0;
    }
    const QaaResult r = run_qaa(cfg.qaa);
    std::printf("fidelity %.17g\nsteps %ld\ngates %ld\n", r.fidelity, cfg.qaa.n_steps,
                cfg.qaa.n_steps * qaa_step_gates(cfg.ising.nt));
    return 0;
}

int cmd_spectrum(const AppConfig &cfg, bool toy, int points) {
    SpectrumSweep s;
    if (toy) {
        ToyParams p;
        p.nu0 = cfg.comb.nu0;
        p.epsilon = cfg.comb.nu0 / 2;
        p.g = cfg.comb.g;
        p.tf = cfg.comb.tf;
        const auto times = linspace(0.0, p.tf, points);
        s = spectrum_sweep(toy_problem(p), toy_comb(p), p.g, times);
    } else {
        const auto problem = make_problem(cfg);
        const auto sp = sweep_params(cfg.comb, 0);
        const auto times = linspace(0.0, sp.comb.tf, points);
        s = spectrum_sweep(problem, sp.comb, sp.g, times);
    }
    auto meta = metadata(cfg, toy ? "spectrum --toy" : "spectrum");
    if (!cfg.output.json.empty()) {
        write_spectrum_json(cfg.output.json, s, meta);
    }
    if (!cfg.output.csv.empty()) {
        write_spectrum_csv(cfg.output.csv, s, meta);
    } else {
        const std::string tmp = "/dev/stdout";
        write_spectrum_csv(tmp, s, meta);
    }
    return 0;
}

int cmd_ensemble(const AppConfig &cfg) {
    const auto problem = make_problem(cfg);
    const auto records =
        ensemble_success(cfg.comb, problem, cfg.ensemble.members, cfg.ensemble.sampler, cfg.comb.seed, cfg.threads);
    auto meta = metadata(cfg, "ensemble");
    if (!cfg.output.csv.empty()) {
        write_ensemble_csv(cfg.output.csv, records, meta);
    }
    if (!cfg.output.json.empty()) {
        write_ensemble_json(cfg.output.json, records, meta);
    }
    std::vector<double> finals;
    int improved = 0;
    for (const auto &r : records) {
        finals.push_back(r.final_fidelity);
        improved += r.final_fidelity > r.initial_fidelity;
    }
    std::printf("members %zu\n", records.size());
    if (!records.empty()) {
        std::printf("improved_fraction %.17g\nmedian_final_fidelity %.17g\n",
                    static_cast<double>(improved) / static_cast<double>(records.size()), median(finals));
    }
    return 0;
}

int cmd_gatecount(int nt, int nc, bool with_b, bool dump) {
    const GateCount g = gate_count(nt, nc, with_b);
    std::printf("total %ld\nrotations %ld\ntarget %ld\ncomb %ld\ninteraction %ld\nqaa_step %ld\n", g.total,
                g.rotations, g.target, g.comb, g.interaction, qaa_step_gates(nt));
    if (dump) {
        IsingParams p{nt, 1.0, with_b ? 1.0 : 0.0, true};
        CombParams c;
        c.nc = nc;
        c.kappa = 0.1;
        c.tf = 1.0;
        const Circuit circuit = trotter_step_circuit(p, c, InteractionParams{0.1, CouplingMode::one_body_x()}, 0.0, 0.1);
        dump_circuit(circuit, std::cout);
    }
    return 0;
}

int cmd_optimize(const AppConfig &cfg) {
    const auto problem = make_problem(cfg);
    std::vector<StateVector> starts;
    for (int j = 0; j < cfg.optimize.members; ++j) {
        Rng rng = Rng(cfg.comb.seed).split(1000 + static_cast<std::uint64_t>(j));
        starts.push_back(make_initial_state(cfg.comb, problem, rng));
    }
    const SearchSpace space = cfg.optimize.space.value_or(default_search_space(problem));
    const auto r = optimize_params(space, cfg.comb, problem, starts, cfg.optimize.objective, cfg.optimize.budget,
                                   cfg.comb.seed, cfg.threads);
    AppConfig best = cfg;
    best.comb = r.best;
    best.optimize.space = space;
    std::fprintf(stderr, "best_score %.17g\n", r.best_score);
    const std::string text = "# best_score: " + format_double(r.best_score) + "\n" + render_config(best);
    if (!cfg.output.csv.empty()) {
        std::ofstream out(cfg.output.csv);
        out << text;
        if (!out) {
            throw IoError("cannot write " + cfg.output.csv);
        }
    } else {
        std::cout << text;
    }
    return 0;
}

ScConfigProvider fixture_provider(const std::string &dir) {
    return [dir](double h) {
        char name[64];
        std::snprintf(name, sizeof name, "/h%g.ini", h);
        return parse_config(dir + name).comb;
    };
}

int cmd_compare(const AppConfig &cfg, const std::vector<double> &hs, const std::string &dir) {
    const auto points = compare_cost(hs, cfg.ising.nt, fixture_provider(dir), cfg.threads);
    auto meta = metadata(cfg, "compare");
    meta.set("qaa_dt", format_double(kQaaDt));
    meta.set("sc_fixtures", dir);
    if (!cfg.output.csv.empty()) {
        write_cost_csv(cfg.output.csv, points, meta);
    }
    if (!cfg.output.json.empty()) {
        write_cost_json(cfg.output.json, points, meta);
    }
    std::printf("method,h,delta,inv_gap,steps,gates\n");
    for (const auto &p : points) {
        std::printf("%s,%g,%.6g,%.6g,%ld,%ld\n", p.method.c_str(), p.h, p.delta, p.inv_gap, p.steps, p.gates);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spectral comb and adiabatic ground-state preparation on a statevector simulator", "combsim"};
    app.set_version_flag("--version", COMBSIM_VERSION);
    app.require_subcommand(1);
    app.footer([] {
        std::string s = "Config keys and defaults:\n";
        for (const auto &[k, v] : config_defaults()) {
            s += "  " + k + " = " + v + "\n";
        }
        return s;
    }());

    Common common;
    auto *comb = app.add_subcommand("comb", "Run comb iterations and record the overlap trajectory");
    add_common(comb, common);

    auto *qaa = app.add_subcommand("qaa", "Adiabatic sweep of B from +1 to -1");
    add_common(qaa, common);
    bool qaa_search = false;
    double qaa_target = 0.5;
    qaa->add_flag("--steps-to-success", qaa_search, "Search for the smallest step count reaching --target");
    qaa->add_option("--target", qaa_target, "Fidelity target for --steps-to-success");

    auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues of the total Hamiltonian along the sweep");
    add_common(spectrum, common);
    bool toy = false;
    int points = 201;
    spectrum->add_flag("--toy", toy, "Single target qubit with a two-qubit comb");
    spectrum->add_option("--points", points, "Time grid size")->check(CLI::PositiveNumber);

    auto *ensemble = app.add_subcommand("ensemble", "Initial vs final fidelity over random initial states");
    add_common(ensemble, common);

    auto *gatecount = app.add_subcommand("gatecount", "Gates per Trotter step");
    int gc_nt = 3;
    int gc_nc = 3;
    bool with_b = false;
    bool dump = false;
    gatecount->add_option("--nt", gc_nt, "Target qubits")->check(CLI::PositiveNumber);
    gatecount->add_option("--nc", gc_nc, "Comb qubits")->check(CLI::Range(3, 16));
    gatecount->add_flag("--with-b", with_b, "Include the longitudinal field layer");
    gatecount->add_flag("--dump", dump, "Print the enumerated step circuit");

    auto *optimize = app.add_subcommand("optimize", "Random search over comb parameters; prints the best config");
    add_common(optimize, common);

    auto *compare = app.add_subcommand("compare", "Gate cost of the adiabatic baseline vs a single comb");
    add_common(compare, common);
    std::vector<double> hs{0.4, 0.5, 0.6, 0.8, 1.0};
    std::string sc_dir = "fixtures/cost";
    compare->add_option("--h-grid", hs, "Transverse field values")->delimiter(',');
    compare->add_option("--sc-dir", sc_dir, "Directory of per-h comb configs named h<h>.ini");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (gatecount->parsed()) {
            return cmd_gatecount(gc_nt, gc_nc, with_b, dump);
        }
        const AppConfig cfg = load(common);
        if (comb->parsed()) {
            return cmd_comb(cfg);
        }
        if (qaa->parsed()) {
            return cmd_qaa(cfg, qaa_search, qaa_target);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(cfg, toy, points);
        }
        if (ensemble->parsed()) {
            return cmd_ensemble(cfg);
        }
        if (optimize->parsed()) {
            return cmd_optimize(cfg);
        }
        if (compare->parsed()) {
            return cmd_compare(cfg, hs, sc_dir);
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
