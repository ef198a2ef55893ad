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

#include "combsim/combing.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "combsim/circuits.h"
#include "combsim/errors.h"
#include "combsim/parallel.h"

namespace combsim {

const char *mode_name(Mode m) {
    return m == Mode::Emulate ? "emulate" : "circuit";
}

int CombingConfig::steps(int iter) const {
    if (!steps_per_iter.empty()) {
        return steps_per_iter.at(static_cast<std::size_t>(iter));
    }
    return static_cast<int>(std::llround(tf / dt));
}

int CombingConfig::total_steps() const {
    int total = 0;
    for (int i = 0; i < n_iters; ++i) {
        total += steps(i);
    }
    return total;
}

void CombingConfig::validate() const {
    if (!(nu0 > 0)) {
        throw ConfigError("comb.nu0", "must be positive");
    }
    if (!(tf > 0)) {
        throw ConfigError("comb.tf", "must be positive");
    }
    if (!(dt > 0)) {
        throw ConfigError("run.dt", "must be positive");
    }
    if (!(eta > 0 && eta <= 1)) {
        throw ConfigError("run.eta", "must lie in (0, 1]");
    }
    if (n_iters < 1) {
        throw ConfigError("run.n_iters", "must be at least 1");
    }
    if (nc < 2) {
        throw ConfigError("comb.nc", "must be at least 2");
    }
    if (steps_per_iter.empty()) {
        const double ratio = tf / dt;
        if (ratio < 0.5 || std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio)) {
            throw ConfigError("run.dt", "dt = " + std::to_string(dt) + " does not divide comb.tf = " +
                                            std::to_string(tf) + " into a whole number of steps");
        }
    } else {
        if (static_cast<int>(steps_per_iter.size()) != n_iters) {
            throw ConfigError("run.steps_per_iter", "needs one entry per iteration");
        }
        for (int s : steps_per_iter) {
            if (s < 1) {
                throw ConfigError("run.steps_per_iter", "entries must be positive");
            }
        }
    }
    if (mode == Mode::Circuit) {
        if (coupling.kind != CouplingMode::Kind::OneBodyX) {
            throw ConfigError("interaction.coupling", "circuit mode supports only the one_body_x coupling");
        }
        if (nc < 3) {
            throw ConfigError("comb.nc", "circuit mode needs at least 3 comb qubits");
        }
    }
}

std::vector<double> CombingConfig::phis() const {
    if (random_phis) {
        return combsim::random_phis(nc, phi_seed);
    }
    return std::vector<double>(static_cast<std::size_t>(nc), phi);
}

namespace {

CombParams comb_shape(int nc) {
    CombParams p;
    p.nc = nc;
    return p;
}

}  // namespace

CombingProblem::CombingProblem(const IsingParams &ising, const CouplingMode &mode, int nc)
    : ising_(ising),
      mode_(mode),
      coupling_(coupling_operator(mode, ising)),
      hamiltonian_(sum_matrix(ising_hamiltonian(ising)), comb_shape(nc), coupling_),
      eigen_(eigh(hamiltonian_.target())) {
}

CombingProblem::CombingProblem(const DenseOperator &target, const CouplingOperator &coupling, int nc)
    : coupling_(coupling), hamiltonian_(target, comb_shape(nc), coupling_), eigen_(eigh(target)) {
}

SweepParams sweep_params(const CombingConfig &cfg, int iter) {
    const double scale = std::pow(cfg.eta, iter);
    SweepParams sp;
    sp.steps = cfg.steps(iter);
    sp.dt = cfg.dt;
    sp.g = cfg.g * scale;
    sp.comb.nc = cfg.nc;
    sp.comb.nu0 = cfg.nu0 * scale;
    sp.comb.kappa = cfg.kappa;
    sp.comb.phis = cfg.phis();
    sp.comb.tf = sp.steps * cfg.dt;
    return sp;
}

namespace {

// The scrambler is baked into TotalHamiltonian at construction, so each sweep builds its own.
struct SweepEngine {
    SweepEngine(const CombingProblem &problem, const SweepParams &sp)
        : problem(problem), sp(sp), h(problem.hamiltonian().target(), sp.comb, problem.coupling()) {
    }

    DenseOperator step_unitary(int k, Mode mode) const {
        const double t = k * sp.dt;
        if (mode == Mode::Emulate) {
            return expm_hermitian(h.at(nu_schedule(sp.comb.nu0, sp.comb.tf, t), sp.g), sp.dt);
        }
        return circuit_unitary(step_circuit(t));
    }

    Circuit step_circuit(double t) const {
        if (!problem.ising()) {
            throw UnsupportedCoupling("circuit mode needs an Ising target");
        }
        return trotter_step_circuit(*problem.ising(), sp.comb, InteractionParams{sp.g, problem.coupling_mode()}, t,
                                    sp.dt);
    }

    void step(StateVector &psi, int k, Mode mode) const {
        if (mode == Mode::Emulate) {
            psi.apply_dense(step_unitary(k, mode), 0, UnitaryCheck::Skip);
        } else {
            run_circuit(step_circuit(k * sp.dt), psi);
        }
    }

    const CombingProblem &problem;
    const SweepParams &sp;
    TotalHamiltonian h;
};

}  // namespace

TrajectoryPoint observe(const StateVector &psi, const CombingProblem &problem, double t, int k_overlaps) {
    TrajectoryPoint p;
    p.t = t;
    p.energy = expectation(psi, problem.hamiltonian().target_full());
    const auto &basis = problem.target_eigen().vectors;
    p.fidelity = reduced_fidelity(psi, basis.col(0));
    if (k_overlaps > 0) {
        p.overlaps = reduced_overlaps(psi, basis, k_overlaps);
    }
    return p;
}

void single_sweep(StateVector &psi, const CombingProblem &problem, const SweepParams &sp, Mode mode,
                  std::vector<TrajectoryPoint> *trajectory, int k_overlaps) {
    if (psi.nqubits() != problem.nt() + problem.nc()) {
        throw DimensionMismatch("state does not span target and comb");
    }
    const SweepEngine engine(problem, sp);
    if (trajectory) {
        trajectory->clear();
        trajectory->push_back(observe(psi, problem, 0.0, k_overlaps));
    }
    for (int k = 0; k < sp.steps; ++k) {
        engine.step(psi, k, mode);
        if (trajectory) {
            trajectory->push_back(observe(psi, problem, (k + 1) * sp.dt, k_overlaps));
        }
    }
}

DenseOperator sweep_unitary(const CombingProblem &problem, const SweepParams &sp, Mode mode) {
    const SweepEngine engine(problem, sp);
    const auto dim = Eigen::Index{1} << (problem.nt() + problem.nc());
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (int k = 0; k < sp.steps; ++k) {
        u = engine.step_unitary(k, mode) * u;
    }
    return u;
}

SweepCache build_sweep_cache(const CombingConfig &cfg, const CombingProblem &problem) {
    SweepCache cache;
    for (int i = 0; i < cfg.n_iters; ++i) {
        cache.unitaries.push_back(sweep_unitary(problem, sweep_params(cfg, i), cfg.mode));
    }
    return cache;
}

RunResult run_combing(const CombingConfig &cfg, const CombingProblem &problem, const StateVector &target_state,
                      const RunOptions &options) {
    cfg.validate();
    if (cfg.nc != problem.nc()) {
        throw DimensionMismatch("config has " + std::to_string(cfg.nc) + " comb qubits, problem has " +
                                std::to_string(problem.nc()));
    }
    if (target_state.nqubits() != problem.nt()) {
        throw DimensionMismatch("initial state does not match the target register");
    }
    const bool use_cache = options.cache && !options.record_trajectory;
    if (use_cache && static_cast<int>(options.cache->unitaries.size()) < cfg.n_iters) {
        throw DimensionMismatch("sweep cache holds fewer iterations than the config runs");
    }
    Rng rng = Rng(cfg.seed).split(1);
    const auto comb = comb_qubits(problem.nt(), problem.nc());

    RunResult r;
    StateVector psi = init_comb_product(target_state, problem.nc());
    const auto start = observe(psi, problem, 0.0, 0);
    r.initial_fidelity = start.fidelity;
    r.initial_energy = start.energy;
    for (int iter = 0; iter < cfg.n_iters; ++iter) {
        IterationResult it;
        const SweepParams sp = sweep_params(cfg, iter);
        if (use_cache) {
            psi.apply_dense(options.cache->unitaries[static_cast<std::size_t>(iter)], 0, UnitaryCheck::Skip);
        } else {
            single_sweep(psi, problem, sp, cfg.mode, options.record_trajectory ? &it.trajectory : nullptr,
                         options.k_overlaps);
        }
        r.total_steps += sp.steps;
        if (iter + 1 < cfg.n_iters || cfg.measure_last) {
            auto rec = psi.measure(comb, rng);
            psi.reset_down(comb, rec);
            it.outcome = std::move(rec);
        }
        r.iterations.push_back(std::move(it));
    }
    const auto end = observe(psi, problem, 0.0, 0);
    r.final_fidelity = end.fidelity;
    r.final_energy = end.energy;
    if (problem.ising() && problem.nc() >= 3) {
        r.total_gates = r.total_steps * gate_count(problem.nt(), problem.nc(), problem.ising()->b != 0.0).total;
    }
    r.final_state = std::move(psi);
    return r;
}

StateVector make_initial_state(const CombingConfig &cfg, const CombingProblem &problem, Rng &rng) {
    const int nt = problem.nt();
    switch (cfg.initial.kind) {
        case InitialState::Kind::Random:
            return random_target_state(nt, rng);
        case InitialState::Kind::BasisState:
            return StateVector::basis(nt, cfg.initial.index);
        case InitialState::Kind::GroundStateOfBPlus1: {
            if (!problem.ising()) {
                throw ConfigError("run.initial", "ground_b_plus_1 needs an Ising target");
            }
            IsingParams p = *problem.ising();
            p.b = 1.0;
            const auto es = eigh(sum_matrix(ising_hamiltonian(p)));
            return StateVector(nt, es.vectors.col(0));
        }
    }
    throw std::logic_error("unhandled initial state kind");
}

SearchSpace default_search_space(const CombingProblem &problem) {
    SearchSpace s;
    const double scale = spectral_norm(problem.hamiltonian().target());
    s.nu0 = {0.5 * scale, 4.0 * scale, true};
    return s;
}

double score_config(const CombingConfig &cfg, const CombingProblem &problem,
                    std::span<const StateVector> initial_states, Objective objective) {
    if (initial_states.empty()) {
        throw EmptySearchSpace("no initial states to score against");
    }
    double total = 0.0;
    const Rng base(cfg.seed);
    std::optional<SweepCache> cache;
    if (initial_states.size() > 1) {
        cache = build_sweep_cache(cfg, problem);
    }
    for (std::size_t j = 0; j < initial_states.size(); ++j) {
        CombingConfig member = cfg;
        member.seed = base.split(j).next_u64();
        RunOptions opt;
        opt.cache = cache ? &*cache : nullptr;
        const auto r = run_combing(member, problem, initial_states[j], opt);
        total += objective == Objective::FinalEnergy ? r.final_energy : -r.final_fidelity;
    }
    return total / static_cast<double>(initial_states.size());
}

namespace {

double sample(const ParamRange &r, Rng &rng) {
    if (r.lo == r.hi) {
        return r.lo;
    }
    if (r.log) {
        return std::exp(rng.uniform(std::log(r.lo), std::log(r.hi)));
    }
    return rng.uniform(r.lo, r.hi);
}

void check_range(const ParamRange &r, const char *name) {
    if (!(r.lo <= r.hi) || (r.log && !(r.lo > 0))) {
        throw EmptySearchSpace(std::string("search range for ") + name + " is empty or not log-sampleable");
    }
}

}  // namespace

OptimizeResult optimize_params(const SearchSpace &space, const CombingConfig &base, const CombingProblem &problem,
                               std::span<const StateVector> initial_states, Objective objective, int budget,
                               std::uint64_t seed, int threads) {
    check_range(space.nu0, "nu0");
    check_range(space.tf, "tf");
    check_range(space.kappa, "kappa");
    check_range(space.g, "g");
    check_range(space.eta, "eta");
    if (budget < 1 || space.steps < 1) {
        throw EmptySearchSpace("optimizer budget and step count must be positive");
    }
    Rng rng(seed);
    std::vector<CombingConfig> candidates;
    for (int i = 0; i < budget; ++i) {
        CombingConfig c = base;
        c.nu0 = sample(space.nu0, rng);
        c.tf = sample(space.tf, rng);
        c.kappa = sample(space.kappa, rng);
        c.g = sample(space.g, rng);
        c.eta = sample(space.eta, rng);
        c.dt = c.tf / space.steps;
        c.steps_per_iter.assign(static_cast<std::size_t>(c.n_iters), space.steps);
        candidates.push_back(std::move(c));
    }
    OptimizeResult out;
    out.scores.resize(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        out.scores[i] = score_config(candidates[i], problem, initial_states, objective);
    });
    const auto best = std::min_element(out.scores.begin(), out.scores.end()) - out.scores.begin();
    out.best = candidates[static_cast<std::size_t>(best)];
    out.best_score = out.scores[static_cast<std::size_t>(best)];
    return out;
}

}  // namespace combsim
