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

#ifndef COMBSIM_COMBING_H
#define COMBSIM_COMBING_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "combsim/linalg.h"
#include "combsim/models.h"
#include "combsim/statevector.h"

namespace combsim {

enum class Mode { Emulate, Circuit };

const char *mode_name(Mode m);

struct InitialState {
    enum class Kind { Random, BasisState, GroundStateOfBPlus1 };
    Kind kind = Kind::Random;
    std::size_t index = 0;  // BasisState only

    bool operator==(const InitialState &) const = default;
};

struct CombingConfig {
    double nu0 = 4.0;
    double tf = 50.0;
    double kappa = 0.05;
    double g = 0.2;
    double dt = 0.1;
    double eta = 0.5;
    int n_iters = 1;
    Mode mode = Mode::Emulate;
    CouplingMode coupling;
    std::uint64_t seed = 0;
    InitialState initial;
    int nc = 3;
    /// phi couplings: all equal to `phi`, or drawn with random_phis(nc, phi_seed).
    bool random_phis = false;
    double phi = 1.0;
    std::uint64_t phi_seed = 0;
    bool measure_last = false;
    /// Uneven split of Trotter steps over iterations; empty means tf / dt steps each.
    std::vector<int> steps_per_iter;

    /// Steps in iteration `iter`.
    int steps(int iter = 0) const;
    int total_steps() const;
    /// Throws ConfigError on the first violated field.
    void validate() const;
    std::vector<double> phis() const;
};

/// The target system a comb run acts on: its Hamiltonian, eigenbasis and coupling operator.
class CombingProblem {
   public:
    /// Ising target; coupling built from `mode`.
    CombingProblem(const IsingParams &ising, const CouplingMode &mode, int nc);
    /// Arbitrary target (e.g. the single-qubit toy); emulation only.
    CombingProblem(const DenseOperator &target, const CouplingOperator &coupling, int nc);

    int nt() const {
        return hamiltonian_.nt();
    }
    int nc() const {
        return hamiltonian_.nc();
    }
    const std::optional<IsingParams> &ising() const {
        return ising_;
    }
    const CouplingOperator &coupling() const {
        return coupling_;
    }
    const CouplingMode &coupling_mode() const {
        return mode_;
    }
    const TotalHamiltonian &hamiltonian() const {
        return hamiltonian_;
    }
    const EigenSystem &target_eigen() const {
        return eigen_;
    }
    DenseVector ground_state() const {
        return eigen_.vectors.col(0);
    }
    double ground_energy() const {
        return eigen_.values[0];
    }

   private:
    std::optional<IsingParams> ising_;
    CouplingMode mode_;
    CouplingOperator coupling_;
    TotalHamiltonian hamiltonian_;
    EigenSystem eigen_;
};

/// Parameters of one sweep, after the eta rescaling of earlier iterations.
struct SweepParams {
    CombParams comb;  // comb.tf = steps * dt
    double g = 0.0;
    double dt = 0.1;
    int steps = 0;
};

SweepParams sweep_params(const CombingConfig &cfg, int iter);

struct TrajectoryPoint {
    double t = 0.0;
    double energy = 0.0;
    double fidelity = 0.0;
    std::vector<double> overlaps;
};

struct IterationResult {
    std::optional<MeasurementRecord> outcome;
    std::vector<TrajectoryPoint> trajectory;  // steps + 1 points when recorded
};

/// Target-side observables of a full-register state.
TrajectoryPoint observe(const StateVector &psi, const CombingProblem &problem, double t, int k_overlaps);

/// Propagates `psi` through one sweep. When `trajectory` is given it receives steps + 1 points.
void single_sweep(StateVector &psi, const CombingProblem &problem, const SweepParams &sp, Mode mode,
                  std::vector<TrajectoryPoint> *trajectory = nullptr, int k_overlaps = 0);

/// Full-register unitary of one sweep.
DenseOperator sweep_unitary(const CombingProblem &problem, const SweepParams &sp, Mode mode);

/// Sweep unitaries for every iteration of a config; shared by the members of an ensemble.
struct SweepCache {
    std::vector<DenseOperator> unitaries;
};

SweepCache build_sweep_cache(const CombingConfig &cfg, const CombingProblem &problem);

struct RunOptions {
    bool record_trajectory = false;
    int k_overlaps = 0;
    const SweepCache *cache = nullptr;
};

struct RunResult {
    std::vector<IterationResult> iterations;
    double initial_fidelity = 0.0;
    double final_fidelity = 0.0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    long total_steps = 0;
    long total_gates = 0;
    StateVector final_state{0};
};

/// Runs cfg.n_iters sweeps from target_state (x) |0...0>, measuring and resetting the comb and
/// rescaling g and nu0 by eta between sweeps.
RunResult run_combing(const CombingConfig &cfg, const CombingProblem &problem, const StateVector &target_state,
                      const RunOptions &options = {});

/// Initial target state named by cfg.initial; Random draws from `rng`.
StateVector make_initial_state(const CombingConfig &cfg, const CombingProblem &problem, Rng &rng);

enum class Objective { FinalEnergy, NegGsFidelity };

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
    bool log = false;
};

struct SearchSpace {
    ParamRange nu0{0.5, 16.0, true};
    ParamRange tf{5.0, 100.0, true};
    ParamRange kappa{0.01, 0.5, true};
    ParamRange g{0.01, 1.0, true};
    ParamRange eta{0.3, 0.9, false};
    /// Steps per iteration; dt = tf / steps.
    int steps = 100;
};

SearchSpace default_search_space(const CombingProblem &problem);

struct OptimizeResult {
    CombingConfig best;
    double best_score = 0.0;
    std::vector<double> scores;  // in sampling order
};

/// Seeded random search. Each sample is scored by the mean objective over `initial_states`,
/// member j using measurement seed split(j) of the sample's seed.
OptimizeResult optimize_params(const SearchSpace &space, const CombingConfig &base, const CombingProblem &problem,
                               std::span<const StateVector> initial_states, Objective objective, int budget,
                               std::uint64_t seed, int threads = 1);

double score_config(const CombingConfig &cfg, const CombingProblem &problem,
                    std::span<const StateVector> initial_states, Objective objective);

}  // namespace combsim

#endif
