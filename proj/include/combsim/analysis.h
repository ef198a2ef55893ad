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

#ifndef COMBSIM_ANALYSIS_H
#define COMBSIM_ANALYSIS_H

#include <cstdint>
#include <span>
#include <vector>

#include "combsim/combing.h"

namespace combsim {

std::vector<double> linspace(double a, double b, int n);

struct SpectrumSweep {
    std::vector<double> times;
    std::vector<std::vector<double>> rows;  // ascending eigenvalues of H_tot(t)

    bool operator==(const SpectrumSweep &) const = default;
};

/// Eigenvalues of the total Hamiltonian along the comb schedule.
SpectrumSweep spectrum_sweep(const CombingProblem &problem, const CombParams &comb, double g,
                             std::span<const double> times);

struct ToyParams {
    double nu0 = 2.0;
    double epsilon = 1.0;
    double g = 0.05;
    double tf = 100.0;
};

/// Single target qubit with a two-qubit comb.
CombingProblem toy_problem(const ToyParams &p);
CombParams toy_comb(const ToyParams &p);

/// A crossing of two uncoupled levels E_a + nu k_a = E_b + nu k_b inside the exchange-symmetric
/// comb sector, with the gap the coupling opens there.
struct Crossing {
    double t = 0.0;
    double energy = 0.0;
    int level = 0;         // the pair is (level, level + 1) in the sector's ascending spectrum
    double gap_uncoupled = 0.0;
    double gap_coupled = 0.0;  // minimum over a window around t
    double t_min = 0.0;
};

std::vector<Crossing> toy_avoided_crossings(const ToyParams &p);

/// Sector Hamiltonian: target (x) {|00>, (|01>+|10>)/sqrt2, |11>} of the toy comb.
DenseOperator toy_symmetric_sector(const CombingProblem &problem, const CombParams &comb, double g, double t);

enum class Sampler { Haar, Basis };

struct EnsembleRecord {
    std::uint64_t seed = 0;
    double initial_fidelity = 0.0;
    double final_fidelity = 0.0;
    long steps = 0;
    std::vector<std::uint64_t> outcomes;  // packed comb outcome per measured iteration

    bool operator==(const EnsembleRecord &) const = default;
};

/// Member seed m: Rng(seed).split(m); the state is drawn from its stream 0 and cfg.seed is replaced by
/// the member seed. Records come back sorted by seed.
std::vector<EnsembleRecord> ensemble_success(const CombingConfig &cfg, const CombingProblem &problem, int members,
                                             Sampler sampler, std::uint64_t seed, int threads = 1);

struct TrajectoryRow {
    int iter = 0;
    int step = 0;
    double t = 0.0;
    double energy = 0.0;
    double residual = 0.0;
    std::vector<double> overlaps;

    bool operator==(const TrajectoryRow &) const = default;
};

/// Rows for every recorded point; `result` optionally receives the underlying run.
std::vector<TrajectoryRow> overlap_trajectory(const CombingConfig &cfg, const CombingProblem &problem,
                                              const StateVector &target_state, int k, RunResult *result = nullptr);

double median(std::vector<double> v);

}  // namespace combsim

#endif
