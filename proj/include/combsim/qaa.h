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

#ifndef COMBSIM_QAA_H
#define COMBSIM_QAA_H

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "combsim/combing.h"
#include "combsim/models.h"
#include "combsim/statevector.h"

namespace combsim {

/// Fixed step length for the adiabatic baseline.
inline constexpr double kQaaDt = 0.1;

struct QaaConfig {
    IsingParams ising;  // ising.b is ignored; B runs from +1 to -1
    long n_steps = 100;
    double dt = kQaaDt;
    Mode mode = Mode::Emulate;
};

struct QaaResult {
    StateVector final_state{0};
    double fidelity = 0.0;
    long gates = 0;
};

/// Field at step k of n: B_k = 1 - 2k/n.
double qaa_field(long k, long n);

/// Starts in the B = +1 ground state, takes n_steps steps of H(B_k), and reports the overlap with
/// the B = -1 ground state.
QaaResult run_qaa(const QaaConfig &cfg);

/// Smallest step count reaching `target` fidelity: doubling, then bisection. Throws Diverged above `cap`.
long steps_to_success(double h, int nt, double target = 0.5, Mode mode = Mode::Emulate, long cap = 1L << 20,
                      double dt = kQaaDt);

struct CostPoint {
    std::string method;  // "QAA" or "SC"
    double h = 0.0;
    double delta = 0.0;
    double inv_gap = 0.0;
    long steps = 0;
    long gates = 0;

    bool operator==(const CostPoint &) const = default;
};

inline constexpr int kScBudgets[] = {10, 20, 30, 50, 75, 100, 150, 200};

/// Single-comb cost: the smallest budget in `budgets` whose run (dt = tf / budget) from the B = +1
/// ground state reaches `target` reduced fidelity against the problem's ground state.
/// Throws Diverged when no budget succeeds.
long sc_steps_to_success(const CombingConfig &cfg, const CombingProblem &problem, double target = 0.5,
                         std::span<const int> budgets = kScBudgets);

/// Comb config per field value h; the target carries B = -1.
using ScConfigProvider = std::function<CombingConfig(double h)>;

std::vector<CostPoint> compare_cost(std::span<const double> hs, int nt, const ScConfigProvider &sc_config,
                                    int threads = 1);

}  // namespace combsim

#endif
