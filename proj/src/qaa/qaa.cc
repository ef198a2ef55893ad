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

#include "combsim/qaa.h"

#include <string>

#include "combsim/circuits.h"
#include "combsim/errors.h"
#include "combsim/parallel.h"

namespace combsim {

double qaa_field(long k, long n) {
    return 1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(n);
}

namespace {

DenseVector ground_state_at(IsingParams p, double b) {
    p.b = b;
    return eigh(sum_matrix(ising_hamiltonian(p))).vectors.col(0);
}

}  // namespace

QaaResult run_qaa(const QaaConfig &cfg) {
    if (cfg.n_steps < 1) {
        throw std::invalid_argument("QAA needs at least one step");
    }
    IsingParams p = cfg.ising;
    p.b = 0.0;
    const DenseOperator h0 = sum_matrix(ising_hamiltonian(p));
    WeightedPauliSum zsum(static_cast<std::size_t>(p.nt));
    for (int i = 0; i < p.nt; ++i) {
        zsum.add(1.0, PauliString::single(static_cast<std::size_t>(p.nt), static_cast<std::size_t>(i), PauliAxis::Z));
    }
    const DenseOperator z = sum_matrix(zsum);

    QaaResult r;
    r.final_state = StateVector(p.nt, ground_state_at(p, 1.0));
    for (long k = 0; k < cfg.n_steps; ++k) {
        const double b = qaa_field(k, cfg.n_steps);
        if (cfg.mode == Mode::Emulate) {
            r.final_state.apply_dense(expm_hermitian(h0 + b * z, cfg.dt), 0, UnitaryCheck::Skip);
        } else {
            IsingParams q = p;
            q.b = b;
            const Circuit c = target_step_circuit(q, cfg.dt, true);
            run_circuit(c, r.final_state);
            r.gates += static_cast<long>(c.size());
        }
    }
    r.fidelity = std::norm(ground_state_at(p, -1.0).dot(r.final_state.amplitudes()));
    if (cfg.mode == Mode::Emulate) {
        r.gates = cfg.n_steps * qaa_step_gates(p.nt);
    }
    return r;
}

long steps_to_success(double h, int nt, double target, Mode mode, long cap, double dt) {
    if (!(h > 0)) {
        throw std::invalid_argument("steps_to_success needs h > 0");
    }
    QaaConfig cfg;
    cfg.ising.nt = nt;
    cfg.ising.h = h;
    cfg.dt = dt;
    cfg.mode = mode;
    auto ok = [&](long n) {
        cfg.n_steps = n;
        return run_qaa(cfg).fidelity >= target;
    };
    long hi = 1;
    while (!ok(hi)) {
        if (hi >= cap) {
            throw Diverged("QAA did not reach fidelity " + std::to_string(target) + " within " + std::to_string(cap) +
                           " steps (h = " + std::to_string(h) + ")");
        }
        hi *= 2;
    }
    long lo = hi / 2;  // fails, or 0
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

long sc_steps_to_success(const CombingConfig &cfg, const CombingProblem &problem, double target,
                         std::span<const int> budgets) {
    if (!problem.ising()) {
        throw std::invalid_argument("cost comparison needs an Ising target");
    }
    CombingConfig c = cfg;
    c.n_iters = 1;
    c.initial = {InitialState::Kind::GroundStateOfBPlus1, 0};
    Rng unused(c.seed);
    const StateVector start = make_initial_state(c, problem, unused);
    for (int n : budgets) {
        c.steps_per_iter = {n};
        c.dt = c.tf / n;
        if (run_combing(c, problem, start).final_fidelity >= target) {
            return n;
        }
    }
    throw Diverged("no single-comb budget reached fidelity " + std::to_string(target));
}

std::vector<CostPoint> compare_cost(std::span<const double> hs, int nt, const ScConfigProvider &sc_config,
                                    int threads) {
    std::vector<CostPoint> out(2 * hs.size());
    const long sc_step_gates = gate_count(nt, 3, true).total;
    parallel_for(hs.size(), threads, [&](std::size_t i) {
        const double h = hs[i];
        IsingParams p{nt, h, 0.0, true};
        const double delta = path_gap(p);

        CostPoint q{"QAA", h, delta, 1.0 / delta};
        q.steps = steps_to_success(h, nt);
        q.gates = q.steps * qaa_step_gates(nt);

        const CombingConfig cfg = sc_config(h);
        p.b = -1.0;
        const CombingProblem problem(p, cfg.coupling, cfg.nc);
        CostPoint s{"SC", h, delta, 1.0 / delta};
        s.steps = sc_steps_to_success(cfg, problem);
        s.gates = s.steps * (cfg.nc == 3 ? sc_step_gates : gate_count(nt, cfg.nc, true).total);
        out[2 * i] = q;
        out[2 * i + 1] = s;
    });
    return out;
}

}  // namespace combsim
