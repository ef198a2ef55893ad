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

#include <cmath>

#include "gtest/gtest.h"

#include "combsim/analysis.h"
#include "combsim/circuits.h"
#include "combsim/errors.h"
#include "oracle.h"

using namespace combsim;

namespace {

CombingProblem small_problem(double h = 0.8, double b = 0.0) {
    return CombingProblem({3, h, b, true}, CouplingMode::one_body_x(), 3);
}

CombingConfig short_config() {
    CombingConfig cfg;
    cfg.nu0 = 4.0;
    cfg.tf = 4.0;
    cfg.dt = 0.2;
    cfg.g = 0.3;
    cfg.kappa = 0.1;
    cfg.seed = 5;
    return cfg;
}

StateVector target_state(int nt, std::uint64_t seed) {
    Rng rng(seed);
    return random_target_state(nt, rng);
}

double comb_vacuum_population(const StateVector &psi, int nt) {
    double p = 0;
    for (std::size_t i = 0; i < (std::size_t{1} << nt); ++i) {
        p += std::norm(psi[i]);
    }
    return p;
}

}  // namespace

TEST(CombingConfig, steps_and_validation) {
    CombingConfig cfg;
    ASSERT_EQ(cfg.steps(), 500);
    cfg.n_iters = 3;
    ASSERT_EQ(cfg.total_steps(), 1500);
    cfg.steps_per_iter = {100, 300, 50};
    ASSERT_EQ(cfg.steps(1), 300);
    ASSERT_EQ(cfg.total_steps(), 450);
    cfg.validate();

    auto field_of = [](const CombingConfig &c) {
        try {
            c.validate();
        } catch (const ConfigError &e) {
            return e.field;
        }
        return std::string("none");
    };
    CombingConfig bad;
    bad.dt = 0.3;
    ASSERT_EQ(field_of(bad), "run.dt");
    bad = CombingConfig();
    bad.eta = 0.0;
    ASSERT_EQ(field_of(bad), "run.eta");
    bad.eta = 1.5;
    ASSERT_EQ(field_of(bad), "run.eta");
    bad = CombingConfig();
    bad.n_iters = 0;
    ASSERT_EQ(field_of(bad), "run.n_iters");
    bad = CombingConfig();
    bad.mode = Mode::Circuit;
    bad.coupling = CouplingMode::random_pattern(1);
    ASSERT_EQ(field_of(bad), "interaction.coupling");
    bad = CombingConfig();
    bad.steps_per_iter = {10, 10};
    ASSERT_EQ(field_of(bad), "run.steps_per_iter");
    bad = CombingConfig();
    bad.tf = -1;
    ASSERT_EQ(field_of(bad), "comb.tf");
}

TEST(sweep_params, rescaling_per_iteration) {
    CombingConfig cfg;
    cfg.nu0 = 8.0;
    cfg.g = 0.4;
    cfg.eta = 0.5;
    cfg.n_iters = 3;
    cfg.steps_per_iter = {100, 200, 300};
    for (int i = 0; i < 3; ++i) {
        auto sp = sweep_params(cfg, i);
        ASSERT_DOUBLE_EQ(sp.comb.nu0, 8.0 * std::pow(0.5, i));
        ASSERT_DOUBLE_EQ(sp.g, 0.4 * std::pow(0.5, i));
        ASSERT_EQ(sp.steps, 100 * (i + 1));
        ASSERT_DOUBLE_EQ(sp.comb.tf, sp.steps * cfg.dt);
    }
}

TEST(single_sweep, g0_keeps_gs_fidelity) {
    auto problem = small_problem();
    auto cfg = short_config();
    cfg.g = 0.0;
    auto psi = init_comb_product(target_state(3, 1), 3);
    std::vector<TrajectoryPoint> traj;
    single_sweep(psi, problem, sweep_params(cfg, 0), Mode::Emulate, &traj, 4);
    ASSERT_EQ(traj.size(), 21u);
    for (const auto &p : traj) {
        ASSERT_NEAR(p.fidelity, traj[0].fidelity, 1e-10);
        ASSERT_NEAR(p.energy, traj[0].energy, 1e-10);
        ASSERT_EQ(p.overlaps.size(), 4u);
    }
    ASSERT_NEAR(psi.norm_squared(), 1, 1e-10);
}

TEST(single_sweep, no_coupling_no_scrambler_keeps_comb_down) {
    auto problem = small_problem();
    auto cfg = short_config();
    cfg.g = 0.0;
    cfg.kappa = 0.0;
    for (auto mode : {Mode::Emulate, Mode::Circuit}) {
        auto psi = init_comb_product(target_state(3, 2), 3);
        single_sweep(psi, problem, sweep_params(cfg, 0), mode);
        ASSERT_NEAR(comb_vacuum_population(psi, 3), 1.0, 1e-12);
    }
}

TEST(single_sweep, toy_excited_state_transfers_to_comb) {
    ToyParams tp;
    auto problem = toy_problem(tp);
    CombingConfig cfg;
    cfg.nc = 2;
    cfg.nu0 = tp.nu0;
    cfg.tf = tp.tf;
    cfg.g = tp.g;
    cfg.kappa = 0.0;
    cfg.dt = 0.1;
    auto excited = StateVector::basis(1, 1);
    auto result = run_combing(cfg, problem, excited);
    ASSERT_LT(result.initial_fidelity, 1e-12);
    ASSERT_GT(result.final_fidelity, 0.95);
    ASSERT_LT(result.final_energy, result.initial_energy);
}

TEST(run_combing, trajectory_shape_and_totals) {
    auto problem = small_problem(0.8, 0.3);
    auto cfg = short_config();
    cfg.n_iters = 3;
    RunOptions opt;
    opt.record_trajectory = true;
    opt.k_overlaps = 8;
    auto r = run_combing(cfg, problem, target_state(3, 3), opt);
    ASSERT_EQ(r.iterations.size(), 3u);
    for (const auto &it : r.iterations) {
        ASSERT_EQ(it.trajectory.size(), 21u);
        for (const auto &p : it.trajectory) {
            ASSERT_GE(p.fidelity, -1e-12);
            ASSERT_LE(p.fidelity, 1 + 1e-12);
            double total = 0;
            for (double o : p.overlaps) {
                total += o;
            }
            ASSERT_NEAR(total, 1.0, 1e-10);
            ASSERT_GE(p.energy, problem.ground_energy() - 1e-10);
        }
    }
    ASSERT_EQ(r.total_steps, 60);
    ASSERT_EQ(r.total_gates, 60 * gate_count(3, 3, true).total);
    ASSERT_NEAR(r.final_state.norm_squared(), 1.0, 1e-10);
    ASSERT_DOUBLE_EQ(r.final_fidelity, r.iterations.back().trajectory.back().fidelity);
}

TEST(run_combing, measurement_only_between_iterations) {
    auto problem = small_problem();
    auto cfg = short_config();
    auto state = target_state(3, 4);
    auto one = run_combing(cfg, problem, state);
    ASSERT_EQ(one.iterations.size(), 1u);
    ASSERT_FALSE(one.iterations[0].outcome.has_value());

    cfg.n_iters = 3;
    auto three = run_combing(cfg, problem, state);
    ASSERT_TRUE(three.iterations[0].outcome.has_value());
    ASSERT_TRUE(three.iterations[1].outcome.has_value());
    ASSERT_FALSE(three.iterations[2].outcome.has_value());
    ASSERT_EQ(three.iterations[0].outcome->qubits, comb_qubits(3, 3));

    cfg.measure_last = true;
    auto measured = run_combing(cfg, problem, state);
    ASSERT_TRUE(measured.iterations[2].outcome.has_value());
    // The comb is reset after a measured final sweep, so the target is a pure state again.
    ASSERT_NEAR(comb_vacuum_population(measured.final_state, 3), 1.0, 1e-12);
}

TEST(run_combing, eta1_g0_iterations_repeat) {
    auto problem = small_problem();
    auto cfg = short_config();
    cfg.g = 0.0;
    cfg.eta = 1.0;
    cfg.n_iters = 3;
    RunOptions opt;
    opt.record_trajectory = true;
    auto r = run_combing(cfg, problem, target_state(3, 6), opt);
    for (std::size_t k = 0; k < r.iterations[0].trajectory.size(); ++k) {
        for (int i = 1; i < 3; ++i) {
            ASSERT_NEAR(r.iterations[static_cast<std::size_t>(i)].trajectory[k].fidelity,
                        r.iterations[0].trajectory[k].fidelity, 1e-10);
        }
    }
    ASSERT_EQ(r.iterations[0].outcome->packed(), 0u);
    ASSERT_NEAR(r.iterations[0].outcome->probability, 1.0, 1e-12);
}

TEST(run_combing, bit_exact_determinism) {
    auto problem = small_problem();
    auto cfg = short_config();
    cfg.n_iters = 4;
    auto state = target_state(3, 7);
    auto a = run_combing(cfg, problem, state);
    auto b = run_combing(cfg, problem, state);
    ASSERT_EQ(a.final_state, b.final_state);
    ASSERT_EQ(a.final_fidelity, b.final_fidelity);
    for (int i = 0; i < 3; ++i) {
        ASSERT_EQ(a.iterations[static_cast<std::size_t>(i)].outcome, b.iterations[static_cast<std::size_t>(i)].outcome);
    }
}

TEST(run_combing, cache_matches_direct_sweeps) {
    auto problem = small_problem();
    auto cfg = short_config();
    cfg.n_iters = 2;
    auto state = target_state(3, 8);
    auto cache = build_sweep_cache(cfg, problem);
    ASSERT_EQ(cache.unitaries.size(), 2u);
    RunOptions opt;
    opt.cache = &cache;
    auto a = run_combing(cfg, problem, state);
    auto b = run_combing(cfg, problem, state, opt);
    ASSERT_LT((a.final_state.amplitudes() - b.final_state.amplitudes()).norm(), 1e-10);
    ASSERT_EQ(a.iterations[0].outcome->packed(), b.iterations[0].outcome->packed());
    ASSERT_NEAR(a.iterations[0].outcome->probability, b.iterations[0].outcome->probability, 1e-10);
}

TEST(reduced_fidelity, invariant_under_comb_local_unitary) {
    auto problem = small_problem();
    auto cfg = short_config();
    auto r = run_combing(cfg, problem, target_state(3, 9));
    for (unsigned seed = 0; seed < 5; ++seed) {
        auto psi = r.final_state;
        psi.apply_dense(oracle::haar_unitary(8, seed), 3);
        ASSERT_NEAR(reduced_fidelity(psi, problem.ground_state()), r.final_fidelity, 1e-10);
    }
}

TEST(sweep_unitary, emulate_and_circuit_converge) {
    auto problem = small_problem(0.8, 0.2);
    auto cfg = short_config();
    auto state = init_comb_product(target_state(3, 10), 3);
    double previous = 1.0;
    for (double dt : {0.2, 0.1, 0.05, 0.025}) {
        cfg.dt = dt;
        auto sp = sweep_params(cfg, 0);
        auto a = state;
        auto b = state;
        single_sweep(a, problem, sp, Mode::Emulate);
        single_sweep(b, problem, sp, Mode::Circuit);
        const double infidelity = 1.0 - fidelity(a, b);
        ASSERT_LT(infidelity, previous);
        previous = infidelity;
    }
    ASSERT_LT(previous, 1e-3);
}

TEST(sweep_unitary, matches_single_sweep) {
    auto problem = small_problem();
    auto sp = sweep_params(short_config(), 0);
    auto psi = init_comb_product(target_state(3, 11), 3);
    DenseVector expected = sweep_unitary(problem, sp, Mode::Circuit) * psi.amplitudes();
    single_sweep(psi, problem, sp, Mode::Circuit);
    ASSERT_LT((psi.amplitudes() - expected).norm(), 1e-10);
}

// |F_emulate - F_circuit| <= C dt tf n_iters with C fitted once on this config and seed.
TEST(run_combing, emulate_circuit_gap_bound) {
    constexpr double kPinnedC = 0.08;
    auto problem = small_problem(1.0, 0.0);
    auto cfg = short_config();
    cfg.tf = 8.0;
    cfg.n_iters = 2;
    auto state = target_state(3, 12);
    for (double dt : {0.2, 0.1, 0.05}) {
        cfg.dt = dt;
        auto e = run_combing(cfg, problem, state);
        cfg.mode = Mode::Circuit;
        auto c = run_combing(cfg, problem, state);
        cfg.mode = Mode::Emulate;
        ASSERT_LE(std::abs(e.final_fidelity - c.final_fidelity), kPinnedC * dt * cfg.tf * cfg.n_iters) << dt;
    }
}

TEST(make_initial_state, kinds) {
    auto problem = small_problem();
    CombingConfig cfg;
    Rng rng(1);
    cfg.initial = {InitialState::Kind::BasisState, 5};
    ASSERT_EQ(make_initial_state(cfg, problem, rng), StateVector::basis(3, 5));
    cfg.initial = {InitialState::Kind::BasisState, 8};
    ASSERT_THROW(make_initial_state(cfg, problem, rng), OutOfRange);
    cfg.initial = {InitialState::Kind::GroundStateOfBPlus1, 0};
    auto gs = make_initial_state(cfg, problem, rng);
    auto plus = eigh(sum_matrix(ising_hamiltonian({3, 0.8, 1.0, true})));
    ASSERT_NEAR(std::norm(gs.amplitudes().dot(plus.vectors.col(0))), 1.0, 1e-10);
    cfg.initial = {};
    Rng r1(3);
    Rng r2(3);
    ASSERT_EQ(make_initial_state(cfg, problem, r1), make_initial_state(cfg, problem, r2));
}

TEST(optimize_params, budget_one_returns_the_sample) {
    auto problem = small_problem();
    SearchSpace space;
    space.steps = 10;
    auto base = short_config();
    std::vector<StateVector> states{target_state(3, 13)};
    auto r = optimize_params(space, base, problem, states, Objective::FinalEnergy, 1, 99);
    ASSERT_EQ(r.scores.size(), 1u);
    ASSERT_EQ(r.best_score, r.scores[0]);
    ASSERT_GE(r.best.nu0, space.nu0.lo);
    ASSERT_LE(r.best.nu0, space.nu0.hi);
    ASSERT_NEAR(r.best.dt * 10, r.best.tf, 1e-12);
    ASSERT_DOUBLE_EQ(score_config(r.best, problem, states, Objective::FinalEnergy), r.best_score);
}

TEST(optimize_params, g0_box_cannot_lower_energy) {
    auto problem = small_problem();
    SearchSpace space;
    space.steps = 10;
    space.g = {0.0, 0.0, false};
    auto state = target_state(3, 14);
    std::vector<StateVector> states{state};
    auto r = optimize_params(space, short_config(), problem, states, Objective::FinalEnergy, 4, 1);
    const double initial = expectation(state, problem.hamiltonian().target());
    ASSERT_NEAR(r.best_score, initial, 1e-10);
}

TEST(optimize_params, deterministic_and_errors) {
    auto problem = small_problem();
    SearchSpace space;
    space.steps = 10;
    std::vector<StateVector> states{target_state(3, 15)};
    auto a = optimize_params(space, short_config(), problem, states, Objective::NegGsFidelity, 3, 2);
    auto b = optimize_params(space, short_config(), problem, states, Objective::NegGsFidelity, 3, 2, 2);
    ASSERT_EQ(a.scores, b.scores);
    ASSERT_EQ(a.best.nu0, b.best.nu0);
    ASSERT_THROW(optimize_params(space, short_config(), problem, states, Objective::FinalEnergy, 0, 1),
                 EmptySearchSpace);
    space.tf = {10, 5, false};
    ASSERT_THROW(optimize_params(space, short_config(), problem, states, Objective::FinalEnergy, 1, 1),
                 EmptySearchSpace);
    space = SearchSpace();
    space.g = {0.0, 1.0, true};
    ASSERT_THROW(optimize_params(space, short_config(), problem, states, Objective::FinalEnergy, 1, 1),
                 EmptySearchSpace);
}

TEST(optimize_params, beats_default_config) {
    auto problem = small_problem(0.5, 0.0);
    auto space = default_search_space(problem);
    space.steps = 50;
    CombingConfig base;
    base.tf = 5.0;
    base.dt = 0.1;
    std::vector<StateVector> states{target_state(3, 16)};
    const double reference = score_config(base, problem, states, Objective::FinalEnergy);
    auto r = optimize_params(space, base, problem, states, Objective::FinalEnergy, 200, 4);
    ASSERT_LE(r.best_score, reference);
}
