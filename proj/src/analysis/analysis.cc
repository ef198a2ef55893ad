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

#include "combsim/analysis.h"

#include <algorithm>
#include <cmath>

#include "combsim/errors.h"
#include "combsim/parallel.h"

namespace combsim {

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) {
        return {};
    }
    if (n == 1) {
        return {a};
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    }
    out.back() = b;
    return out;
}

SpectrumSweep spectrum_sweep(const CombingProblem &problem, const CombParams &comb, double g,
                             std::span<const double> times) {
    const TotalHamiltonian h(problem.hamiltonian().target(), comb, problem.coupling());
    SpectrumSweep out;
    for (double t : times) {
        const Eigen::VectorXd ev = eigvalsh(h.at(nu_schedule(comb.nu0, comb.tf, t), g));
        out.times.push_back(t);
        out.rows.emplace_back(ev.data(), ev.data() + ev.size());
    }
    return out;
}

CombingProblem toy_problem(const ToyParams &p) {
    return CombingProblem(sum_matrix(toy_target(p.epsilon)), toy_coupling(), 2);
}

CombParams toy_comb(const ToyParams &p) {
    CombParams c;
    c.nc = 2;
    c.nu0 = p.nu0;
    c.kappa = 0.0;
    c.tf = p.tf;
    return c;
}

DenseOperator toy_symmetric_sector(const CombingProblem &problem, const CombParams &comb, double g, double t) {
    if (problem.nc() != 2) {
        throw DimensionMismatch("symmetric sector is defined for a two-qubit comb");
    }
    const TotalHamiltonian h(problem.hamiltonian().target(), comb, problem.coupling());
    const Eigen::Index td = Eigen::Index{1} << problem.nt();
    DenseOperator iso = DenseOperator::Zero(4 * td, 3 * td);
    const double r = 1.0 / std::sqrt(2.0);
    for (Eigen::Index a = 0; a < td; ++a) {
        iso(a, a) = 1.0;
        iso(a + 1 * td, a + td) = r;
        iso(a + 2 * td, a + td) = r;
        iso(a + 3 * td, a + 2 * td) = 1.0;
    }
    return iso.adjoint() * h.at(nu_schedule(comb.nu0, comb.tf, t), g) * iso;
}

std::vector<Crossing> toy_avoided_crossings(const ToyParams &p) {
    const CombingProblem problem = toy_problem(p);
    const CombParams comb = toy_comb(p);
    const auto &e = problem.target_eigen().values;
    struct Level {
        double e;
        int k;
    };
    std::vector<Level> levels;
    for (Eigen::Index a = 0; a < e.size(); ++a) {
        for (int k = 0; k <= 2; ++k) {
            levels.push_back({e[a], k});
        }
    }
    auto sector_gap = [&](double g, double t, int level) {
        const Eigen::VectorXd ev = eigvalsh(toy_symmetric_sector(problem, comb, g, t));
        return ev[level + 1] - ev[level];
    };
    std::vector<Crossing> out;
    for (const auto &lo : levels) {
        for (const auto &hi : levels) {
            // lo sits below hi at large nu only if it carries fewer excitations
            if (!(hi.e > lo.e) || hi.k >= lo.k) {
                continue;
            }
            const double nu = (hi.e - lo.e) / (lo.k - hi.k);
            if (!(nu > 0 && nu < p.nu0)) {
                continue;
            }
            Crossing c;
            c.t = p.tf * (1.0 - nu / p.nu0);
            c.energy = hi.e + nu * hi.k;
            for (const auto &l : levels) {
                c.level += l.e + nu * l.k < c.energy - 1e-9;
            }
            c.gap_uncoupled = sector_gap(0.0, c.t, c.level);
            const double half = p.tf * 0.25 * nu / p.nu0;
            const auto grid = linspace(std::max(0.0, c.t - half), std::min(p.tf, c.t + half), 401);
            double best = sector_gap(p.g, grid[0], c.level);
            std::size_t at = 0;
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double gap = sector_gap(p.g, grid[i], c.level);
                if (gap < best) {
                    best = gap;
                    at = i;
                }
            }
            // golden-section refinement between the neighbors of the grid minimum
            double a = grid[at == 0 ? 0 : at - 1];
            double b = grid[std::min(at + 1, grid.size() - 1)];
            const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
            for (int it = 0; it < 60; ++it) {
                const double x1 = b - phi * (b - a);
                const double x2 = a + phi * (b - a);
                if (sector_gap(p.g, x1, c.level) < sector_gap(p.g, x2, c.level)) {
                    b = x2;
                } else {
                    a = x1;
                }
            }
            c.t_min = (a + b) / 2;
            c.gap_coupled = std::min(best, sector_gap(p.g, c.t_min, c.level));
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing &x, const Crossing &y) { return x.t < y.t; });
    return out;
}

std::vector<EnsembleRecord> ensemble_success(const CombingConfig &cfg, const CombingProblem &problem, int members,
                                             Sampler sampler, std::uint64_t seed, int threads) {
    cfg.validate();
    const SweepCache cache = build_sweep_cache(cfg, problem);
    const Rng base(seed);
    std::vector<EnsembleRecord> out(static_cast<std::size_t>(std::max(members, 0)));
    parallel_for(out.size(), threads, [&](std::size_t m) {
        const std::uint64_t member_seed = base.split(m).next_u64();
        Rng state_rng = Rng(member_seed).split(0);
        const StateVector start =
            sampler == Sampler::Haar
                ? random_target_state(problem.nt(), state_rng)
                : StateVector::basis(problem.nt(), state_rng.next_u64() % (std::uint64_t{1} << problem.nt()));
        CombingConfig c = cfg;
        c.seed = member_seed;
        RunOptions opt;
        opt.cache = &cache;
        const RunResult r = run_combing(c, problem, start, opt);
        EnsembleRecord &rec = out[m];
        rec.seed = member_seed;
        rec.initial_fidelity = r.initial_fidelity;
        rec.final_fidelity = r.final_fidelity;
        rec.steps = r.total_steps;
        for (const auto &it : r.iterations) {
            if (it.outcome) {
                rec.outcomes.push_back(it.outcome->packed());
            }
        }
    });
    std::sort(out.begin(), out.end(), [](const EnsembleRecord &a, const EnsembleRecord &b) { return a.seed < b.seed; });
    return out;
}

std::vector<TrajectoryRow> overlap_trajectory(const CombingConfig &cfg, const CombingProblem &problem,
                                              const StateVector &target_state, int k, RunResult *result) {
    const int full = 1 << problem.nt();
    if (k < 0 || k > full) {
        throw OutOfRange("K = " + std::to_string(k) + " exceeds the " + std::to_string(full) + " target eigenstates");
    }
    RunOptions opt;
    opt.record_trajectory = true;
    opt.k_overlaps = k;
    const RunResult r = run_combing(cfg, problem, target_state, opt);
    std::vector<TrajectoryRow> rows;
    for (std::size_t i = 0; i < r.iterations.size(); ++i) {
        const auto &traj = r.iterations[i].trajectory;
        for (std::size_t s = 0; s < traj.size(); ++s) {
            TrajectoryRow row;
            row.iter = static_cast<int>(i);
            row.step = static_cast<int>(s);
            row.t = traj[s].t;
            row.energy = traj[s].energy;
            row.residual = traj[s].energy - problem.ground_energy();
            row.overlaps = traj[s].overlaps;
            rows.push_back(std::move(row));
        }
    }
    if (result) {
        *result = r;
    }
    return rows;
}

double median(std::vector<double> v) {
    if (v.empty()) {
        throw OutOfRange("median of an empty list");
    }
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace combsim
