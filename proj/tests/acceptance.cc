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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "combsim/analysis.h"
#include "combsim/circuits.h"
#include "combsim/config.h"
#include "combsim/errors.h"
#include "combsim/qaa.h"
#include "circuit_oracle.h"
#include "oracle.h"

using namespace combsim;
using namespace circuit_oracle;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string &what) {
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

std::string fixture(const std::string &name) {
    return std::string(COMBSIM_FIXTURE_DIR) + "/" + name;
}

Outcome gate_counts() {
    Outcome o;
    o.check(gate_count(3, 3, true).total == 283, "gate_count(3,3,B) != 283");
    o.check(gate_count(4, 3, true).total == 347, "gate_count(4,3,B) != 347");
    o.check(qaa_step_gates(3) == 21, "QAA nt=3 != 21");
    o.check(qaa_step_gates(4) == 28, "QAA nt=4 != 28");
    for (int nt : {3, 4}) {
        IsingParams p{nt, 1.0, 0.5, true};
        CombParams c;
        c.nc = 3;
        c.kappa = 0.1;
        InteractionParams ip{0.2, CouplingMode::one_body_x()};
        const auto full = trotter_step_circuit(p, c, ip, 0.0, 0.1);
        o.check(static_cast<long>(full.size()) == gate_count(nt, 3, true).total, "enumerated step differs");
        o.check(static_cast<long>(full.rotation_count()) == gate_count(nt, 3, true).rotations,
                "enumerated rotations differ");
        QaaConfig q;
        q.ising = p;
        q.n_steps = 1;
        q.mode = Mode::Circuit;
        o.check(run_qaa(q).gates == qaa_step_gates(nt), "enumerated QAA step differs");
    }
    o.note("283/347 total, 21/28 QAA");
    return o;
}

Outcome circuit_correctness() {
    Outcome o;
    const int nt = 3;
    const int nc = 3;
    const double h = 0.9;
    const double b = 0.3;
    const double g = 0.4;
    const double dt = 0.17;
    const double t = 1.3;
    CombParams comb;
    comb.nc = nc;
    comb.nu0 = 2.0;
    comb.kappa = 0.3;
    comb.phis = {0.8, 1.3, 1.1};
    comb.tf = 5.0;
    InteractionParams ip{g, CouplingMode::one_body_x()};
    const IsingParams ising{nt, h, b, true};

    const double d_target =
        oracle::phase_distance(circuit_unitary(target_step_circuit(ising, dt)), ordered_exponentials(target_terms(nt, h, b), dt, nt));
    const double d_comb = oracle::phase_distance(
        circuit_unitary(comb_step_circuit(comb, t, dt)),
        ordered_exponentials(comb_terms(nc, nu_schedule(comb.nu0, comb.tf, t), comb.kappa, comb.phis), dt, nc));
    const double d_int = oracle::phase_distance(circuit_unitary(interaction_step_circuit(ip, ising, nc, dt)),
                                                ordered_exponentials(interaction_terms(nt, nc, g, h), dt, nt + nc));
    o.check(d_target <= 1e-12, "target block off by " + fmt("%.3g", d_target));
    o.check(d_comb <= 1e-12, "comb block off by " + fmt("%.3g", d_comb));
    o.check(d_int <= 1e-12, "interaction block off by " + fmt("%.3g", d_int));

    const TotalHamiltonian htot(sum_matrix(ising_hamiltonian(ising)), comb, coupling_operator(ip.mode, ising));
    const DenseOperator exact_h = htot.at(nu_schedule(comb.nu0, comb.tf, t), g);
    auto error = [&](double step) {
        return oracle::phase_distance(circuit_unitary(trotter_step_circuit(ising, comb, ip, t, step)),
                                      expm_hermitian(exact_h, step));
    };
    const double ratio = error(0.04) / error(0.02);
    o.check(ratio >= 3.5 && ratio <= 4.5, "Trotter halving ratio " + fmt("%.4f", ratio));
    o.note("max block error " + fmt("%.2g", std::max({d_target, d_comb, d_int})) + ", halving ratio " +
           fmt("%.3f", ratio));
    return o;
}

Outcome comb_decomposition() {
    Outcome o;
    // Brute force: build sum_cyc (s+ s- s- + h.c.) from 2x2 matrices and project on all 64 Pauli strings.
    oracle::Mat m = oracle::Mat::Zero(8, 8);
    for (int i = 0; i < 3; ++i) {
        std::string ops = "___";
        ops[static_cast<std::size_t>(i)] = '+';
        ops[static_cast<std::size_t>((i + 1) % 3)] = '-';
        ops[static_cast<std::size_t>((i + 2) % 3)] = '-';
        const oracle::Mat t = oracle::product(ops);
        m += t + t.adjoint();
    }
    CombParams unit;
    unit.nc = 3;
    unit.kappa = 1.0;
    const auto library = comb_scrambler(unit);
    const std::string axes = "IXYZ";
    double worst = 0.0;
    for (char a : axes) {
        for (char b : axes) {
            for (char c : axes) {
                const std::string s{a, b, c};
                const double brute = ((oracle::product(s).adjoint() * m).trace() / 8.0).real();
                double expected = 0.0;
                if (s == "XXX") {
                    expected = 0.75;
                } else if (s == "XYY" || s == "YXY" || s == "YYX") {
                    expected = 0.25;
                }
                worst = std::max(worst, std::abs(brute - expected));
                worst = std::max(worst, std::abs(library.coefficient(PauliString::from_str(s)) - expected));
            }
        }
    }
    o.check(worst <= 1e-12, "coefficient error " + fmt("%.3g", worst));
    o.note("XXX 3/4, XYY/YXY/YYX 1/4, max error " + fmt("%.2g", worst));
    return o;
}

const std::vector<double> kHGrid = {0.4, 0.5, 0.6, 0.8, 1.0};

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome qaa_scaling() {
    Outcome o;
    std::vector<double> inv_gap;
    std::vector<double> steps;
    for (double h : kHGrid) {
        inv_gap.push_back(1.0 / path_gap({3, h, 0.0, true}, 201));
        steps.push_back(static_cast<double>(steps_to_success(h, 3)));
    }
    const double slope = loglog_slope(inv_gap, steps);
    o.check(std::abs(slope - 2.0) <= 0.3, "slope " + fmt("%.3f", slope));
    o.note("slope " + fmt("%.3f", slope) + ", N* from " + fmt("%.0f", steps.back()) + " to " + fmt("%.0f", steps.front()));
    return o;
}

Outcome sc_flat_scaling() {
    Outcome o;
    auto provider = [](double h) {
        char name[32];
        std::snprintf(name, sizeof(name), "cost/h%g.ini", h);
        const auto app = parse_config(fixture(name));
        if (app.comb.n_iters != 1 || app.ising.b != -1.0) {
            throw ConfigError("run.n_iters", "cost fixtures must be single-comb runs at B = -1");
        }
        return app.comb;
    };
    const auto points = compare_cost(kHGrid, 3, provider, 0);
    long sc_lo = -1;
    long sc_hi = 0;
    long qaa_lo = -1;
    long qaa_hi = 0;
    for (const auto &p : points) {
        long &lo = p.method == "SC" ? sc_lo : qaa_lo;
        long &hi = p.method == "SC" ? sc_hi : qaa_hi;
        lo = lo < 0 ? p.gates : std::min(lo, p.gates);
        hi = std::max(hi, p.gates);
    }
    const double sc_ratio = static_cast<double>(sc_hi) / static_cast<double>(sc_lo);
    const double qaa_ratio = static_cast<double>(qaa_hi) / static_cast<double>(qaa_lo);
    o.check(sc_ratio < 3.0, "SC cost varies by " + fmt("%.2f", sc_ratio));
    o.check(qaa_ratio > 10.0, "QAA cost varies by " + fmt("%.2f", qaa_ratio));
    o.note("SC gates " + std::to_string(sc_lo) + ".." + std::to_string(sc_hi) + " (x" + fmt("%.2f", sc_ratio) +
           "), QAA gates " + std::to_string(qaa_lo) + ".." + std::to_string(qaa_hi) + " (x" + fmt("%.1f", qaa_ratio) + ")");
    return o;
}

Outcome ensemble_criterion() {
    Outcome o;
    const auto app = parse_config(fixture("ensemble.ini"));
    o.check(app.ising.nt == 3 && app.ising.h == 0.5 && app.comb.n_iters == 2 && app.comb.total_steps() == 2000,
            "fixture is not the nt=3, h=0.5, 2 x 1000 step setup");
    const CombingProblem problem(app.ising, app.comb.coupling, app.comb.nc);
    const auto records = ensemble_success(app.comb, problem, 200, Sampler::Haar, app.comb.seed, 0);
    std::vector<double> finals;
    int improved = 0;
    for (const auto &r : records) {
        finals.push_back(r.final_fidelity);
        improved += r.final_fidelity > r.initial_fidelity ? 1 : 0;
    }
    const double frac = improved / static_cast<double>(records.size());
    const double med = median(finals);
    o.check(records.size() == 200, "ensemble size " + std::to_string(records.size()));
    o.check(frac >= 0.7, "improved fraction " + fmt("%.3f", frac));
    o.check(med >= 0.5, "median final fidelity " + fmt("%.4f", med));
    o.note("improved " + fmt("%.3f", frac) + ", median final fidelity " + fmt("%.4f", med));
    return o;
}

Outcome trajectory_criterion() {
    Outcome o;
    const auto app = parse_config(fixture("trajectory.ini"));
    o.check(app.ising.nt == 3 && app.ising.h == 2.0 && app.comb.nc == 3 && app.comb.steps() == 500,
            "fixture is not the nt=3, h=2, nc=3, 500 step setup");
    o.check(app.comb.n_iters <= 12, "more than 12 iterations");
    const CombingProblem problem(app.ising, app.comb.coupling, app.comb.nc);
    Rng rng = Rng(app.comb.seed).split(0);
    const StateVector start = make_initial_state(app.comb, problem, rng);
    const auto r = run_combing(app.comb, problem, start);
    o.check(r.initial_fidelity <= 0.05, "initial fidelity " + fmt("%.4f", r.initial_fidelity));
    o.check(r.final_fidelity >= 0.9, "final fidelity " + fmt("%.4f", r.final_fidelity));
    o.note("fidelity " + fmt("%.4f", r.initial_fidelity) + " -> " + fmt("%.5f", r.final_fidelity) + " in " +
           std::to_string(app.comb.n_iters) + " iterations");
    return o;
}

Outcome invariants() {
    Outcome o;
    const IsingParams ising{3, 1.3, 0.2, true};
    const CombingProblem problem(ising, CouplingMode::one_body_x(), 3);
    CombingConfig cfg;
    cfg.nu0 = 6.0;
    cfg.tf = 6.0;
    cfg.dt = 0.1;
    cfg.g = 0.3;
    cfg.kappa = 0.1;
    cfg.n_iters = 3;
    cfg.seed = 21;
    Rng rng(5);
    const StateVector start = random_target_state(3, rng);

    // Norm preservation in both modes.
    for (auto mode : {Mode::Emulate, Mode::Circuit}) {
        cfg.mode = mode;
        const auto r = run_combing(cfg, problem, start);
        o.check(std::abs(r.final_state.norm_squared() - 1.0) <= 1e-10, std::string("norm drift in ") + mode_name(mode));
    }
    cfg.mode = Mode::Emulate;

    // Hermiticity and eigensystem residuals along the sweep.
    double herm = 0;
    double resid = 0;
    for (double t : linspace(0.0, cfg.tf, 7)) {
        const DenseOperator h = problem.hamiltonian().at(nu_schedule(cfg.nu0, cfg.tf, t), cfg.g);
        herm = std::max(herm, (h - h.adjoint()).cwiseAbs().maxCoeff());
        const auto es = eigh(h);
        for (Eigen::Index k = 0; k < es.values.size(); ++k) {
            resid = std::max(resid, (h * es.vectors.col(k) - es.values[k] * es.vectors.col(k)).norm());
        }
    }
    o.check(herm <= 1e-12, "Hermiticity error " + fmt("%.3g", herm));
    o.check(resid <= 1e-9, "eigen residual " + fmt("%.3g", resid));

    // Born rule on a fixed three-qubit state.
    DenseVector amps(8);
    amps << 0.1, complex(0.2, 0.3), 0.4, -0.15, complex(0, 0.5), 0.25, 0.3, complex(-0.2, 0.1);
    amps.normalize();
    const StateVector born(3, amps);
    const int trials = 100000;
    std::vector<int> counts(8, 0);
    Rng mrng(77);
    const std::vector<int> all{0, 1, 2};
    for (int i = 0; i < trials; ++i) {
        StateVector s = born;
        counts[s.measure(all, mrng).packed()]++;
    }
    double worst_sigma = 0;
    for (int k = 0; k < 8; ++k) {
        const double p = std::norm(amps[k]);
        const double sigma = std::sqrt(trials * p * (1 - p));
        worst_sigma = std::max(worst_sigma, std::abs(counts[static_cast<std::size_t>(k)] - trials * p) / sigma);
    }
    o.check(worst_sigma <= 4.0, "Born rule deviation " + fmt("%.2f", worst_sigma) + " sigma");

    // Seed determinism.
    const auto a = run_combing(cfg, problem, start);
    const auto b = run_combing(cfg, problem, start);
    o.check(a.final_state == b.final_state, "repeat run not bit-identical");

    // Comb-local unitary invariance.
    double local = 0;
    for (unsigned seed = 0; seed < 4; ++seed) {
        StateVector s = a.final_state;
        s.apply_dense(oracle::haar_unitary(8, seed), 3);
        local = std::max(local, std::abs(reduced_fidelity(s, problem.ground_state()) - a.final_fidelity));
    }
    o.check(local <= 1e-10, "comb-local unitary changed fidelity by " + fmt("%.3g", local));

    // g = 0 control.
    cfg.g = 0.0;
    RunOptions opt;
    opt.record_trajectory = true;
    const auto ctl = run_combing(cfg, problem, start, opt);
    double drift = 0;
    for (const auto &it : ctl.iterations) {
        for (const auto &p : it.trajectory) {
            drift = std::max(drift, std::abs(p.fidelity - ctl.initial_fidelity));
        }
    }
    o.check(drift <= 1e-10, "g=0 fidelity drift " + fmt("%.3g", drift));
    o.note("herm " + fmt("%.1g", herm) + ", residual " + fmt("%.1g", resid) + ", Born " + fmt("%.2f", worst_sigma) +
           " sigma, local " + fmt("%.1g", local) + ", g=0 drift " + fmt("%.1g", drift));
    return o;
}

Outcome avoided_crossings() {
    Outcome o;
    ToyParams tp;
    const auto crossings = toy_avoided_crossings(tp);
    o.check(!crossings.empty(), "no crossings found");
    double min_gap = 1e300;
    for (const auto &c : crossings) {
        min_gap = std::min(min_gap, c.gap_coupled);
        o.check(c.gap_coupled > 0.0, "crossing at t=" + fmt("%.3f", c.t) + " stays closed");
    }

    // Slow-sweep search: double tf until the excited target level is emptied.
    const CombingProblem problem = toy_problem(tp);
    CombingConfig cfg;
    cfg.nc = 2;
    cfg.nu0 = tp.nu0;
    cfg.g = tp.g;
    cfg.kappa = 0.0;
    cfg.dt = 0.1;
    const StateVector excited = StateVector::basis(1, 1);
    double transferred = 0;
    double tf = 10.0;
    for (; tf <= 2560.0; tf *= 2) {
        cfg.tf = tf;
        const auto r = run_combing(cfg, problem, excited);
        transferred = r.final_fidelity - r.initial_fidelity;
        if (transferred >= 0.9) {
            break;
        }
    }
    o.check(transferred >= 0.9, "best transfer " + fmt("%.4f", transferred));
    o.note(std::to_string(crossings.size()) + " crossings, min gap " + fmt("%.3g", min_gap) + ", transfer " +
           fmt("%.4f", transferred) + " at tf=" + fmt("%g", tf));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"gate-count reproduction", gate_counts},
        {"circuit correctness", circuit_correctness},
        {"comb decomposition oracle", comb_decomposition},
        {"QAA scaling", qaa_scaling},
        {"SC flat scaling", sc_flat_scaling},
        {"ensemble success", ensemble_criterion},
        {"multi-iteration trajectory", trajectory_criterion},
        {"invariant suite", invariants},
        {"avoided-crossing check", avoided_crossings},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu %s: %s (%s) [%.1fs]\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
