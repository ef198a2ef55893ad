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

#include "combsim/models.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "combsim/errors.h"
#include "combsim/random.h"

namespace combsim {

WeightedPauliSum ising_hamiltonian(const IsingParams &p) {
    if (p.nt < 1) {
        throw std::invalid_argument("Ising chain needs at least one qubit");
    }
    const auto n = static_cast<std::size_t>(p.nt);
    WeightedPauliSum h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.add(-p.h, PauliString::single(n, i, PauliAxis::X));
        h.add(p.b, PauliString::single(n, i, PauliAxis::Z));
    }
    const std::size_t bonds = p.periodic ? n : n - 1;
    for (std::size_t i = 0; i < bonds; ++i) {
        const std::size_t j = (i + 1) % n;
        if (i == j) {
            continue;
        }
        h.add(-1.0, PauliString::sparse(n, {{i, PauliAxis::Z}, {j, PauliAxis::Z}}));
    }
    return h;
}

std::vector<double> random_phis(int nc, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> phis(static_cast<std::size_t>(std::max(nc, 0)));
    for (auto &phi : phis) {
        phi = rng.uniform(0.5, 1.5);
    }
    return phis;
}

double nu_schedule(double nu0, double tf, double t) {
    if (!(tf > 0)) {
        throw OutOfRange("sweep duration must be positive");
    }
    if (t < 0 || t > tf) {
        throw OutOfRange("t = " + std::to_string(t) + " outside [0, " + std::to_string(tf) + "]");
    }
    return nu0 * (1.0 - t / tf);
}

WeightedPauliSum comb_number_operator(int nc, bool keep_identity) {
    const auto n = static_cast<std::size_t>(nc);
    WeightedPauliSum out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out += 0.5 * expand_ladder(n, {{i, Ladder::Number}});
    }
    return keep_identity ? out : out.without_identity();
}

WeightedPauliSum comb_scrambler(const CombParams &p) {
    const auto n = static_cast<std::size_t>(p.nc);
    WeightedPauliSum out(n);
    if (p.nc < 3 || p.kappa == 0.0) {
        return out;
    }
    if (!p.phis.empty() && p.phis.size() != n) {
        throw DimensionMismatch("expected " + std::to_string(n) + " phi couplings, got " +
                                std::to_string(p.phis.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = p.phis.empty() ? 1.0 : p.phis[i];
        auto term = expand_ladder(n, {{i, Ladder::Raise}, {(i + 1) % n, Ladder::Lower}, {(i + 2) % n, Ladder::Lower}});
        out += (p.kappa * phi) * term;
    }
    return out;
}

WeightedPauliSum comb_hamiltonian(const CombParams &p, double nu, bool keep_identity) {
    if (nu < 0) {
        throw OutOfRange("comb level spacing must be non-negative");
    }
    return nu * comb_number_operator(p.nc, keep_identity) + comb_scrambler(p);
}

WeightedPauliSum comb_coupling_sum(int nc) {
    if (nc < 2) {
        throw std::invalid_argument("comb coupling needs at least two comb qubits");
    }
    const auto n = static_cast<std::size_t>(nc);
    WeightedPauliSum out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        out += expand_ladder(n, {{i, Ladder::Raise}});
        out += expand_ladder(n, {{j, Ladder::Raise}});
        out += expand_ladder(n, {{i, Ladder::Raise}, {j, Ladder::Raise}});
    }
    return out;
}

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> nonzero_mask(const DenseOperator &m) {
    return m.cwiseAbs().array() > 0.0;
}

CouplingOperator coupling_operator(const CouplingMode &mode, const IsingParams &p) {
    CouplingOperator out;
    if (mode.kind == CouplingMode::Kind::OneBodyX) {
        const auto n = static_cast<std::size_t>(p.nt);
        WeightedPauliSum a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a.add(-p.h, PauliString::single(n, i, PauliAxis::X));
        }
        out.matrix = sum_matrix(a);
        out.pauli = std::move(a);
        return out;
    }
    const DenseOperator target = sum_matrix(ising_hamiltonian(p));
    const auto mask = nonzero_mask(target);
    Rng rng(mode.seed);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(target.rows(), target.cols());
    for (Eigen::Index j = 0; j < target.rows(); ++j) {
        for (Eigen::Index k = 0; k < target.cols(); ++k) {
            if (mask(j, k)) {
                r(j, k) = rng.uniform(-1.0, 1.0);
            }
        }
    }
    Eigen::MatrixXd sym = 0.5 * (r + r.transpose());
    out.matrix = sym.cast<complex>();
    return out;
}

DenseOperator interaction_hamiltonian(double g, const CouplingOperator &a, int nc) {
    return g * kron(sum_matrix(comb_coupling_sum(nc)), a.matrix);
}

std::optional<WeightedPauliSum> interaction_pauli(double g, const CouplingOperator &a, int nc) {
    if (!a.pauli) {
        return std::nullopt;
    }
    return g * tensor(*a.pauli, comb_coupling_sum(nc));
}

DenseOperator total_hamiltonian(const DenseOperator &target, const WeightedPauliSum &comb,
                                const DenseOperator &interaction) {
    const int nt = operator_qubits(target);
    const int nc = static_cast<int>(comb.nqubits());
    if (operator_qubits(interaction) != nt + nc) {
        throw DimensionMismatch("interaction acts on " + std::to_string(operator_qubits(interaction)) +
                                " qubits, expected " + std::to_string(nt + nc));
    }
    const auto comb_dim = Eigen::Index{1} << nc;
    DenseOperator out = kron(DenseOperator::Identity(comb_dim, comb_dim), target);
    out += embed(sum_matrix(comb), nt, nt + nc);
    out += interaction;
    return out;
}

TotalHamiltonian::TotalHamiltonian(const DenseOperator &target, const CombParams &comb, const CouplingOperator &a)
    : nt_(operator_qubits(target)), nc_(comb.nc), target_(target) {
    if (a.matrix.rows() != target.rows() || a.matrix.cols() != target.cols()) {
        throw DimensionMismatch("coupling operator does not match the target space");
    }
    const int n = nt_ + nc_;
    const auto comb_dim = Eigen::Index{1} << nc_;
    target_full_ = kron(DenseOperator::Identity(comb_dim, comb_dim), target);
    static_full_ = target_full_ + embed(sum_matrix(comb_scrambler(comb)), nt_, n);
    number_full_ = embed(sum_matrix(comb_number_operator(nc_)), nt_, n);
    coupling_full_ = interaction_hamiltonian(1.0, a, nc_);
}

DenseOperator TotalHamiltonian::at(double nu, double g) const {
    DenseOperator h = static_full_;
    h += nu * number_full_;
    if (g != 0.0) {
        h += g * coupling_full_;
    }
    return h;
}

double path_gap(const IsingParams &p, int npoints) {
    if (npoints < 3 || npoints % 2 == 0) {
        throw std::invalid_argument("B grid needs an odd number (>= 3) of points so that it contains B = 0");
    }
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < npoints; ++k) {
        IsingParams q = p;
        q.b = 1.0 - 2.0 * k / (npoints - 1);
        auto ev = eigvalsh(sum_matrix(ising_hamiltonian(q)));
        best = std::min(best, ev[1] - ev[0]);
    }
    return best;
}

WeightedPauliSum toy_target(double epsilon) {
    return (0.5 * epsilon * expand_ladder(1, {{0, Ladder::Number}})).without_identity();
}

CouplingOperator toy_coupling() {
    CouplingOperator out;
    WeightedPauliSum a(1);
    a.add(1.0, PauliString::single(1, 0, PauliAxis::X));
    out.matrix = sum_matrix(a);
    out.pauli = std::move(a);
    return out;
}

}  // namespace combsim
