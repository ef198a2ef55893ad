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

#ifndef COMBSIM_MODELS_H
#define COMBSIM_MODELS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "combsim/linalg.h"
#include "combsim/pauli.h"

namespace combsim {

/// -h sum_i X_i - sum_i Z_i Z_{i+1} + b sum_i Z_i on nt qubits.
struct IsingParams {
    int nt = 3;
    double h = 1.0;
    double b = 0.0;
    bool periodic = true;
};

WeightedPauliSum ising_hamiltonian(const IsingParams &p);

/// Comb register: nc spins with level spacing nu(t) = nu0 (1 - t/tf) and a cyclic
/// three-spin scrambling term of strength kappa * phis[i].
struct CombParams {
    int nc = 3;
    double nu0 = 1.0;
    double kappa = 0.0;
    std::vector<double> phis;  // one per cyclic triple (i, i+1, i+2); empty means all 1
    double tf = 1.0;
};

/// phi_i drawn independently and uniformly from [0.5, 1.5].
std::vector<double> random_phis(int nc, std::uint64_t seed);

/// nu(t) = nu0 (1 - t/tf). Throws OutOfRange outside [0, tf].
double nu_schedule(double nu0, double tf, double t);

/// Number operator sum_i sigma+_i sigma-_i on nc comb qubits; without the identity part
/// this is -1/2 sum_i Z_i.
WeightedPauliSum comb_number_operator(int nc, bool keep_identity = false);

/// kappa sum_cyc phi_i (sigma+_i sigma-_{i+1} sigma-_{i+2} + h.c.). Empty for nc < 3.
WeightedPauliSum comb_scrambler(const CombParams &p);

/// nu * number + scrambler, on nc comb-local qubits. Throws OutOfRange for nu < 0.
WeightedPauliSum comb_hamiltonian(const CombParams &p, double nu, bool keep_identity = false);

/// Comb side of the coupling: sum_i (sigma+_i + sigma+_{i+1} + sigma+_i sigma+_{i+1}) + h.c.
/// over the cyclic nearest-neighbour pairs (i, i+1 mod nc).
WeightedPauliSum comb_coupling_sum(int nc);

struct CouplingMode {
    enum class Kind { OneBodyX, RandomPattern };
    Kind kind = Kind::OneBodyX;
    std::uint64_t seed = 0;

    static CouplingMode one_body_x() {
        return {Kind::OneBodyX, 0};
    }
    static CouplingMode random_pattern(std::uint64_t seed) {
        return {Kind::RandomPattern, seed};
    }
    bool operator==(const CouplingMode &) const = default;
};

/// Target-side operator A. `pauli` is set when A has a Pauli form (OneBodyX).
struct CouplingOperator {
    DenseOperator matrix;
    std::optional<WeightedPauliSum> pauli;
};

/// OneBodyX: -h sum_i X_i. RandomPattern: symmetrized uniform[-1, 1] entries on the nonzero
/// pattern of the target Hamiltonian matrix.
CouplingOperator coupling_operator(const CouplingMode &mode, const IsingParams &p);

/// Nonzero pattern of a target matrix, as used by RandomPattern.
Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> nonzero_mask(const DenseOperator &m);

struct InteractionParams {
    double g = 0.1;
    CouplingMode mode;
};

/// g [A (x) comb_coupling_sum] on nt + nc qubits, target low.
DenseOperator interaction_hamiltonian(double g, const CouplingOperator &a, int nc);

/// Pauli form of the interaction when A has one. Empty optional otherwise.
std::optional<WeightedPauliSum> interaction_pauli(double g, const CouplingOperator &a, int nc);

/// H_targ (x) 1 + 1 (x) H_comb + H_int. Throws DimensionMismatch on inconsistent sizes.
DenseOperator total_hamiltonian(const DenseOperator &target, const WeightedPauliSum &comb,
                                const DenseOperator &interaction);

/// Cached pieces of H_tot(nu, g) = H_targ + kappa part + nu N + g V for repeated evaluation.
class TotalHamiltonian {
   public:
    TotalHamiltonian(const DenseOperator &target, const CombParams &comb, const CouplingOperator &a);

    int nt() const {
        return nt_;
    }
    int nc() const {
        return nc_;
    }
    int nqubits() const {
        return nt_ + nc_;
    }

    DenseOperator at(double nu, double g) const;

    const DenseOperator &target() const {
        return target_;
    }
    /// Target Hamiltonian lifted to the full register.
    const DenseOperator &target_full() const {
        return target_full_;
    }
    const DenseOperator &number_full() const {
        return number_full_;
    }
    /// Interaction for g = 1.
    const DenseOperator &coupling_full() const {
        return coupling_full_;
    }

   private:
    int nt_;
    int nc_;
    DenseOperator target_;
    DenseOperator target_full_;
    DenseOperator static_full_;
    DenseOperator number_full_;
    DenseOperator coupling_full_;
};

/// Minimum of E1(B) - E0(B) over `npoints` evenly spaced B from +1 to -1 (h, nt, periodic from p).
/// npoints must be odd and >= 3 so the grid contains B = 0.
double path_gap(const IsingParams &p, int npoints = 201);

/// Two-level stand-in target: epsilon * sigma+ sigma- on one qubit, identity dropped.
WeightedPauliSum toy_target(double epsilon);
/// Coupling A = X for the toy.
CouplingOperator toy_coupling();

}  // namespace combsim

#endif
