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

#ifndef COMBSIM_STATEVECTOR_H
#define COMBSIM_STATEVECTOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "combsim/linalg.h"
#include "combsim/random.h"

namespace combsim {

using Gate1 = Eigen::Matrix2cd;
/// Two-qubit gate in the local basis index 2 * bit(q1) + bit(q2).
using Gate2 = Eigen::Matrix4cd;

/// Outcome of a projective Z measurement on a subset of qubits.
struct MeasurementRecord {
    std::vector<int> qubits;
    std::vector<std::uint8_t> bits;  // bits[j] belongs to qubits[j]
    double probability = 1.0;

    /// Outcome packed with bits[j] at bit position j.
    std::uint64_t packed() const;
    bool operator==(const MeasurementRecord &) const = default;
};

enum class UnitaryCheck { Verify, Skip };

/// Normalized amplitudes over 2^n basis states; qubit 0 is the least significant index bit.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(int nqubits);
    /// Takes ownership of `amplitudes`; they must have length 2^n and unit norm (1e-10).
    StateVector(int nqubits, DenseVector amplitudes);

    static StateVector basis(int nqubits, std::size_t index);

    int nqubits() const {
        return nqubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(amps_.size());
    }
    const DenseVector &amplitudes() const {
        return amps_;
    }
    complex operator[](std::size_t i) const {
        return amps_[static_cast<Eigen::Index>(i)];
    }
    double norm_squared() const {
        return amps_.squaredNorm();
    }

    /// Throws NonUnitaryGate / QubitOutOfRange.
    void apply_1q(const Gate1 &gate, int qubit);
    void apply_2q(const Gate2 &gate, int q1, int q2);
    /// Applies `u` to qubits [first_qubit, first_qubit + k).
    void apply_dense(const DenseOperator &u, int first_qubit = 0, UnitaryCheck check = UnitaryCheck::Verify);
    void apply_x(int qubit);

    /// Born-rule Z measurement of `qubits`, collapsing and renormalizing the state.
    MeasurementRecord measure(std::span<const int> qubits, Rng &rng);
    /// Flips every measured qubit whose recorded outcome was 1. Throws StaleRecord when the
    /// record does not belong to `qubits`.
    void reset_down(std::span<const int> qubits, const MeasurementRecord &record);

    bool operator==(const StateVector &other) const {
        return nqubits_ == other.nqubits_ && amps_ == other.amps_;
    }

   private:
    void check_qubit(int q) const;

    int nqubits_;
    DenseVector amps_;
};

/// target (x) |0...0>_comb with the comb on the nc qubits above the target.
StateVector init_comb_product(const StateVector &target, int nc);

/// Haar-random state: complex standard normal amplitudes, normalized.
StateVector random_target_state(int nqubits, Rng &rng);

complex overlap(const StateVector &a, const StateVector &b);
double fidelity(const StateVector &a, const StateVector &b);
/// Re <psi|H|psi>.
double expectation(const StateVector &psi, const DenseOperator &h);

/// sum_c |<phi, c|psi>|^2: population of target state `phi` with the upper (comb) qubits traced out.
double reduced_fidelity(const StateVector &psi, const DenseVector &phi);
/// reduced_fidelity against the first k columns of `basis`.
std::vector<double> reduced_overlaps(const StateVector &psi, const DenseOperator &basis, int k);

/// Comb qubit indices nt .. nt + nc - 1.
std::vector<int> comb_qubits(int nt, int nc);

}  // namespace combsim

#endif
