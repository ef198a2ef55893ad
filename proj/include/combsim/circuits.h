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

#ifndef COMBSIM_CIRCUITS_H
#define COMBSIM_CIRCUITS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "combsim/linalg.h"
#include "combsim/models.h"
#include "combsim/statevector.h"

namespace combsim {

enum class GateKind { H, S, Sdg, Rz, CNOT, SWAP };

const char *gate_name(GateKind k);

/// Rz(theta) = diag(e^{-i theta}, e^{i theta}). For CNOT, q0 is the control.
struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    double theta = 0.0;

    bool two_qubit() const {
        return kind == GateKind::CNOT || kind == GateKind::SWAP;
    }
    bool operator==(const Gate &) const = default;
};

class Circuit {
   public:
    explicit Circuit(int nqubits = 0) : nqubits_(nqubits) {
    }

    int nqubits() const {
        return nqubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    std::size_t rotation_count() const;

    /// Throws QubitOutOfRange.
    Circuit &push(const Gate &g);
    Circuit &h(int q) {
        return push({GateKind::H, q});
    }
    Circuit &s(int q) {
        return push({GateKind::S, q});
    }
    Circuit &sdg(int q) {
        return push({GateKind::Sdg, q});
    }
    Circuit &rz(int q, double theta) {
        return push({GateKind::Rz, q, -1, theta});
    }
    Circuit &cnot(int control, int target) {
        return push({GateKind::CNOT, control, target});
    }
    Circuit &swap(int a, int b) {
        return push({GateKind::SWAP, a, b});
    }
    /// Appends every gate of `other`, which must not be wider than this circuit.
    Circuit &append(const Circuit &other);

    bool operator==(const Circuit &) const = default;

   private:
    int nqubits_;
    std::vector<Gate> gates_;
};

/// One first-order step of the Ising propagator on qubits [0, nt). The field layer is emitted when
/// `with_field` is set, even for b = 0, so that the gate tally stays fixed along a B sweep.
Circuit target_step_circuit(const IsingParams &p, double dt, bool with_field);
Circuit target_step_circuit(const IsingParams &p, double dt);

/// Comb propagator at time t on qubits [offset, offset + nc) of an (offset + nc)-qubit register.
Circuit comb_step_circuit(const CombParams &p, double t, double dt, int offset = 0);

/// Interaction propagator for the one-body X coupling; comb qubits follow the nt target qubits.
/// Throws UnsupportedCoupling for RandomPattern.
Circuit interaction_step_circuit(const InteractionParams &ip, const IsingParams &p, int nc, double dt);

/// target | comb | interaction for the step starting at time t.
Circuit trotter_step_circuit(const IsingParams &ising, const CombParams &comb, const InteractionParams &ip, double t,
                             double dt);

void run_circuit(const Circuit &c, StateVector &s);

/// Throws TooLarge above 8 qubits.
DenseOperator circuit_unitary(const Circuit &c);

Gate1 gate_matrix_1q(const Gate &g);

struct GateCount {
    long total = 0;
    long rotations = 0;
    long target = 0;
    long comb = 0;
    long interaction = 0;
};

GateCount gate_count(int nt, int nc, bool with_b);

/// Per-step QAA cost: the target circuit with the field layer.
long qaa_step_gates(int nt);

/// One gate per line: `KIND q0 [q1] [theta]`.
void dump_circuit(const Circuit &c, std::ostream &out);
Circuit parse_circuit(std::istream &in, int nqubits);

}  // namespace combsim

#endif
