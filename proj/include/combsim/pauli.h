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

#ifndef COMBSIM_PAULI_H
#define COMBSIM_PAULI_H

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combsim/linalg.h"

namespace combsim {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);

/// Tensor product of single-qubit Pauli matrices times a phase i^k.
///
/// Textual form lists qubit 0 first, e.g. "XIZ" is X on qubit 0 and Z on qubit 2.
/// An optional sign prefix ("+", "-", "i", "-i") sets the phase.
class PauliString {
   public:
    explicit PauliString(std::size_t nqubits = 0) : axes_(nqubits, PauliAxis::I) {
    }
    PauliString(std::vector<PauliAxis> axes, std::uint8_t phase_exponent = 0);

    static PauliString from_str(std::string_view text);
    static PauliString single(std::size_t nqubits, std::size_t qubit, PauliAxis axis);
    /// Identity except for the listed (qubit, axis) pairs.
    static PauliString sparse(std::size_t nqubits, std::initializer_list<std::pair<std::size_t, PauliAxis>> ops);

    std::size_t size() const {
        return axes_.size();
    }
    PauliAxis operator[](std::size_t q) const {
        return axes_[q];
    }
    const std::vector<PauliAxis> &axes() const {
        return axes_;
    }
    /// Phase is i^phase_exponent().
    std::uint8_t phase_exponent() const {
        return phase_;
    }
    complex phase() const;
    bool is_identity() const;
    /// Same axes with phase +1.
    PauliString unsigned_part() const;

    PauliString operator*(const PauliString &rhs) const;
    bool commutes_with(const PauliString &rhs) const;

    /// Places this string on qubits [offset, offset + size()) of a larger register.
    PauliString embedded(std::size_t offset, std::size_t nqubits) const;

    std::string str() const;

    bool operator==(const PauliString &) const = default;
    auto operator<=>(const PauliString &) const = default;

   private:
    std::vector<PauliAxis> axes_;
    std::uint8_t phase_ = 0;
};

/// phase * (x)_q sigma^{axes[q]}; qubit 0 is the least significant index bit.
DenseOperator string_matrix(const PauliString &s);

/// Hermitian operator sum_k c_k P_k with real c_k and phase-free, pairwise distinct P_k.
class WeightedPauliSum {
   public:
    struct Term {
        double coefficient;
        PauliString string;
    };

    explicit WeightedPauliSum(std::size_t nqubits = 0) : nqubits_(nqubits) {
    }

    std::size_t nqubits() const {
        return nqubits_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }

    /// Adds c * s. A -1 phase on `s` is folded into c; an imaginary phase is rejected.
    WeightedPauliSum &add(double c, const PauliString &s);
    WeightedPauliSum &operator+=(const WeightedPauliSum &rhs);
    WeightedPauliSum &operator*=(double scale);

    double coefficient(const PauliString &s) const;
    double identity_coefficient() const;
    WeightedPauliSum without_identity() const;
    /// Drops terms with |c| <= tol.
    WeightedPauliSum pruned(double tol) const;

    /// Terms in canonical (lexicographic string) order.
    std::vector<Term> terms() const;

    WeightedPauliSum embedded(std::size_t offset, std::size_t nqubits) const;

    std::string str() const;

   private:
    std::size_t nqubits_;
    std::map<PauliString, double> terms_;
};

WeightedPauliSum operator+(WeightedPauliSum a, const WeightedPauliSum &b);
WeightedPauliSum operator*(double scale, WeightedPauliSum a);

/// low (x) high, with `high` placed on the qubits above `low`.
WeightedPauliSum tensor(const WeightedPauliSum &low, const WeightedPauliSum &high);

DenseOperator sum_matrix(const WeightedPauliSum &h);

enum class Ladder : std::uint8_t {
    I,
    Raise,   // |1><0|, i.e. |down> -> |up>
    Lower,   // |0><1|
    Z,
    Number,  // |1><1| = raise * lower
};

/// Pauli expansion of P + P^dag for the site product P = (x)_q ladder[q].
WeightedPauliSum expand_ladder(std::span<const Ladder> sites);

/// Places `ops` at the given qubits of an n-qubit register (identity elsewhere) and expands P + P^dag.
WeightedPauliSum expand_ladder(std::size_t nqubits, std::initializer_list<std::pair<std::size_t, Ladder>> ops);

}  // namespace combsim

#endif
