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

#include "combsim/statevector.h"

#include <cmath>
#include <string>

#include "combsim/errors.h"

namespace combsim {

namespace {

constexpr double kNormTol = 1e-10;

template <typename M>
void require_unitary(const M &g, const char *what) {
    const auto id = M::Identity(g.rows(), g.cols());
    if ((g.adjoint() * g - id).norm() > kNormTol * std::sqrt(static_cast<double>(g.rows()))) {
        throw NonUnitary(std::string(what) + " is not unitary within 1e-10");
    }
}

}  // namespace

std::uint64_t MeasurementRecord::packed() const {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        out |= static_cast<std::uint64_t>(bits[j] & 1) << j;
    }
    return out;
}

StateVector::StateVector(int nqubits) : nqubits_(nqubits) {
    if (nqubits < 0 || nqubits > 24) {
        throw TooLarge("state vector of " + std::to_string(nqubits) + " qubits");
    }
    amps_ = DenseVector::Zero(Eigen::Index{1} << nqubits);
    amps_[0] = 1.0;
}

StateVector::StateVector(int nqubits, DenseVector amplitudes) : nqubits_(nqubits), amps_(std::move(amplitudes)) {
    if (nqubits < 0 || nqubits > 24) {
        throw TooLarge("state vector of " + std::to_string(nqubits) + " qubits");
    }
    if (amps_.size() != (Eigen::Index{1} << nqubits)) {
        throw DimensionMismatch("amplitude count does not match 2^" + std::to_string(nqubits));
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol) {
        throw std::invalid_argument("state amplitudes are not normalized");
    }
}

StateVector StateVector::basis(int nqubits, std::size_t index) {
    StateVector s(nqubits);
    if (index >= s.dim()) {
        throw OutOfRange("basis index " + std::to_string(index) + " outside register");
    }
    s.amps_[0] = 0.0;
    s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
    return s;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= nqubits_) {
        throw QubitOutOfRange("qubit " + std::to_string(q) + " outside " + std::to_string(nqubits_) + "-qubit register");
    }
}

void StateVector::apply_1q(const Gate1 &gate, int qubit) {
    check_qubit(qubit);
    require_unitary(gate, "single-qubit gate");
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t n = dim();
    complex *a = amps_.data();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const complex a0 = a[i];
            const complex a1 = a[i + stride];
            a[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
            a[i + stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
        }
    }
}

void StateVector::apply_2q(const Gate2 &gate, int q1, int q2) {
    check_qubit(q1);
    check_qubit(q2);
    if (q1 == q2) {
        throw QubitOutOfRange("two-qubit gate on a repeated qubit");
    }
    require_unitary(gate, "two-qubit gate");
    const std::size_t m1 = std::size_t{1} << q1;
    const std::size_t m2 = std::size_t{1} << q2;
    const std::size_t n = dim();
    complex *a = amps_.data();
    for (std::size_t i = 0; i < n; ++i) {
        if (i & (m1 | m2)) {
            continue;
        }
        // local index 2 * bit(q1) + bit(q2)
        const std::size_t idx[4] = {i, i | m2, i | m1, i | m1 | m2};
        complex v[4];
        for (int r = 0; r < 4; ++r) {
            v[r] = a[idx[r]];
        }
        for (int r = 0; r < 4; ++r) {
            a[idx[r]] = gate(r, 0) * v[0] + gate(r, 1) * v[1] + gate(r, 2) * v[2] + gate(r, 3) * v[3];
        }
    }
}

void StateVector::apply_dense(const DenseOperator &u, int first_qubit, UnitaryCheck check) {
    const int k = operator_qubits(u);
    if (first_qubit < 0 || first_qubit + k > nqubits_) {
        throw DimensionMismatch("operator on " + std::to_string(k) + " qubits at offset " +
                                std::to_string(first_qubit) + " exceeds " + std::to_string(nqubits_) + " qubits");
    }
    if (check == UnitaryCheck::Verify && !is_unitary(u)) {
        throw NonUnitary("dense operator is not unitary within 1e-10");
    }
    if (k == nqubits_) {
        amps_ = u * amps_;
        return;
    }
    // View amplitudes as (low x sub x high) and act on the middle index.
    const Eigen::Index low = Eigen::Index{1} << first_qubit;
    const Eigen::Index sub = Eigen::Index{1} << k;
    const Eigen::Index high = static_cast<Eigen::Index>(dim()) / (low * sub);
    for (Eigen::Index h = 0; h < high; ++h) {
        Eigen::Map<DenseOperator> block(amps_.data() + h * low * sub, low, sub);
        block = (block * u.transpose()).eval();
    }
}

void StateVector::apply_x(int qubit) {
    check_qubit(qubit);
    const std::size_t m = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!(i & m)) {
            std::swap(amps_[static_cast<Eigen::Index>(i)], amps_[static_cast<Eigen::Index>(i | m)]);
        }
    }
}

MeasurementRecord StateVector::measure(std::span<const int> qubits, Rng &rng) {
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        check_qubit(qubits[j]);
        for (std::size_t k = 0; k < j; ++k) {
            if (qubits[k] == qubits[j]) {
                throw QubitOutOfRange("qubit " + std::to_string(qubits[j]) + " listed twice");
            }
        }
    }
    auto outcome_of = [&](std::size_t i) {
        std::size_t o = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            o |= ((i >> qubits[j]) & 1) << j;
        }
        return o;
    };
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < dim(); ++i) {
        probs[outcome_of(i)] += std::norm(amps_[static_cast<Eigen::Index>(i)]);
    }
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    // One draw against the cumulative distribution; a draw on a bin edge takes the lower bin.
    const double target = rng.uniform() * total;
    std::size_t chosen = probs.size();
    double cum = 0.0;
    for (std::size_t o = 0; o < probs.size(); ++o) {
        if (probs[o] <= 0.0) {
            continue;
        }
        cum += probs[o];
        chosen = o;
        if (target <= cum) {
            break;
        }
    }
    if (chosen == probs.size() || probs[chosen] <= 0.0) {
        throw ZeroNormProjection("measurement has no outcome with nonzero probability");
    }
    const double scale = 1.0 / std::sqrt(probs[chosen]);
    for (std::size_t i = 0; i < dim(); ++i) {
        auto &a = amps_[static_cast<Eigen::Index>(i)];
        a = outcome_of(i) == chosen ? a * scale : complex(0.0);
    }
    MeasurementRecord rec;
    rec.qubits.assign(qubits.begin(), qubits.end());
    rec.bits.resize(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        rec.bits[j] = static_cast<std::uint8_t>((chosen >> j) & 1);
    }
    rec.probability = probs[chosen] / total;
    return rec;
}

void StateVector::reset_down(std::span<const int> qubits, const MeasurementRecord &record) {
    if (record.qubits.size() != qubits.size() || !std::equal(qubits.begin(), qubits.end(), record.qubits.begin())) {
        throw StaleRecord("measurement record does not cover the qubits being reset");
    }
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if (record.bits[j]) {
            apply_x(qubits[j]);
        }
    }
}

StateVector init_comb_product(const StateVector &target, int nc) {
    const int n = target.nqubits() + nc;
    DenseVector amps = DenseVector::Zero(Eigen::Index{1} << n);
    amps.head(target.amplitudes().size()) = target.amplitudes();
    return StateVector(n, std::move(amps));
}

StateVector random_target_state(int nqubits, Rng &rng) {
    DenseVector amps(Eigen::Index{1} << nqubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        amps[i] = complex(re, im);
    }
    amps /= amps.norm();
    return StateVector(nqubits, std::move(amps));
}

complex overlap(const StateVector &a, const StateVector &b) {
    if (a.nqubits() != b.nqubits()) {
        throw DimensionMismatch("overlap of states on different registers");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(overlap(a, b));
}

double expectation(const StateVector &psi, const DenseOperator &h) {
    if (h.rows() != static_cast<Eigen::Index>(psi.dim()) || h.cols() != h.rows()) {
        throw DimensionMismatch("operator does not match the state dimension");
    }
    return psi.amplitudes().dot(h * psi.amplitudes()).real();
}

namespace {

Eigen::Map<const DenseOperator> target_by_comb(const StateVector &psi, Eigen::Index target_dim) {
    if (target_dim <= 0 || static_cast<Eigen::Index>(psi.dim()) % target_dim != 0) {
        throw DimensionMismatch("target dimension does not divide the state dimension");
    }
    return {psi.amplitudes().data(), target_dim, static_cast<Eigen::Index>(psi.dim()) / target_dim};
}

}  // namespace

double reduced_fidelity(const StateVector &psi, const DenseVector &phi) {
    auto m = target_by_comb(psi, phi.size());
    return (phi.adjoint() * m).squaredNorm();
}

std::vector<double> reduced_overlaps(const StateVector &psi, const DenseOperator &basis, int k) {
    if (k < 0 || k > basis.cols()) {
        throw OutOfRange("requested " + std::to_string(k) + " overlaps from " + std::to_string(basis.cols()) +
                         " basis vectors");
    }
    auto m = target_by_comb(psi, basis.rows());
    DenseOperator proj = basis.leftCols(k).adjoint() * m;
    std::vector<double> out(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        out[static_cast<std::size_t>(j)] = proj.row(j).squaredNorm();
    }
    return out;
}

std::vector<int> comb_qubits(int nt, int nc) {
    std::vector<int> out(static_cast<std::size_t>(nc));
    for (int i = 0; i < nc; ++i) {
        out[static_cast<std::size_t>(i)] = nt + i;
    }
    return out;
}

}  // namespace combsim
