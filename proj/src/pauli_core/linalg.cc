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

#include "combsim/linalg.h"

#include <bit>
#include <cmath>
#include <string>

#include "combsim/errors.h"

namespace combsim {

int operator_qubits(const DenseOperator &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("operator is not square");
    }
    auto d = static_cast<std::size_t>(m.rows());
    if (d == 0 || !std::has_single_bit(d)) {
        throw DimensionMismatch("operator dimension " + std::to_string(d) + " is not a power of two");
    }
    return std::countr_zero(d);
}

bool is_hermitian(const DenseOperator &m, double rel_tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    double diff = (m - m.adjoint()).norm();
    return diff <= rel_tol * m.norm();
}

bool is_unitary(const DenseOperator &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    DenseOperator id = DenseOperator::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).norm() <= tol * std::sqrt(static_cast<double>(m.rows()));
}

namespace {

void require_hermitian(const DenseOperator &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("eigh of non-square matrix");
    }
    if (!is_hermitian(m)) {
        throw NotHermitian("matrix is not Hermitian within 1e-10 relative");
    }
}

bool is_real(const DenseOperator &m) {
    return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

EigenSystem eigh(const DenseOperator &m) {
    require_hermitian(m);
    EigenSystem out;
    if (m.size() > 0 && is_real(m)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
        out.values = solver.eigenvalues();
        out.vectors = solver.eigenvectors().cast<complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m);
        out.values = solver.eigenvalues();
        out.vectors = solver.eigenvectors();
    }
    return out;
}

Eigen::VectorXd eigvalsh(const DenseOperator &m) {
    require_hermitian(m);
    if (m.size() > 0 && is_real(m)) {
        return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.real(), Eigen::EigenvaluesOnly).eigenvalues();
    }
    return Eigen::SelfAdjointEigenSolver<DenseOperator>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

DenseOperator expm_hermitian(const EigenSystem &es, double t) {
    DenseVector phases(es.values.size());
    for (Eigen::Index k = 0; k < es.values.size(); ++k) {
        phases[k] = std::polar(1.0, -es.values[k] * t);
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

DenseOperator expm_hermitian(const DenseOperator &m, double t) {
    return expm_hermitian(eigh(m), t);
}

DenseOperator kron(const DenseOperator &high, const DenseOperator &low) {
    DenseOperator out(high.rows() * low.rows(), high.cols() * low.cols());
    for (Eigen::Index i = 0; i < high.rows(); ++i) {
        for (Eigen::Index j = 0; j < high.cols(); ++j) {
            out.block(i * low.rows(), j * low.cols(), low.rows(), low.cols()) = high(i, j) * low;
        }
    }
    return out;
}

DenseOperator embed(const DenseOperator &op, int offset, int nqubits) {
    int k = operator_qubits(op);
    if (offset < 0 || offset + k > nqubits) {
        throw QubitOutOfRange("embedding of " + std::to_string(k) + " qubits at offset " + std::to_string(offset) +
                              " exceeds register of " + std::to_string(nqubits));
    }
    auto low = DenseOperator::Identity(Eigen::Index{1} << offset, Eigen::Index{1} << offset);
    auto high_dim = Eigen::Index{1} << (nqubits - offset - k);
    auto high = DenseOperator::Identity(high_dim, high_dim);
    return kron(high, kron(op, low));
}

double spectral_norm(const DenseOperator &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<DenseOperator> svd(m);
    return svd.singularValues()[0];
}

}  // namespace combsim
