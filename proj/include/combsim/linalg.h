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

#ifndef COMBSIM_LINALG_H
#define COMBSIM_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace combsim {

using complex = std::complex<double>;

/// Dense complex matrix over 2^n basis states, qubit 0 = least significant bit of the index.
using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Eigenpairs of a Hermitian operator. `values` ascend; column k of `vectors` pairs with values[k].
struct EigenSystem {
    Eigen::VectorXd values;
    DenseOperator vectors;
};

/// Number of qubits spanned by a square operator. Throws DimensionMismatch unless dim is 2^n.
int operator_qubits(const DenseOperator &m);

bool is_hermitian(const DenseOperator &m, double rel_tol = 1e-10);
bool is_unitary(const DenseOperator &m, double tol = 1e-10);

/// Diagonalizes a Hermitian matrix. Real-symmetric input takes the real solver.
/// Throws NotHermitian if ||M - M^dag|| > 1e-10 ||M|| (Frobenius).
EigenSystem eigh(const DenseOperator &m);

/// Eigenvalues only, ascending.
Eigen::VectorXd eigvalsh(const DenseOperator &m);

/// exp(-i M t) for Hermitian M, assembled as V exp(-i Lambda t) V^dag.
DenseOperator expm_hermitian(const DenseOperator &m, double t);
DenseOperator expm_hermitian(const EigenSystem &es, double t);

/// Kronecker product with `high` on the more significant qubits: result = high (x) low.
DenseOperator kron(const DenseOperator &high, const DenseOperator &low);

/// Lifts `op` acting on qubits [offset, offset + k) into an n-qubit register.
DenseOperator embed(const DenseOperator &op, int offset, int nqubits);

/// Largest singular value.
double spectral_norm(const DenseOperator &m);

}  // namespace combsim

#endif
