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

#ifndef COMBSIM_TESTS_ORACLE_H
#define COMBSIM_TESTS_ORACLE_H

// Reference constructions that avoid the library code paths they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat pauli(char c) {
    Mat m(2, 2);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        case '+':  // |1><0|
            m << 0, 0, 1, 0;
            break;
        case '-':  // |0><1|
            m << 0, 1, 0, 0;
            break;
        case 'n':  // |1><1|
            m << 0, 0, 0, 1;
            break;
        default:
            m = Mat::Identity(2, 2);
    }
    return m;
}

// ops[q] acts on qubit q; qubit 0 is the least significant index bit.
inline Mat product(const std::string &ops) {
    Mat out = Mat::Identity(1, 1);
    for (char c : ops) {
        Mat p = pauli(c);
        Mat next(out.rows() * 2, out.cols() * 2);
        for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) {
                next.block(r * out.rows(), s * out.cols(), out.rows(), out.cols()) = p(r, s) * out;
            }
        }
        out = next;
    }
    return out;
}

// exp(-i theta P) for a Pauli string P, using P^2 = 1.
inline Mat pauli_rotation(const std::string &p, double theta) {
    const Mat m = product(p);
    return std::cos(theta) * Mat::Identity(m.rows(), m.cols()) - cd(0, 1) * std::sin(theta) * m;
}

// min over phi of ||a - e^{i phi} b||.
inline double phase_distance(const Mat &a, const Mat &b) {
    const cd inner = (b.adjoint() * a).trace();
    const cd phase = std::abs(inner) > 0 ? inner / std::abs(inner) : cd(1);
    return (a - phase * b).norm();
}

// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]]; each eigenvalue appears twice.
inline std::vector<double> jacobi_eigenvalues(const Mat &h) {
    const int n = static_cast<int>(h.rows());
    Eigen::MatrixXd a(2 * n, 2 * n);
    a << h.real(), -h.imag(), h.imag(), h.real();
    const int m = 2 * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                off += a(p, q) * a(p, q);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (int p = 0; p < m; ++p) {
            for (int q = p + 1; q < m; ++q) {
                if (std::abs(a(p, q)) < 1e-300) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < m; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < m; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> all(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        all[static_cast<std::size_t>(i)] = a(i, i);
    }
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < all.size(); i += 2) {
        out.push_back(all[i]);
    }
    return out;
}

// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
inline Mat haar_unitary(int dim, unsigned seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    Mat z(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            z(i, j) = cd(normal(gen), normal(gen));
        }
    }
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        q.col(j) *= r(j, j) / std::abs(r(j, j));
    }
    return q;
}

}  // namespace oracle

#endif
