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

#include "combsim/circuits.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "combsim/errors.h"

namespace combsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PauliString comb_string(int nc, std::initializer_list<std::pair<int, PauliAxis>> ops) {
    std::vector<PauliAxis> axes(static_cast<std::size_t>(nc), PauliAxis::I);
    for (auto [q, a] : ops) {
        axes[static_cast<std::size_t>(q)] = a;
    }
    return PauliString(axes);
}

void ladder_rz(Circuit &c, int a, int b, int q, double theta) {
    c.cnot(a, b).cnot(b, q).rz(q, theta).cnot(b, q).cnot(a, b);
}

// XXX, XYY, YXY and YYX rotations on (a, b, c), sharing basis changes between neighbors.
void triple_block(Circuit &c, int a, int b, int q, const double theta[4]) {
    c.h(a).h(b).h(q);
    ladder_rz(c, a, b, q, theta[0]);
    c.h(b).h(q);
    c.sdg(b).h(b).sdg(q).h(q);
    ladder_rz(c, a, b, q, theta[1]);
    c.h(a);
    c.h(b).s(b);

    c.sdg(a).h(a);
    c.h(b);
    ladder_rz(c, a, b, q, theta[2]);
    c.h(b).sdg(b).h(b);
    c.h(q).s(q).h(q);
    ladder_rz(c, a, b, q, theta[3]);
    c.h(a).s(a);
    c.h(b).s(b);
    c.h(q);
}

}  // namespace

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "SDG";
        case GateKind::Rz:
            return "RZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::SWAP:
            return "SWAP";
    }
    return "?";
}

std::size_t Circuit::rotation_count() const {
    std::size_t n = 0;
    for (const auto &g : gates_) {
        n += g.kind == GateKind::Rz;
    }
    return n;
}

Circuit &Circuit::push(const Gate &g) {
    auto check = [&](int q) {
        if (q < 0 || q >= nqubits_) {
            throw QubitOutOfRange(std::string(gate_name(g.kind)) + " on qubit " + std::to_string(q) + " of a " +
                                  std::to_string(nqubits_) + "-qubit circuit");
        }
    };
    check(g.q0);
    if (g.two_qubit()) {
        check(g.q1);
        if (g.q0 == g.q1) {
            throw QubitOutOfRange(std::string(gate_name(g.kind)) + " on a repeated qubit");
        }
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.nqubits_ > nqubits_) {
        throw DimensionMismatch("appending a " + std::to_string(other.nqubits_) + "-qubit circuit to a " +
                                std::to_string(nqubits_) + "-qubit one");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit target_step_circuit(const IsingParams &p, double dt, bool with_field) {
    Circuit c(p.nt);
    for (int i = 0; i < p.nt; ++i) {
        c.h(i).rz(i, -p.h * dt).h(i);
    }
    const int bonds = p.periodic ? p.nt : p.nt - 1;
    for (int i = 0; i < bonds; ++i) {
        const int j = (i + 1) % p.nt;
        if (i == j) {
            continue;
        }
        c.cnot(i, j).rz(j, -dt).cnot(i, j);
    }
    if (with_field) {
        for (int i = 0; i < p.nt; ++i) {
            c.rz(i, p.b * dt);
        }
    }
    return c;
}

Circuit target_step_circuit(const IsingParams &p, double dt) {
    return target_step_circuit(p, dt, p.b != 0.0);
}

Circuit comb_step_circuit(const CombParams &p, double t, double dt, int offset) {
    if (p.nc < 3) {
        throw std::invalid_argument("comb circuit needs at least three comb qubits");
    }
    const int nc = p.nc;
    Circuit c(offset + nc);
    const double nu = nu_schedule(p.nu0, p.tf, t);
    for (int i = 0; i < nc; ++i) {
        c.rz(offset + i, -0.5 * nu * dt);
    }
    using enum PauliAxis;
    auto angles = [&](const WeightedPauliSum &h, int a, int b, int q, double out[4]) {
        out[0] = h.coefficient(comb_string(nc, {{a, X}, {b, X}, {q, X}})) * dt;
        out[1] = h.coefficient(comb_string(nc, {{a, X}, {b, Y}, {q, Y}})) * dt;
        out[2] = h.coefficient(comb_string(nc, {{a, Y}, {b, X}, {q, Y}})) * dt;
        out[3] = h.coefficient(comb_string(nc, {{a, Y}, {b, Y}, {q, X}})) * dt;
    };
    double theta[4];
    if (nc == 3) {
        angles(comb_scrambler(p), 0, 1, 2, theta);
        triple_block(c, offset, offset + 1, offset + 2, theta);
        return c;
    }
    for (int i = 0; i < nc; ++i) {
        const int b = (i + 1) % nc;
        const int q = (i + 2) % nc;
        const double phi = p.phis.empty() ? 1.0 : p.phis.at(static_cast<std::size_t>(i));
        const auto term = (p.kappa * phi) *
                          expand_ladder(static_cast<std::size_t>(nc),
                                        {{static_cast<std::size_t>(i), Ladder::Raise},
                                         {static_cast<std::size_t>(b), Ladder::Lower},
                                         {static_cast<std::size_t>(q), Ladder::Lower}});
        angles(term, i, b, q, theta);
        triple_block(c, offset + i, offset + b, offset + q, theta);
    }
    return c;
}

Circuit interaction_step_circuit(const InteractionParams &ip, const IsingParams &p, int nc, double dt) {
    if (ip.mode.kind != CouplingMode::Kind::OneBodyX) {
        throw UnsupportedCoupling("the gate-level interaction supports only the one-body X coupling");
    }
    if (nc < 3) {
        throw std::invalid_argument("interaction circuit needs at least three comb qubits");
    }
    const int nt = p.nt;
    const int n = nt + nc;
    const auto h = *interaction_pauli(ip.g, coupling_operator(ip.mode, p), nc);
    auto coeff = [&](int k, std::initializer_list<std::pair<int, PauliAxis>> comb_ops) {
        std::vector<PauliAxis> axes(static_cast<std::size_t>(n), PauliAxis::I);
        axes[static_cast<std::size_t>(k)] = PauliAxis::X;
        for (auto [q, a] : comb_ops) {
            axes[static_cast<std::size_t>(nt + q)] = a;
        }
        return h.coefficient(PauliString(axes));
    };
    auto hadamards = [&](Circuit &c) {
        for (int k = 0; k < nt; ++k) {
            c.h(k);
        }
    };
    Circuit c(n);
    using enum PauliAxis;
    for (int i = 0; i < nc; ++i) {
        const int ci = nt + i;
        c.h(ci);
        hadamards(c);
        for (int k = 0; k < nt; ++k) {
            c.cnot(k, ci).rz(ci, coeff(k, {{i, X}}) * dt).cnot(k, ci);
        }
        hadamards(c);
        c.h(ci);
    }
    auto a2 = [&](Circuit &c, int i, int j, PauliAxis axis) {
        const int ci = nt + i;
        const int cj = nt + j;
        hadamards(c);
        for (int k = 0; k < nt; ++k) {
            c.cnot(k, ci).cnot(ci, cj).rz(cj, coeff(k, {{i, axis}, {j, axis}}) * dt).cnot(ci, cj).cnot(k, ci);
        }
        hadamards(c);
    };
    for (int i = 0; i < nc; ++i) {
        const int j = (i + 1) % nc;
        const int ci = nt + i;
        const int cj = nt + j;
        c.h(ci).h(cj);
        a2(c, i, j, X);
        c.h(ci).h(cj);
        c.sdg(ci).h(ci).sdg(cj).h(cj);
        a2(c, i, j, Y);
        c.h(ci).s(ci).h(cj).s(cj);
    }
    return c;
}

Circuit trotter_step_circuit(const IsingParams &ising, const CombParams &comb, const InteractionParams &ip, double t,
                             double dt) {
    const int n = ising.nt + comb.nc;
    Circuit c(n);
    c.append(target_step_circuit(ising, dt));
    c.append(comb_step_circuit(comb, t, dt, ising.nt));
    c.append(interaction_step_circuit(ip, ising, comb.nc, dt));
    return c;
}

Gate1 gate_matrix_1q(const Gate &g) {
    Gate1 m;
    const complex i(0.0, 1.0);
    switch (g.kind) {
        case GateKind::H:
            m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
            return m;
        case GateKind::S:
            m << 1.0, 0.0, 0.0, i;
            return m;
        case GateKind::Sdg:
            m << 1.0, 0.0, 0.0, -i;
            return m;
        case GateKind::Rz:
            m << std::exp(-i * g.theta), 0.0, 0.0, std::exp(i * g.theta);
            return m;
        default:
            throw std::invalid_argument(std::string(gate_name(g.kind)) + " is not a single-qubit gate");
    }
}

void run_circuit(const Circuit &c, StateVector &s) {
    if (c.nqubits() != s.nqubits()) {
        throw DimensionMismatch("circuit on " + std::to_string(c.nqubits()) + " qubits, state on " +
                                std::to_string(s.nqubits()));
    }
    static const Gate2 kCnot = [] {
        Gate2 m = Gate2::Zero();
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
        return m;
    }();
    static const Gate2 kSwap = [] {
        Gate2 m = Gate2::Zero();
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
        return m;
    }();
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::CNOT:
                s.apply_2q(kCnot, g.q0, g.q1);
                break;
            case GateKind::SWAP:
                s.apply_2q(kSwap, g.q0, g.q1);
                break;
            default:
                s.apply_1q(gate_matrix_1q(g), g.q0);
        }
    }
}

DenseOperator circuit_unitary(const Circuit &c) {
    if (c.nqubits() > 8) {
        throw TooLarge("circuit_unitary is limited to 8 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << c.nqubits();
    DenseOperator u = DenseOperator::Identity(dim, dim);
    // Left-multiply by each gate, acting on row indices.
    for (const auto &g : c.gates()) {
        const Eigen::Index m0 = Eigen::Index{1} << g.q0;
        if (g.kind == GateKind::CNOT) {
            const Eigen::Index m1 = Eigen::Index{1} << g.q1;
            for (Eigen::Index r = 0; r < dim; ++r) {
                if ((r & m0) && !(r & m1)) {
                    u.row(r).swap(u.row(r | m1));
                }
            }
        } else if (g.kind == GateKind::SWAP) {
            const Eigen::Index m1 = Eigen::Index{1} << g.q1;
            for (Eigen::Index r = 0; r < dim; ++r) {
                if ((r & m0) && !(r & m1)) {
                    u.row(r).swap(u.row((r ^ m0) | m1));
                }
            }
        } else {
            const Gate1 m = gate_matrix_1q(g);
            for (Eigen::Index r = 0; r < dim; ++r) {
                if (r & m0) {
                    continue;
                }
                Eigen::RowVectorXcd lo = u.row(r);
                Eigen::RowVectorXcd hi = u.row(r | m0);
                u.row(r) = m(0, 0) * lo + m(0, 1) * hi;
                u.row(r | m0) = m(1, 0) * lo + m(1, 1) * hi;
            }
        }
    }
    return u;
}

GateCount gate_count(int nt, int nc, bool with_b) {
    if (nt < 1 || nc < 3) {
        throw std::invalid_argument("gate_count needs nt >= 1 and nc >= 3");
    }
    const long t = nt;
    const long n = nc;
    const long triples = nc == 3 ? 1 : n;
    GateCount g;
    g.target = 6 * t + (with_b ? t : 0);
    g.comb = n + 46 * triples;
    g.interaction = n * (5 * t + 2 * (7 * t) + 14);
    g.total = g.target + g.comb + g.interaction;
    g.rotations = 2 * t + (with_b ? t : 0) + n + 4 * triples + 3 * t * n;
    return g;
}

long qaa_step_gates(int nt) {
    return 7L * nt;
}

void dump_circuit(const Circuit &c, std::ostream &out) {
    char buf[64];
    for (const auto &g : c.gates()) {
        out << gate_name(g.kind) << ' ' << g.q0;
        if (g.two_qubit()) {
            out << ' ' << g.q1;
        }
        if (g.kind == GateKind::Rz) {
            std::snprintf(buf, sizeof buf, "%.17g", g.theta);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

Circuit parse_circuit(std::istream &in, int nqubits) {
    Circuit c(nqubits);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind)) {
            continue;
        }
        Gate g{GateKind::H};
        bool ok = static_cast<bool>(ss >> g.q0);
        if (kind == "H") {
            g.kind = GateKind::H;
        } else if (kind == "S") {
            g.kind = GateKind::S;
        } else if (kind == "SDG") {
            g.kind = GateKind::Sdg;
        } else if (kind == "RZ") {
            g.kind = GateKind::Rz;
            ok = ok && static_cast<bool>(ss >> g.theta);
        } else if (kind == "CNOT" || kind == "SWAP") {
            g.kind = kind == "CNOT" ? GateKind::CNOT : GateKind::SWAP;
            ok = ok && static_cast<bool>(ss >> g.q1);
        } else {
            ok = false;
        }
        if (!ok) {
            throw IoError("bad gate on line " + std::to_string(lineno) + ": " + line);
        }
        c.push(g);
    }
    return c;
}

}  // namespace combsim
