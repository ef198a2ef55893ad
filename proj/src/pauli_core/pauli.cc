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

#include "combsim/pauli.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "combsim/errors.h"

namespace combsim {

namespace {

constexpr complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Encoding I=0, X=1, Y=2, Z=3 makes the product axis a XOR b.
std::pair<PauliAxis, std::uint8_t> multiply_axes(PauliAxis a, PauliAxis b) {
    auto ia = static_cast<std::uint8_t>(a);
    auto ib = static_cast<std::uint8_t>(b);
    auto out = static_cast<PauliAxis>(ia ^ ib);
    if (ia == 0 || ib == 0 || ia == ib) {
        return {out, 0};
    }
    // XY = iZ, YZ = iX, ZX = iY; the reverse orders pick up -i.
    bool cyclic = (ib + 3 - ia) % 3 == 1;
    return {out, static_cast<std::uint8_t>(cyclic ? 1 : 3)};
}

}  // namespace

char axis_char(PauliAxis a) {
    return "IXYZ"[static_cast<int>(a)];
}

PauliString::PauliString(std::vector<PauliAxis> axes, std::uint8_t phase_exponent)
    : axes_(std::move(axes)), phase_(phase_exponent & 3) {
}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t phase = 0;
    if (text.starts_with("-i")) {
        phase = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+i") || text.starts_with("i")) {
        phase = 1;
        text.remove_prefix(text[0] == '+' ? 2 : 1);
    } else if (text.starts_with("-")) {
        phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    }
    std::vector<PauliAxis> axes;
    axes.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I':
            case '_':
                axes.push_back(PauliAxis::I);
                break;
            case 'X':
                axes.push_back(PauliAxis::X);
                break;
            case 'Y':
                axes.push_back(PauliAxis::Y);
                break;
            case 'Z':
                axes.push_back(PauliAxis::Z);
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "'");
        }
    }
    return PauliString(std::move(axes), phase);
}

PauliString PauliString::single(std::size_t nqubits, std::size_t qubit, PauliAxis axis) {
    return sparse(nqubits, {{qubit, axis}});
}

PauliString PauliString::sparse(std::size_t nqubits,
                                std::initializer_list<std::pair<std::size_t, PauliAxis>> ops) {
    PauliString s(nqubits);
    for (auto [q, a] : ops) {
        if (q >= nqubits) {
            throw QubitOutOfRange("qubit " + std::to_string(q) + " outside " + std::to_string(nqubits));
        }
        s.axes_[q] = a;
    }
    return s;
}

complex PauliString::phase() const {
    return kPhases[phase_];
}

bool PauliString::is_identity() const {
    for (auto a : axes_) {
        if (a != PauliAxis::I) {
            return false;
        }
    }
    return true;
}

PauliString PauliString::unsigned_part() const {
    return PauliString(axes_, 0);
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    if (rhs.size() != size()) {
        throw DimensionMismatch("Pauli product of different lengths");
    }
    PauliString out(size());
    unsigned phase = phase_ + rhs.phase_;
    for (std::size_t q = 0; q < size(); ++q) {
        auto [axis, p] = multiply_axes(axes_[q], rhs.axes_[q]);
        out.axes_[q] = axis;
        phase += p;
    }
    out.phase_ = static_cast<std::uint8_t>(phase & 3);
    return out;
}

bool PauliString::commutes_with(const PauliString &rhs) const {
    if (rhs.size() != size()) {
        throw DimensionMismatch("Pauli commutator of different lengths");
    }
    int anti = 0;
    for (std::size_t q = 0; q < size(); ++q) {
        if (axes_[q] != PauliAxis::I && rhs.axes_[q] != PauliAxis::I && axes_[q] != rhs.axes_[q]) {
            ++anti;
        }
    }
    return anti % 2 == 0;
}

PauliString PauliString::embedded(std::size_t offset, std::size_t nqubits) const {
    if (offset + size() > nqubits) {
        throw QubitOutOfRange("embedded Pauli string does not fit the register");
    }
    PauliString out(nqubits);
    out.phase_ = phase_;
    for (std::size_t q = 0; q < size(); ++q) {
        out.axes_[offset + q] = axes_[q];
    }
    return out;
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase_];
    for (auto a : axes_) {
        out.push_back(axis_char(a));
    }
    return out;
}

DenseOperator string_matrix(const PauliString &s) {
    if (s.size() > 16) {
        throw TooLarge("dense Pauli matrix over more than 16 qubits");
    }
    const std::size_t dim = std::size_t{1} << s.size();
    std::size_t xmask = 0;
    for (std::size_t q = 0; q < s.size(); ++q) {
        if (s[q] == PauliAxis::X || s[q] == PauliAxis::Y) {
            xmask |= std::size_t{1} << q;
        }
    }
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        complex v = s.phase();
        for (std::size_t q = 0; q < s.size(); ++q) {
            bool bit = (col >> q) & 1;
            if (s[q] == PauliAxis::Z && bit) {
                v = -v;
            } else if (s[q] == PauliAxis::Y) {
                v *= bit ? complex(0, -1) : complex(0, 1);
            }
        }
        m(col ^ xmask, col) = v;
    }
    return m;
}

WeightedPauliSum &WeightedPauliSum::add(double c, const PauliString &s) {
    if (s.size() != nqubits_) {
        throw DimensionMismatch("term on " + std::to_string(s.size()) + " qubits added to a " +
                                std::to_string(nqubits_) + "-qubit sum");
    }
    switch (s.phase_exponent()) {
        case 0:
            break;
        case 2:
            c = -c;
            break;
        default:
            throw std::invalid_argument("imaginary phase on a term of a Hermitian sum");
    }
    auto key = s.unsigned_part();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0.0) {
            terms_.emplace(std::move(key), c);
        }
    } else {
        it->second += c;
        if (it->second == 0.0) {
            terms_.erase(it);
        }
    }
    return *this;
}

WeightedPauliSum &WeightedPauliSum::operator+=(const WeightedPauliSum &rhs) {
    if (rhs.nqubits_ != nqubits_) {
        throw DimensionMismatch("sum of operators on different registers");
    }
    for (const auto &[s, c] : rhs.terms_) {
        add(c, s);
    }
    return *this;
}

WeightedPauliSum &WeightedPauliSum::operator*=(double scale) {
    if (scale == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) {
        kv.second *= scale;
    }
    return *this;
}

double WeightedPauliSum::coefficient(const PauliString &s) const {
    auto it = terms_.find(s.unsigned_part());
    if (it == terms_.end()) {
        return 0.0;
    }
    return s.phase_exponent() == 2 ? -it->second : it->second;
}

double WeightedPauliSum::identity_coefficient() const {
    return coefficient(PauliString(nqubits_));
}

WeightedPauliSum WeightedPauliSum::without_identity() const {
    WeightedPauliSum out = *this;
    out.terms_.erase(PauliString(nqubits_));
    return out;
}

WeightedPauliSum WeightedPauliSum::pruned(double tol) const {
    WeightedPauliSum out(nqubits_);
    for (const auto &[s, c] : terms_) {
        if (std::abs(c) > tol) {
            out.terms_.emplace(s, c);
        }
    }
    return out;
}

std::vector<WeightedPauliSum::Term> WeightedPauliSum::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[s, c] : terms_) {
        out.push_back({c, s});
    }
    return out;
}

WeightedPauliSum WeightedPauliSum::embedded(std::size_t offset, std::size_t nqubits) const {
    WeightedPauliSum out(nqubits);
    for (const auto &[s, c] : terms_) {
        out.terms_.emplace(s.embedded(offset, nqubits), c);
    }
    return out;
}

std::string WeightedPauliSum::str() const {
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const auto &[s, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << c << "*" << s.str().substr(1);
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

WeightedPauliSum operator+(WeightedPauliSum a, const WeightedPauliSum &b) {
    a += b;
    return a;
}

WeightedPauliSum operator*(double scale, WeightedPauliSum a) {
    a *= scale;
    return a;
}

WeightedPauliSum tensor(const WeightedPauliSum &low, const WeightedPauliSum &high) {
    const std::size_t n = low.nqubits() + high.nqubits();
    WeightedPauliSum out(n);
    for (const auto &lt : low.terms()) {
        auto lo = lt.string.embedded(0, n);
        for (const auto &ht : high.terms()) {
            out.add(lt.coefficient * ht.coefficient, lo * ht.string.embedded(low.nqubits(), n));
        }
    }
    return out;
}

DenseOperator sum_matrix(const WeightedPauliSum &h) {
    const auto dim = Eigen::Index{1} << h.nqubits();
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        m += t.coefficient * string_matrix(t.string);
    }
    return m;
}

namespace {

using SiteExpansion = std::vector<std::pair<PauliAxis, complex>>;

SiteExpansion expand_site(Ladder l) {
    switch (l) {
        case Ladder::I:
            return {{PauliAxis::I, 1.0}};
        case Ladder::Raise:
            return {{PauliAxis::X, 0.5}, {PauliAxis::Y, complex(0, -0.5)}};
        case Ladder::Lower:
            return {{PauliAxis::X, 0.5}, {PauliAxis::Y, complex(0, 0.5)}};
        case Ladder::Z:
            return {{PauliAxis::Z, 1.0}};
        case Ladder::Number:
            return {{PauliAxis::I, 0.5}, {PauliAxis::Z, -0.5}};
    }
    throw std::logic_error("unreachable ladder symbol");
}

}  // namespace

WeightedPauliSum expand_ladder(std::span<const Ladder> sites) {
    // Distribute the product into complex-weighted strings, then P + P^dag keeps 2 Re(c).
    std::map<std::vector<PauliAxis>, complex> acc;
    acc[{}] = 1.0;
    for (Ladder l : sites) {
        std::map<std::vector<PauliAxis>, complex> next;
        for (const auto &[axes, c] : acc) {
            for (const auto &[axis, w] : expand_site(l)) {
                auto key = axes;
                key.push_back(axis);
                next[key] += c * w;
            }
        }
        acc = std::move(next);
    }
    WeightedPauliSum out(sites.size());
    for (const auto &[axes, c] : acc) {
        out.add(2.0 * c.real(), PauliString(axes));
    }
    return out;
}

WeightedPauliSum expand_ladder(std::size_t nqubits, std::initializer_list<std::pair<std::size_t, Ladder>> ops) {
    std::vector<Ladder> sites(nqubits, Ladder::I);
    for (auto [q, l] : ops) {
        if (q >= nqubits) {
            throw QubitOutOfRange("ladder site " + std::to_string(q) + " outside register");
        }
        sites[q] = l;
    }
    return expand_ladder(sites);
}

}  // namespace combsim
