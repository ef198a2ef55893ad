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

#ifndef COMBSIM_RANDOM_H
#define COMBSIM_RANDOM_H

#include <cstdint>
#include <optional>
#include <random>

namespace combsim {

/// Seeded generator. Draws are defined here (not via <random> distributions) so streams are
/// identical across standard library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller.
    double normal();

    /// Independent child stream; depends only on (seed, stream).
    Rng split(std::uint64_t stream) const;

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Fresh seed from std::random_device, for runs that were not given one.
std::uint64_t entropy_seed();

}  // namespace combsim

#endif
