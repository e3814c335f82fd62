// Copyright 2026 The qq developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

namespace qq {

// Deterministic counter-based generator.
//
// The state is an affine counter and every draw is a stateless mix of the
// current counter value (splitmix64), so a (seed, stream) pair fully
// determines the sequence. Independent streams let parallel workers draw
// without sharing state, and the same seed always reproduces the same
// numbers regardless of how work was split.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Next raw 64-bit word.
  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  // Uniform in [a, b).
  double uniform(double a, double b);

  // Standard normal via Box-Muller; draws are cached in pairs.
  double normal();

  // Uniform direction on the unit sphere (three normals, normalised).
  std::array<double, 3> unit_vector();

  // Seed used when the caller does not supply one: the QQ_SEED environment
  // variable if set, otherwise a fixed default so runs are reproducible.
  static std::uint64_t default_seed();

 private:
  std::uint64_t counter_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace qq
