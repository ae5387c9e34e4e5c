// Copyright 2026 The sketchsdp Authors.
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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace sketchsdp {

using Seed = std::uint64_t;

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Deterministic child seed for a path of indices below `base`. Used to give
// every grid cell / pipeline stage its own stream independent of execution
// order.
Seed derive_seed(Seed base, std::initializer_list<std::uint64_t> path) noexcept;

/// Seedable, splittable generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so the conversions to
/// uniform reals, coins and normals are done here to keep streams identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : seed_(seed), engine_(mix64(seed)) {}

  Seed seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // True with probability p. p <= 0 never fires, p >= 1 always does.
  bool bernoulli(double p) { return uniform() < p; }

  bool coin() { return (engine_() >> 63) != 0; }

  // Standard normal via Box-Muller (one value per call, the pair's second
  // value is discarded so each call consumes exactly two words).
  double normal();

  // Independent generator for sub-stream `stream`.
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, {stream})); }

 private:
  Seed seed_;
  std::mt19937_64 engine_;
};

}  // namespace sketchsdp
