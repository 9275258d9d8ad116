// Copyright 2026 The LNDP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seed derivation and keyed random streams.
//
// Every random draw in the library comes from a Stream whose key is derived
// from a master seed plus integer labels (trial, node, round, ...). Two calls
// with the same labels produce the same sequence no matter which thread runs
// them or in what order, which is what makes per-node noise reproducible.

#ifndef LNDP_RANDOM_HPP_
#define LNDP_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace lndp {

using Seed = std::uint64_t;

namespace internal {

// Splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace internal

// Labels used to separate independent streams derived from one seed.
enum class StreamLabel : std::uint64_t {
  kGraph = 1,
  kNodeNoise = 2,
  kPublic = 3,
  kRounding = 4,
  kTrial = 5,
  kServer = 6,
};

// Derives a child seed from a parent seed and a path of labels.
constexpr Seed derive_seed(Seed parent, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = internal::mix64(parent + internal::kGolden);
  for (std::uint64_t label : path) {
    h = internal::mix64(h ^ internal::mix64(label + internal::kGolden));
  }
  return h;
}

constexpr Seed derive_seed(Seed parent, StreamLabel label,
                          std::uint64_t index = 0) {
  return derive_seed(parent, {static_cast<std::uint64_t>(label), index});
}

// Counter-based generator: output k is mix64(key + (k+1) * golden). Satisfies
// UniformRandomBitGenerator, so it plugs into the <random> distributions.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Stream(Seed key) : key_(internal::mix64(key)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    counter_ += internal::kGolden;
    return internal::mix64(key_ + counter_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace lndp

#endif  // LNDP_RANDOM_HPP_
