//
// Copyright 2026 The rfidpriv Authors
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
//

#ifndef RFIDPRIV_RNG_H_
#define RFIDPRIV_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rfidpriv/bitstring.h"

namespace rfidpriv {

// Deterministic, splittable pseudo-random source. A generator is identified
// by (seed, stream); Fork() derives child streams without consuming state, so
// trials can be run in any order and still see the same randomness.
//
// Not a cryptographic generator. Every draw goes through mt19937_64 and
// hand-written reductions, so the stream is identical across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  Rng Fork(std::uint64_t child) const;

  std::uint64_t NextU64() { return engine_(); }

  // `width` fresh bits, big-endian packing of successive 64-bit outputs.
  BitString Bits(std::size_t width);

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform01();

  // Uniform in [0, n). n must be positive.
  std::uint64_t UniformInt(std::uint64_t n);

  bool Bernoulli(double p) { return Uniform01() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformInt(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// One value in [0, 1) per trial, with exactly one value falling in each of
// the `n` equal strata, in shuffled order. Each entry is marginally uniform;
// the sample mean of any monotone function of them converges much faster than
// with independent draws.
std::vector<double> StratifiedUniforms(std::size_t n, Rng& rng);

}  // namespace rfidpriv

#endif  // RFIDPRIV_RNG_H_
