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

#include "rfidpriv/rng.h"

#include <algorithm>
#include <stdexcept>

namespace rfidpriv {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One 64-bit seed per (seed, stream) pair. Seeding through std::seed_seq
// costs several times more and dominates runs with thousands of tags.
std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(SplitMix64(SplitMix64(seed) ^ stream));
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(MakeEngine(seed, stream)) {}

Rng Rng::Fork(std::uint64_t child) const {
  return Rng(seed_, SplitMix64(SplitMix64(stream_) ^ child));
}

BitString Rng::Bits(std::size_t width) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve((width + 63) / 64 * 8);
  while (bytes.size() * 8 < width) {
    const std::uint64_t word = NextU64();
    for (int shift = 56; shift >= 0; shift -= 8) {
      bytes.push_back(static_cast<std::uint8_t>(word >> shift));
    }
  }
  return BitString(bytes, width);
}

double Rng::Uniform01() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::UniformInt(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("UniformInt: empty range");
  // Rejection sampling on the largest multiple of n.
  const std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return x % n;
}

std::vector<double> StratifiedUniforms(std::size_t n, Rng& rng) {
  constexpr double kBelowOne = 0x1.fffffffffffffp-1;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u =
        (static_cast<double>(k) + rng.Uniform01()) / static_cast<double>(n);
    out[k] = std::min(u, kBelowOne);
  }
  rng.Shuffle(out);
  return out;
}

}  // namespace rfidpriv
