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

#ifndef RFIDPRIV_CRYPTO_H_
#define RFIDPRIV_CRYPTO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rfidpriv/bitstring.h"
#include "rfidpriv/rng.h"

namespace rfidpriv {

inline constexpr std::size_t kDefaultBits = 128;
inline constexpr std::size_t kMaxHashBits = 256;

// The two one-way functions are one SHA-256 family separated by a leading
// label byte: H hashes 0x48 || input, F hashes 0x46 || input.
enum class HashLabel : std::uint8_t { kH = 0x48, kF = 0x46 };

// SHA-256 over label || input, truncated to the left `bits` bits. `bits` must
// lie in (0, 256]. Every call is recorded by the active cost meter.
BitString Hash(HashLabel label, std::span<const std::uint8_t> input,
               std::size_t bits = kDefaultBits);

// Convenience: Hash(label, Concat(fields), bits).
BitString HashFields(HashLabel label, std::span<const BitString> fields,
                     std::size_t bits = kDefaultBits);
BitString HashFields(HashLabel label, std::initializer_list<BitString> fields,
                     std::size_t bits = kDefaultBits);

// The `m` leftmost bits of `d`. Requires 0 < m < d.width().
BitString TruncateLeft(const BitString& d, std::size_t m);

BitString Xor(const BitString& a, const BitString& b);

// Injective field encoding: each field becomes a 2-byte big-endian bit width
// followed by its bytes. Every field width must be a multiple of 8 and fit
// in 16 bits.
std::vector<std::uint8_t> Concat(std::span<const BitString> fields);

// Inverse of Concat. Throws WidthError on a truncated or malformed encoding.
std::vector<BitString> DecodeConcat(std::span<const std::uint8_t> encoded);

// A fresh protocol nonce of `bits` bits; recorded by the active cost meter.
BitString GenNonce(Rng& rng, std::size_t bits = kDefaultBits);

}  // namespace rfidpriv

#endif  // RFIDPRIV_CRYPTO_H_
