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

#include "rfidpriv/crypto.h"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>
#include <string>

#include "rfidpriv/meter.h"

namespace rfidpriv {

BitString Hash(HashLabel label, std::span<const std::uint8_t> input,
               std::size_t bits) {
  if (bits == 0 || bits > kMaxHashBits) {
    throw WidthError("hash output width must be in (0, 256], got " +
                     std::to_string(bits));
  }
  meter::RecordHash();
  std::vector<std::uint8_t> message;
  message.reserve(input.size() + 1);
  message.push_back(static_cast<std::uint8_t>(label));
  message.insert(message.end(), input.begin(), input.end());
  std::array<std::uint8_t, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(message.data(), message.size(), digest.data(), &len,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  return BitString(digest, bits);
}

BitString HashFields(HashLabel label, std::span<const BitString> fields,
                     std::size_t bits) {
  return Hash(label, Concat(fields), bits);
}

BitString HashFields(HashLabel label, std::initializer_list<BitString> fields,
                     std::size_t bits) {
  return HashFields(label, std::span<const BitString>(fields.begin(), fields.size()),
                    bits);
}

BitString TruncateLeft(const BitString& d, std::size_t m) {
  if (m == 0 || m >= d.width()) {
    throw WidthError("truncate_left: m=" + std::to_string(m) +
                     " must be in (0, " + std::to_string(d.width()) + ")");
  }
  return BitString(d.bytes(), m);
}

BitString Xor(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw WidthError("xor of " + std::to_string(a.width()) + "-bit and " +
                     std::to_string(b.width()) + "-bit strings");
  }
  std::vector<std::uint8_t> out(a.bytes().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.bytes()[i] ^ b.bytes()[i];
  }
  return BitString(out, a.width());
}

std::vector<std::uint8_t> Concat(std::span<const BitString> fields) {
  std::vector<std::uint8_t> out;
  for (const BitString& f : fields) {
    if (f.width() % 8 != 0 || f.width() > 0xffff) {
      throw WidthError("concat: field width " + std::to_string(f.width()) +
                       " is not a whole number of bytes below 2^16 bits");
    }
    out.push_back(static_cast<std::uint8_t>(f.width() >> 8));
    out.push_back(static_cast<std::uint8_t>(f.width()));
    out.insert(out.end(), f.bytes().begin(), f.bytes().end());
  }
  return out;
}

std::vector<BitString> DecodeConcat(std::span<const std::uint8_t> encoded) {
  std::vector<BitString> fields;
  std::size_t pos = 0;
  while (pos < encoded.size()) {
    if (encoded.size() - pos < 2) throw WidthError("concat: truncated header");
    const std::size_t width =
        (static_cast<std::size_t>(encoded[pos]) << 8) | encoded[pos + 1];
    pos += 2;
    if (width % 8 != 0) throw WidthError("concat: width not byte aligned");
    const std::size_t nbytes = width / 8;
    if (encoded.size() - pos < nbytes) {
      throw WidthError("concat: truncated field body");
    }
    fields.emplace_back(encoded.subspan(pos, nbytes), width);
    pos += nbytes;
  }
  return fields;
}

BitString GenNonce(Rng& rng, std::size_t bits) {
  meter::RecordNonce();
  return rng.Bits(bits);
}

}  // namespace rfidpriv
