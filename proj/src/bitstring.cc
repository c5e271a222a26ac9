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

#include "rfidpriv/bitstring.h"

#include <algorithm>

namespace rfidpriv {
namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t width)
    : width_(width), bytes_((width + 7) / 8, 0) {}

BitString::BitString(std::span<const std::uint8_t> bytes, std::size_t width)
    : width_(width) {
  const std::size_t nbytes = (width + 7) / 8;
  if (bytes.size() < nbytes) {
    throw WidthError("BitString: " + std::to_string(bytes.size()) +
                     " bytes cannot hold " + std::to_string(width) + " bits");
  }
  bytes_.assign(bytes.begin(), bytes.begin() + nbytes);
  ClearPadding();
}

BitString BitString::FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string has odd length");
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = HexValue(hex[2 * i]);
    const int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("invalid hex digit in '" + std::string(hex) +
                                  "'");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return FromBytes(out);
}

BitString BitString::FromHex(std::string_view hex, std::size_t width) {
  BitString raw = FromHex(hex);
  if (raw.bytes_.size() != (width + 7) / 8) {
    throw WidthError("hex '" + std::string(hex) + "' does not encode " +
                     std::to_string(width) + " bits");
  }
  return BitString(raw.bytes_, width);
}

bool BitString::bit(std::size_t i) const {
  if (i >= width_) throw WidthError("bit index out of range");
  return (bytes_[i / 8] >> (7 - i % 8)) & 1;
}

std::string BitString::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

bool BitString::operator==(const BitString& other) const {
  if (width_ != other.width_) {
    throw WidthError("comparing " + std::to_string(width_) + "-bit and " +
                     std::to_string(other.width_) + "-bit strings");
  }
  return bytes_ == other.bytes_;
}

void BitString::ClearPadding() {
  if (width_ % 8 != 0 && !bytes_.empty()) {
    bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - width_ % 8));
  }
}

}  // namespace rfidpriv
