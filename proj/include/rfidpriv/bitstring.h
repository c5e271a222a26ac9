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

#ifndef RFIDPRIV_BITSTRING_H_
#define RFIDPRIV_BITSTRING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rfidpriv {

// Raised when two bit strings of different widths meet in an operation that
// needs equal widths, or when a width argument is out of range.
class WidthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-width bit vector stored most-significant bit first. Bits beyond
// width() in the last byte are always zero, so byte-wise comparison is exact.
class BitString {
 public:
  BitString() = default;

  // All-zero string of `width` bits.
  explicit BitString(std::size_t width);

  // Takes the first `width` bits of `bytes`. Throws WidthError if `bytes`
  // holds fewer than `width` bits.
  BitString(std::span<const std::uint8_t> bytes, std::size_t width);

  static BitString FromBytes(std::span<const std::uint8_t> bytes) {
    return BitString(bytes, bytes.size() * 8);
  }

  // Parses lowercase or uppercase hex; the width is 4 bits per digit unless
  // `width` is given, in which case the digits must cover it exactly in
  // whole bytes.
  static BitString FromHex(std::string_view hex);
  static BitString FromHex(std::string_view hex, std::size_t width);

  std::size_t width() const { return width_; }
  std::span<const std::uint8_t> bytes() const { return bytes_; }
  bool empty() const { return width_ == 0; }

  bool bit(std::size_t i) const;

  // Lowercase hex of the backing bytes (ceil(width / 8) bytes).
  std::string ToHex() const;

  // Bitwise equality. Comparing strings of different widths is a WidthError.
  bool operator==(const BitString& other) const;

  // Equality that treats a width mismatch as "not equal".
  bool SameAs(const BitString& other) const {
    return width_ == other.width_ && bytes_ == other.bytes_;
  }

  // Strict weak order (width first, then bytes) for use as a set/map key.
  bool operator<(const BitString& other) const {
    if (width_ != other.width_) return width_ < other.width_;
    return bytes_ < other.bytes_;
  }

 private:
  void ClearPadding();

  std::size_t width_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace rfidpriv

#endif  // RFIDPRIV_BITSTRING_H_
