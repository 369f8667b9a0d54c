// Copyright 2026 The qsimon Authors.
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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "qsimon/errors.hpp"

namespace qsimon {

inline constexpr int kMaxBits = 16;

/**
 * @brief Fixed-width bit string x = x1 x2 ... xn with x1 the most significant
 * bit.
 *
 * Width is immutable after construction and every operation that combines two
 * values requires equal widths. Widths run from 1 to 16, which keeps the
 * packed representation in a single word.
 */
class BitString {
  public:
    /// Width-1 zero; exists so BitString can live in containers.
    constexpr BitString() = default;

    constexpr BitString(int width, std::uint32_t bits)
        : width_(check_width(width)), bits_(bits) {
        if (bits >> width) {
            throw UsageError("BitString value does not fit in " +
                             std::to_string(width) + " bits");
        }
    }

    /// Parses an MSB-first string of '0'/'1' characters, e.g. "101".
    static BitString parse(std::string_view text);

    [[nodiscard]] constexpr int width() const { return width_; }
    [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool is_zero() const { return bits_ == 0; }

    /// i-th bit, 1-indexed from the most significant end (x1 = MSB).
    [[nodiscard]] constexpr int bit(int i) const {
        if (i < 1 || i > width_) {
            throw UsageError("bit index out of range");
        }
        return static_cast<int>((bits_ >> (width_ - i)) & 1u);
    }

    /// MSB-first rendering, e.g. BitString(3, 0b110).str() == "110".
    [[nodiscard]] std::string str() const;

    friend constexpr bool operator==(BitString, BitString) = default;
    /// Orders by (width, bits); gives containers a deterministic order.
    friend constexpr auto operator<=>(BitString, BitString) = default;

    /// Bitwise modulo-2 addition of two equal-width strings.
    friend constexpr BitString operator^(BitString a, BitString b) {
        if (a.width_ != b.width_) {
            throw UsageError("BitString width mismatch in xor");
        }
        return BitString(a.width_, a.bits_ ^ b.bits_);
    }

  private:
    static constexpr int check_width(int width) {
        if (width < 1 || width > kMaxBits) {
            throw UsageError("BitString width must be in [1, 16]");
        }
        return width;
    }

    int width_ = 1;
    std::uint32_t bits_ = 0;
};

/// Inner product modulo 2.
inline int dot2(BitString a, BitString b) {
    if (a.width() != b.width()) {
        throw UsageError("BitString width mismatch in dot2");
    }
    return std::popcount(a.bits() & b.bits()) & 1;
}

} // namespace qsimon
