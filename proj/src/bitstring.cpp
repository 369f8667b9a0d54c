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

#include "qsimon/bitstring.hpp"

namespace qsimon {

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
        throw UsageError("BitString::parse: length must be in [1, 16]");
    }
    std::uint32_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw UsageError("BitString::parse: expected only '0'/'1'");
        }
        bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitString(static_cast<int>(text.size()), bits);
}

std::string BitString::str() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
        if ((bits_ >> (width_ - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

} // namespace qsimon
