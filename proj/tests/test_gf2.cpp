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

#include <doctest.h>

#include "qsimon/gf2.hpp"
#include "qsimon/rng.hpp"
#include "support/reference.hpp"

using namespace qsimon;

namespace {
BitString bs(std::string_view text) { return BitString::parse(text); }
} // namespace

TEST_CASE("bitstring parse/str round and bit order") {
    const BitString x = bs("110");
    CHECK(x.width() == 3);
    CHECK(x.bits() == 0b110);
    CHECK(x.bit(1) == 1); // x1 is the most significant bit
    CHECK(x.bit(2) == 1);
    CHECK(x.bit(3) == 0);
    CHECK(x.str() == "110");
    CHECK_THROWS_AS(BitString(3, 8), UsageError);
    CHECK_THROWS_AS(BitString(0, 0), UsageError);
    CHECK_THROWS_AS(BitString(17, 0), UsageError);
    CHECK_THROWS_AS(BitString::parse("102"), UsageError);
}

TEST_CASE("xor basics") {
    CHECK((bs("11") ^ bs("11")) == bs("00"));
    CHECK((bs("110") ^ bs("101")) == bs("011"));
    CHECK((bs("0000") ^ bs("1011")) == bs("1011"));
    CHECK_THROWS_AS(bs("11") ^ bs("110"), UsageError);
}

TEST_CASE("dot2 basics") {
    CHECK(dot2(bs("11"), bs("11")) == 0);
    CHECK(dot2(bs("110"), bs("101")) == 1);
    for (std::uint32_t y = 0; y < 8; ++y) {
        CHECK(dot2(bs("000"), BitString(3, y)) == 0);
    }
    CHECK_THROWS_AS(dot2(bs("1"), bs("11")), UsageError);
}

TEST_CASE("solve_for_secret worked examples") {
    const std::vector<BitString> one{bs("11")};
    auto sol = solve_for_secret(one, 2);
    CHECK(sol.kind == Gf2Solution::Kind::UniqueNonzero);
    CHECK(sol.secret == bs("11"));

    const std::vector<BitString> two{bs("110"), bs("101")};
    sol = solve_for_secret(two, 3);
    CHECK(sol.kind == Gf2Solution::Kind::UniqueNonzero);
    CHECK(sol.secret == bs("111"));

    const std::vector<BitString> zeros{bs("000"), bs("000"), bs("000")};
    sol = solve_for_secret(zeros, 3);
    CHECK(sol.kind == Gf2Solution::Kind::Ambiguous);
    CHECK(sol.nullspace_dim == 3);

    // Full-rank system pins the null space to {0}.
    const std::vector<BitString> full{bs("10"), bs("01")};
    CHECK(solve_for_secret(full, 2).kind == Gf2Solution::Kind::NoNonzeroSolution);
}

TEST_CASE("empty row list") {
    // Zero constraints leave the whole space: ambiguous for n >= 2, but for
    // n = 1 the null space is already {0, 1} and the answer is forced.
    CHECK(solve_for_secret({}, 3) ==
          Gf2Solution{Gf2Solution::Kind::Ambiguous, BitString{}, 3});
    const auto sol = solve_for_secret({}, 1);
    CHECK(sol.kind == Gf2Solution::Kind::UniqueNonzero);
    CHECK(sol.secret == bs("1"));
}

TEST_CASE("solver soundness: unique secret is orthogonal to every row") {
    auto rng = make_stream(11);
    std::uniform_int_distribution<std::uint32_t> word(0, 15);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<BitString> rows;
        for (int r = 0; r < 3; ++r) rows.emplace_back(4, word(rng));
        const auto sol = solve_for_secret(rows, 4);
        if (sol.kind == Gf2Solution::Kind::UniqueNonzero) {
            for (BitString row : rows) CHECK(dot2(row, sol.secret) == 0);
        }
    }
}

TEST_CASE("solver agrees with exhaustive search over 10^4 random systems") {
    auto rng = make_stream(17);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + trial % 4;
        std::uniform_int_distribution<int> count(0, n + 1);
        std::uniform_int_distribution<std::uint32_t> word(0, (1u << n) - 1);
        std::vector<BitString> rows;
        const int rows_count = count(rng);
        for (int r = 0; r < rows_count; ++r) rows.emplace_back(n, word(rng));
        REQUIRE(solve_for_secret(rows, n) == testref::exhaustive_solve(rows, n));
    }
}

TEST_CASE("rank examples and nullity relation") {
    CHECK(rank2(std::vector<BitString>{bs("11"), bs("11")}) == 1);
    CHECK(rank2(std::vector<BitString>{bs("110"), bs("101"), bs("011")}) == 2);
    CHECK(rank2({}) == 0);
    CHECK_THROWS_AS(rank2(std::vector<BitString>{bs("1"), bs("10")}), UsageError);

    // rank = n - log2(null space size), with the null space counted by brute
    // force.
    auto rng = make_stream(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 4;
        std::uniform_int_distribution<int> count(0, n + 1);
        std::uniform_int_distribution<std::uint32_t> word(0, (1u << n) - 1);
        std::vector<BitString> rows;
        const int rows_count = count(rng);
        for (int r = 0; r < rows_count; ++r) rows.emplace_back(n, word(rng));

        std::size_t null_size = 0;
        for (std::uint32_t c = 0; c < (1u << n); ++c) {
            bool ok = true;
            for (BitString row : rows) {
                if (dot2(row, BitString(n, c)) != 0) ok = false;
            }
            if (ok) ++null_size;
        }
        int nullity = 0;
        while ((std::size_t{1} << nullity) < null_size) ++nullity;
        CHECK(rank2(rows) == n - nullity);
    }
}
