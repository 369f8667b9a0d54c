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

#include "qsimon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsimon/rng.hpp"

namespace qsimon {

namespace {

constexpr int kMaxCanonicalEnumeration = 4;
constexpr int kMaxFullEnumeration = 3;
constexpr int kMaxPermutationQubits = 8; // 2^(2n) index array

void check_secret(int n, BitString s) {
    if (s.width() != n) throw UsageError("secret width != n");
    if (s.is_zero()) throw UsageError("secret must be nonzero");
}

// Coset representatives {min(x, x^s)}, ascending.
std::vector<std::uint32_t> coset_reps(int n, BitString s) {
    std::vector<std::uint32_t> reps;
    reps.reserve(1u << (n - 1));
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        if (x < (x ^ s.bits())) reps.push_back(x);
    }
    return reps;
}

MappingTable assemble(int n, BitString s, const std::vector<std::uint32_t>& reps,
                      const std::vector<std::uint32_t>& image) {
    MappingTable f;
    f.n = n;
    f.secret = s;
    f.table.assign(1u << n, BitString(n, 0));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const BitString value(n, image[i]);
        f.table[reps[i]] = value;
        f.table[reps[i] ^ s.bits()] = value;
    }
    return f;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw CapacityError("count exceeds 64-bit range");
    }
    return out;
}

// C(total, pick) with overflow detection.
std::uint64_t binomial_checked(std::uint64_t total, std::uint64_t pick) {
    if (pick > total) return 0;
    pick = std::min(pick, total - pick);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= pick; ++i) {
        // result holds C(total - pick + i - 1, i - 1), so after cancelling
        // gcd(num, den) the remaining den divides result exactly.
        std::uint64_t num = total - pick + i;
        std::uint64_t den = i;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        result = mul_checked(result / den, num);
    }
    return result;
}

} // namespace

bool is_simon_function(const MappingTable& f) {
    if (f.n < 1 || f.n > kMaxBits) throw UsageError("MappingTable: n out of range");
    const std::size_t size = 1ull << f.n;
    if (f.table.size() != size) throw UsageError("MappingTable: table size != 2^n");
    for (BitString v : f.table) {
        if (v.width() != f.n) throw UsageError("MappingTable: value width != n");
    }
    if (f.secret.width() != f.n || f.secret.is_zero()) return false;

    const std::uint32_t s = f.secret.bits();
    std::set<std::uint32_t> image;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (f.table[x] != f.table[x ^ s]) return false;
        image.insert(f.table[x].bits());
    }
    if (image.size() != size / 2) return false; // not strictly 2-to-1

    // Distinctness across cosets: with the promise satisfied, every coset
    // must own its image value exclusively.
    std::set<std::uint32_t> seen;
    for (std::uint32_t x = 0; x < size; ++x) {
        if (x > (x ^ s)) continue;
        if (!seen.insert(f.table[x].bits()).second) return false;
    }
    return true;
}

std::vector<MappingTable> enumerate_oracles(int n, BitString s, EnumerationMode mode) {
    check_secret(n, s);
    const int cap = mode == EnumerationMode::Canonical ? kMaxCanonicalEnumeration
                                                       : kMaxFullEnumeration;
    if (n > cap) {
        throw CapacityError("enumeration supported up to n = " + std::to_string(cap));
    }

    const std::uint32_t values = 1u << n;
    const std::uint32_t half = values / 2;
    const auto reps = coset_reps(n, s);

    std::vector<MappingTable> out;
    std::vector<std::uint32_t> image(half);
    std::iota(image.begin(), image.end(), 0);

    // Lexicographic subsets of size 2^(n-1) from {0 .. 2^n - 1}.
    while (true) {
        if (mode == EnumerationMode::Canonical) {
            out.push_back(assemble(n, s, reps, image));
        } else {
            std::vector<std::uint32_t> assignment = image;
            do {
                out.push_back(assemble(n, s, reps, assignment));
            } while (std::next_permutation(assignment.begin(), assignment.end()));
        }

        int i = static_cast<int>(half) - 1;
        while (i >= 0 && image[static_cast<std::size_t>(i)] ==
                             values - half + static_cast<std::uint32_t>(i)) {
            --i;
        }
        if (i < 0) break;
        ++image[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < half; ++j) {
            image[j] = image[j - 1] + 1;
        }
    }
    return out;
}

std::uint64_t canonical_oracle_count(int n) {
    if (n < 1 || n > kMaxBits) throw UsageError("n out of range");
    return binomial_checked(1ull << n, 1ull << (n - 1));
}

std::uint64_t mapping_table_count(int n) {
    return mul_checked((1ull << n) - 1, canonical_oracle_count(n));
}

MappingTable random_oracle(int n, BitString s, std::uint64_t seed) {
    check_secret(n, s);
    const std::uint32_t values = 1u << n;
    const std::uint32_t half = values / 2;

    // Partial Fisher-Yates picks a uniform 2^(n-1)-subset; sorting it makes
    // the table the canonical representative of that subset.
    std::vector<std::uint32_t> pool(values);
    std::iota(pool.begin(), pool.end(), 0);
    auto rng = make_stream(seed, 0x0facadeULL);
    for (std::uint32_t i = 0; i < half; ++i) {
        std::uniform_int_distribution<std::uint32_t> pick(i, values - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<std::uint32_t> image(pool.begin(), pool.begin() + half);
    std::sort(image.begin(), image.end());

    return assemble(n, s, coset_reps(n, s), image);
}

OraclePermutation build_oracle_permutation(const MappingTable& f) {
    if (!is_simon_function(f)) {
        throw UsageError("build_oracle_permutation: table violates the promise");
    }
    if (f.n > kMaxPermutationQubits) {
        throw CapacityError("oracle permutation supported up to n = 8");
    }
    const std::uint32_t size = 1u << f.n;
    OraclePermutation u;
    u.n = f.n;
    u.perm.resize(static_cast<std::size_t>(size) * size);
    for (std::uint32_t x = 0; x < size; ++x) {
        const std::uint32_t fx = f.table[x].bits();
        const std::uint32_t base = x << f.n;
        for (std::uint32_t b = 0; b < size; ++b) {
            u.perm[base | b] = base | (b ^ fx);
        }
    }
    return u;
}

nlohmann::json to_json(const MappingTable& f) {
    nlohmann::json j;
    j["n"] = f.n;
    j["s"] = f.secret.str();
    auto& table = j["table"] = nlohmann::json::array();
    for (BitString v : f.table) table.push_back(v.str());
    return j;
}

MappingTable mapping_table_from_json(const nlohmann::json& j) {
    MappingTable f;
    f.n = j.at("n").get<int>();
    if (f.n < 1 || f.n > kMaxBits) throw UsageError("mapping table JSON: n out of range");
    f.secret = BitString::parse(j.at("s").get<std::string>());
    for (const auto& item : j.at("table")) {
        f.table.push_back(BitString::parse(item.get<std::string>()));
    }
    if (f.table.size() != (1ull << f.n)) {
        throw UsageError("mapping table JSON: table size != 2^n");
    }
    return f;
}

} // namespace qsimon
