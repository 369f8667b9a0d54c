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

#include "qsimon/postprocess.hpp"

#include <algorithm>

#include "qsimon/gf2.hpp"
#include "qsimon/rng.hpp"

namespace qsimon {

Guess Guess::parse(std::string_view text, int n) {
    if (text == "fail") return failure();
    BitString s = BitString::parse(text);
    if (s.width() != n) throw UsageError("Guess::parse: width mismatch");
    return secret(s);
}

Guess gf2_postprocess(std::span<const BitString> ys, int n) {
    const Gf2Solution sol = solve_for_secret(ys, n);
    if (sol.kind == Gf2Solution::Kind::UniqueNonzero) {
        return Guess::secret(sol.secret);
    }
    return Guess::failure();
}

LookupTable::LookupTable(int n, int J) : n_(n), tuple_size_(J) {
    if (n < 1 || n > kMaxBits) throw UsageError("LookupTable: n out of range");
    if (J < 1) throw UsageError("LookupTable: tuple size must be >= 1");
    const std::uint32_t values = 1u << n;

    // All non-decreasing J-tuples over {0 .. 2^n - 1}, lexicographic.
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(J), 0);
    while (true) {
        std::vector<BitString> key;
        key.reserve(tuple.size());
        for (std::uint32_t v : tuple) key.emplace_back(n, v);
        keys_.push_back(std::move(key));

        int i = J - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == values - 1) --i;
        if (i < 0) break;
        const std::uint32_t next = tuple[static_cast<std::size_t>(i)] + 1;
        for (std::size_t j = static_cast<std::size_t>(i); j < tuple.size(); ++j) {
            tuple[j] = next;
        }
    }
    values_.assign(keys_.size(), Guess::failure());
}

LookupTable LookupTable::seeded_from_gf2(int n, int J) {
    LookupTable t(n, J);
    for (std::size_t i = 0; i < t.size(); ++i) {
        t.values_[i] = gf2_postprocess(t.keys_[i], n);
    }
    return t;
}

LookupTable LookupTable::random_init(int n, int J, std::uint64_t seed) {
    LookupTable t(n, J);
    auto rng = make_stream(seed, 0x7ab1eULL);
    // 0 encodes Failure, 1 .. 2^n - 1 the nonzero secrets.
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::uint32_t v = pick(rng);
        t.values_[i] = v == 0 ? Guess::failure() : Guess::secret(BitString(n, v));
    }
    return t;
}

Guess LookupTable::lookup(std::span<const BitString> ys) const {
    if (ys.size() != static_cast<std::size_t>(tuple_size_)) {
        throw UsageError("LookupTable::lookup: tuple size mismatch");
    }
    std::vector<BitString> key(ys.begin(), ys.end());
    for (BitString y : key) {
        if (y.width() != n_) throw UsageError("LookupTable::lookup: width mismatch");
    }
    std::sort(key.begin(), key.end());
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) {
        // Keys cover every multiset by construction.
        throw NumericalError("LookupTable: missing entry (internal invariant)");
    }
    return values_[static_cast<std::size_t>(it - keys_.begin())];
}

nlohmann::json LookupTable::to_json() const {
    nlohmann::json entries = nlohmann::json::object();
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        std::string key;
        for (std::size_t j = 0; j < keys_[i].size(); ++j) {
            if (j) key += ',';
            key += keys_[i][j].str();
        }
        entries[key] = values_[i].str();
    }
    return {{"n", n_}, {"J", tuple_size_}, {"entries", entries}};
}

LookupTable LookupTable::from_json(const nlohmann::json& j) {
    LookupTable t(j.at("n").get<int>(), j.at("J").get<int>());
    const auto& entries = j.at("entries");
    if (entries.size() != t.size()) {
        throw UsageError("LookupTable JSON: wrong entry count");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::string key;
        for (std::size_t k = 0; k < t.keys_[i].size(); ++k) {
            if (k) key += ',';
            key += t.keys_[i][k].str();
        }
        t.values_[i] = Guess::parse(entries.at(key).get<std::string>(), t.n_);
    }
    return t;
}

std::pair<LookupTable, std::vector<double>>
train_table(LookupTable table, const std::function<double(const LookupTable&)>& cost,
            int steps, std::uint64_t seed) {
    if (steps < 0) throw UsageError("train_table: steps must be >= 0");
    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(steps));
    if (steps == 0) return {std::move(table), std::move(trace)};

    auto rng = make_stream(seed, 0x5a9cULL);
    std::uniform_int_distribution<std::size_t> first(0, table.size() - 1);
    std::uniform_int_distribution<std::size_t> second(0, table.size() - 2);

    double current = cost(table);
    for (int step = 0; step < steps; ++step) {
        const std::size_t a = first(rng);
        std::size_t b = second(rng);
        if (b >= a) ++b; // uniform over distinct pairs
        table.swap_entries(a, b);
        const double candidate = cost(table);
        if (candidate < current) {
            current = candidate;
        } else {
            table.swap_entries(a, b);
        }
        trace.push_back(current);
    }
    return {std::move(table), std::move(trace)};
}

} // namespace qsimon
