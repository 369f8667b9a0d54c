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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsimon/bitstring.hpp"

namespace qsimon {

/// What the classical stage answers: a nonzero secret, or an admission that
/// the measurements did not determine one. A Failure never counts as a
/// correct answer.
class Guess {
  public:
    static Guess failure() { return Guess{}; }
    static Guess secret(BitString s) {
        if (s.is_zero()) throw UsageError("Guess: secret must be nonzero");
        Guess g;
        g.value_ = s;
        return g;
    }

    [[nodiscard]] bool is_secret() const { return value_.has_value(); }
    [[nodiscard]] BitString value() const {
        if (!value_) throw UsageError("Guess: no secret in a failure value");
        return *value_;
    }

    /// "fail" or the MSB-first bit string.
    [[nodiscard]] std::string str() const {
        return value_ ? value_->str() : std::string{"fail"};
    }
    static Guess parse(std::string_view text, int n);

    friend bool operator==(const Guess&, const Guess&) = default;

  private:
    std::optional<BitString> value_;
};

/// Deterministic map from a tuple of measured outcomes to a Guess.
class PostProcessor {
  public:
    virtual ~PostProcessor() = default;
    [[nodiscard]] virtual Guess guess(std::span<const BitString> ys) const = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

/// Linear-algebra route: the unique nonzero null-space element if the rows
/// pin one down, Failure otherwise.
Guess gf2_postprocess(std::span<const BitString> ys, int n);

class Gf2PostProcessor final : public PostProcessor {
  public:
    explicit Gf2PostProcessor(int n) : n_(n) {}
    [[nodiscard]] Guess guess(std::span<const BitString> ys) const override {
        return gf2_postprocess(ys, n_);
    }
    [[nodiscard]] std::string name() const override { return "gf2"; }

  private:
    int n_;
};

/**
 * @brief Trainable total map from J-multisets of outcomes to guesses.
 *
 * Keys are sorted tuples: measurement order carries no information, and the
 * multiset view shrinks the table from (2^n)^J to C(2^n + J - 1, J) entries.
 */
class LookupTable {
  public:
    LookupTable(int n, int J);

    /// Every entry preloaded with the linear-algebra answer.
    static LookupTable seeded_from_gf2(int n, int J);
    /// Every entry uniform over {Failure} + all nonzero secrets.
    static LookupTable random_init(int n, int J, std::uint64_t seed);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int tuple_size() const { return tuple_size_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const std::vector<std::vector<BitString>>& keys() const {
        return keys_;
    }

    [[nodiscard]] Guess entry(std::size_t idx) const { return values_.at(idx); }
    void set_entry(std::size_t idx, Guess g) { values_.at(idx) = std::move(g); }
    void swap_entries(std::size_t a, std::size_t b) {
        std::swap(values_.at(a), values_.at(b));
    }

    /// Sorts a copy of the tuple and returns the stored entry.
    [[nodiscard]] Guess lookup(std::span<const BitString> ys) const;

    [[nodiscard]] nlohmann::json to_json() const;
    static LookupTable from_json(const nlohmann::json& j);

    friend bool operator==(const LookupTable&, const LookupTable&) = default;

  private:
    int n_;
    int tuple_size_;
    std::vector<std::vector<BitString>> keys_; ///< sorted, lexicographic order
    std::vector<Guess> values_;
};

class TablePostProcessor final : public PostProcessor {
  public:
    explicit TablePostProcessor(const LookupTable& table) : table_(&table) {}
    [[nodiscard]] Guess guess(std::span<const BitString> ys) const override {
        return table_->lookup(ys);
    }
    [[nodiscard]] std::string name() const override { return "table"; }

  private:
    const LookupTable* table_;
};

/**
 * @brief Hill-climbing over output swaps.
 *
 * Each step picks two distinct entries uniformly at random, swaps their
 * outputs and keeps the swap only if the cost strictly decreases. Returns
 * the final table and the cost after every step (non-increasing by
 * construction).
 */
std::pair<LookupTable, std::vector<double>>
train_table(LookupTable table, const std::function<double(const LookupTable&)>& cost,
            int steps, std::uint64_t seed);

} // namespace qsimon
