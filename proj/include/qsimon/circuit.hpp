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

#include <string>
#include <vector>

#include <json.hpp>

#include "qsimon/gates.hpp"
#include "qsimon/oracle.hpp"

namespace qsimon {

/// Simulation is exact (dense statevector); sizes are capped well below
/// anything a desk machine would mind.
inline constexpr int kMaxRegisterQubits = 8;

using ParamVector = std::vector<double>;

enum class GateKind { Restricted, General1Q, General2Q };

/// Trainable angles a gate of this kind consumes.
int param_count(GateKind kind);

/**
 * @brief One placed gate: which first-register qubits it acts on (1-indexed,
 * qubit 1 topmost) and which entries of the shared parameter vector feed it.
 *
 * Tying is expressed by reuse: sites that share a parameter id share the
 * trainable value.
 */
struct GateSite {
    GateKind kind = GateKind::Restricted;
    std::vector<int> qubits;
    std::vector<int> param_ids;

    friend bool operator==(const GateSite&, const GateSite&) = default;
};

/**
 * @brief Gate placements for the two trainable layers around the oracle.
 *
 * Gates act on the first register only; the second register is touched by
 * nothing but the oracle permutation.
 */
struct CircuitLayout {
    int n = 2;
    std::string name = "custom";
    std::vector<GateSite> pre_layer;
    std::vector<GateSite> post_layer;
    int num_params = 0;

    /// Throws UsageError on bad qubit slots, dangling/unused parameter ids,
    /// or sites of the wrong arity.
    void validate() const;
};

enum class StandardLayout { Fig4, Fig5, Fig6 };
enum class GateFamily { Restricted, General1Q, General2Q };

/**
 * @brief The three stock layouts.
 *
 * - Fig4 (n=2): independent pre-layer angles on each qubit, one shared
 *   post-layer angle. Three logical parameters.
 * - Fig5 (n=2): one shared pre-layer angle, one shared post-layer angle.
 *   Two logical parameters; the layout the landscape scan requires.
 * - Fig6 (n=3): shared pre-layer angle on qubits 2-3, an independent
 *   pre-layer angle on qubit 1, one shared post-layer angle. Three logical
 *   parameters.
 *
 * With GateFamily::General1Q every logical parameter becomes a block of 4
 * angles; General2Q (even n only, gates on qubit pairs (1,2), (3,4), ...)
 * a block of 16.
 */
CircuitLayout make_standard_layout(StandardLayout which, GateFamily family);

/// Parameters that make every trainable gate the Hadamard (up to a global
/// phase for the general families), reproducing the textbook interference
/// circuit.
ParamVector simon_point(const CircuitLayout& layout);

CircuitLayout layout_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CircuitLayout& layout);

/// Dense 2^(2n)-amplitude state over (first register, second register),
/// first register most significant.
struct StateVector {
    int n = 0;
    std::vector<Cplx> amps;

    [[nodiscard]] double norm_squared() const;
};

StateVector zero_state(int n);

/// Contracts every gate of the layer into the state.
void apply_layer(StateVector& state, const std::vector<GateSite>& layer,
                 const CircuitLayout& layout, const ParamVector& params);

/// out[perm[i]] = in[i].
void apply_oracle(StateVector& state, const OraclePermutation& oracle);

/// Probability of each first-register outcome y.
struct OutcomeDistribution {
    int n = 0;
    std::vector<double> probs;

    /// Throws NumericalError if entries are negative or do not sum to 1
    /// within 1e-12.
    void validate() const;
};

/// Full run: |0...0> -> pre layer -> oracle -> post layer -> first-register
/// marginal.
OutcomeDistribution output_distribution(const CircuitLayout& layout,
                                        const ParamVector& params,
                                        const MappingTable& f);

/// Same, against a prebuilt oracle permutation (hot path for cost loops).
OutcomeDistribution output_distribution(const CircuitLayout& layout,
                                        const ParamVector& params,
                                        const OraclePermutation& oracle);

/// Analytic target: uniform 1/2^(n-1) over {y : y . s = 0}, zero elsewhere.
OutcomeDistribution simon_reference_distribution(int n, BitString s);

/// "y,prob" CSV rows, MSB-first y.
std::string distribution_csv(const OutcomeDistribution& dist);

} // namespace qsimon
