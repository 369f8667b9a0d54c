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

#include "qsimon/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "qsimon/kernels.hpp"

namespace qsimon {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 4> slice4(const ParamVector& params, const std::vector<int>& ids) {
    return {params[static_cast<std::size_t>(ids[0])],
            params[static_cast<std::size_t>(ids[1])],
            params[static_cast<std::size_t>(ids[2])],
            params[static_cast<std::size_t>(ids[3])]};
}

GateSite site(GateKind kind, std::vector<int> qubits, int first_id) {
    GateSite s;
    s.kind = kind;
    s.qubits = std::move(qubits);
    s.param_ids.resize(static_cast<std::size_t>(param_count(kind)));
    for (std::size_t i = 0; i < s.param_ids.size(); ++i) {
        s.param_ids[i] = first_id + static_cast<int>(i);
    }
    return s;
}

GateKind kind_for(GateFamily family) {
    switch (family) {
    case GateFamily::Restricted: return GateKind::Restricted;
    case GateFamily::General1Q: return GateKind::General1Q;
    case GateFamily::General2Q: return GateKind::General2Q;
    }
    throw UsageError("unknown gate family");
}

// Hadamard-equivalent block values per gate kind. For the general families
// the first angle is a pure global phase chosen so the matrix is exactly H
// (or H (x) H); any other choice only shifts an unobservable phase.
std::vector<double> simon_block(GateKind kind) {
    switch (kind) {
    case GateKind::Restricted: return {kPi / 4};
    case GateKind::General1Q:
        return {1.5 * kPi, kPi / (2 * std::numbers::sqrt2), 0.0,
                kPi / (2 * std::numbers::sqrt2)};
    case GateKind::General2Q: {
        std::vector<double> a(16, 0.0);
        a[0] = 1.5 * kPi;
        a[4 * 1 + 1] = kPi / 4;
        a[4 * 1 + 3] = kPi / 4;
        a[4 * 3 + 1] = kPi / 4;
        a[4 * 3 + 3] = kPi / 4;
        return a;
    }
    }
    throw UsageError("unknown gate kind");
}

} // namespace

int param_count(GateKind kind) {
    switch (kind) {
    case GateKind::Restricted: return 1;
    case GateKind::General1Q: return 4;
    case GateKind::General2Q: return 16;
    }
    throw UsageError("unknown gate kind");
}

void CircuitLayout::validate() const {
    if (n < 1 || n > kMaxRegisterQubits) {
        throw UsageError("layout: n out of range");
    }
    if (num_params < 1) throw UsageError("layout: no trainable parameters");
    std::set<int> used;
    for (const auto* layer : {&pre_layer, &post_layer}) {
        for (const GateSite& g : *layer) {
            const std::size_t arity = g.kind == GateKind::General2Q ? 2 : 1;
            if (g.qubits.size() != arity) {
                throw UsageError("layout: gate arity mismatch");
            }
            for (int q : g.qubits) {
                if (q < 1 || q > n) {
                    throw UsageError("layout: qubit slot outside first register");
                }
            }
            if (arity == 2 && g.qubits[0] == g.qubits[1]) {
                throw UsageError("layout: duplicate qubit in two-qubit site");
            }
            if (g.param_ids.size() != static_cast<std::size_t>(param_count(g.kind))) {
                throw UsageError("layout: parameter id count mismatch");
            }
            for (int id : g.param_ids) {
                if (id < 0 || id >= num_params) {
                    throw UsageError("layout: parameter id out of range");
                }
                used.insert(id);
            }
        }
    }
    if (static_cast<int>(used.size()) != num_params) {
        throw UsageError("layout: unused parameter ids");
    }
}

CircuitLayout make_standard_layout(StandardLayout which, GateFamily family) {
    const GateKind kind = kind_for(family);
    const int block = param_count(kind);
    CircuitLayout layout;

    if (family == GateFamily::General2Q) {
        if (which == StandardLayout::Fig6) {
            throw UsageError("two-qubit gate family needs an even qubit count");
        }
        layout.n = 2;
        // One pair covers the whole n=2 register; pre and post blocks are
        // independent for Fig4 and for Fig5 alike (two logical parameters
        // collapse onto two blocks as well).
        layout.pre_layer = {site(kind, {1, 2}, 0)};
        layout.post_layer = {site(kind, {1, 2}, block)};
        layout.num_params = 2 * block;
        layout.name = which == StandardLayout::Fig4 ? "fig4" : "fig5";
        layout.validate();
        return layout;
    }

    switch (which) {
    case StandardLayout::Fig4:
        layout.n = 2;
        layout.name = "fig4";
        layout.pre_layer = {site(kind, {1}, 0), site(kind, {2}, block)};
        layout.post_layer = {site(kind, {1}, 2 * block), site(kind, {2}, 2 * block)};
        layout.num_params = 3 * block;
        break;
    case StandardLayout::Fig5:
        layout.n = 2;
        layout.name = "fig5";
        layout.pre_layer = {site(kind, {1}, 0), site(kind, {2}, 0)};
        layout.post_layer = {site(kind, {1}, block), site(kind, {2}, block)};
        layout.num_params = 2 * block;
        break;
    case StandardLayout::Fig6:
        layout.n = 3;
        layout.name = "fig6";
        // Shared angle on qubits 2-3 before the oracle, an independent angle
        // on qubit 1, one shared angle after. Declared in run metadata.
        layout.pre_layer = {site(kind, {1}, 2 * block), site(kind, {2}, 0),
                            site(kind, {3}, 0)};
        layout.post_layer = {site(kind, {1}, block), site(kind, {2}, block),
                             site(kind, {3}, block)};
        layout.num_params = 3 * block;
        break;
    }
    layout.validate();
    return layout;
}

ParamVector simon_point(const CircuitLayout& layout) {
    ParamVector params(static_cast<std::size_t>(layout.num_params), 0.0);
    for (const auto* layer : {&layout.pre_layer, &layout.post_layer}) {
        for (const GateSite& g : *layer) {
            const auto block = simon_block(g.kind);
            for (std::size_t i = 0; i < block.size(); ++i) {
                params[static_cast<std::size_t>(g.param_ids[i])] = block[i];
            }
        }
    }
    return params;
}

CircuitLayout layout_from_json(const nlohmann::json& j) {
    CircuitLayout layout;
    layout.n = j.at("n").get<int>();
    layout.name = j.value("name", std::string{"custom"});
    layout.num_params = j.at("num_params").get<int>();
    auto parse_layer = [](const nlohmann::json& arr) {
        std::vector<GateSite> layer;
        for (const auto& item : arr) {
            GateSite g;
            const auto kind = item.at("kind").get<std::string>();
            if (kind == "restricted") {
                g.kind = GateKind::Restricted;
            } else if (kind == "general1q") {
                g.kind = GateKind::General1Q;
            } else if (kind == "general2q") {
                g.kind = GateKind::General2Q;
            } else {
                throw UsageError("layout JSON: unknown gate kind '" + kind + "'");
            }
            g.qubits = item.at("qubits").get<std::vector<int>>();
            g.param_ids = item.at("param_ids").get<std::vector<int>>();
            layer.push_back(std::move(g));
        }
        return layer;
    };
    layout.pre_layer = parse_layer(j.at("pre"));
    layout.post_layer = parse_layer(j.at("post"));
    layout.validate();
    return layout;
}

nlohmann::json to_json(const CircuitLayout& layout) {
    auto dump_layer = [](const std::vector<GateSite>& layer) {
        nlohmann::json arr = nlohmann::json::array();
        for (const GateSite& g : layer) {
            const char* kind = g.kind == GateKind::Restricted ? "restricted"
                               : g.kind == GateKind::General1Q ? "general1q"
                                                               : "general2q";
            arr.push_back({{"kind", kind}, {"qubits", g.qubits}, {"param_ids", g.param_ids}});
        }
        return arr;
    };
    return {{"n", layout.n},
            {"name", layout.name},
            {"num_params", layout.num_params},
            {"pre", dump_layer(layout.pre_layer)},
            {"post", dump_layer(layout.post_layer)}};
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (Cplx a : amps) acc += std::norm(a);
    return acc;
}

StateVector zero_state(int n) {
    if (n < 1 || n > kMaxRegisterQubits) {
        throw CapacityError("statevector supported up to n = 8 per register");
    }
    StateVector state;
    state.n = n;
    state.amps.assign(std::size_t{1} << (2 * n), Cplx{0.0, 0.0});
    state.amps[0] = 1.0;
    return state;
}

void apply_layer(StateVector& state, const std::vector<GateSite>& layer,
                 const CircuitLayout& layout, const ParamVector& params) {
    if (static_cast<int>(params.size()) != layout.num_params) {
        throw UsageError("parameter vector length does not match the layout");
    }
    const int total_bits = 2 * state.n;
    for (const GateSite& g : layer) {
        switch (g.kind) {
        case GateKind::Restricted: {
            const Mat2 m = restricted_gate(params[static_cast<std::size_t>(g.param_ids[0])]);
            kernels::apply_one_qubit_gate(state.amps, m, total_bits - g.qubits[0]);
            break;
        }
        case GateKind::General1Q: {
            const Mat2 m = general_one_qubit_gate(slice4(params, g.param_ids));
            kernels::apply_one_qubit_gate(state.amps, m, total_bits - g.qubits[0]);
            break;
        }
        case GateKind::General2Q: {
            std::array<double, 16> a;
            for (std::size_t i = 0; i < 16; ++i) {
                a[i] = params[static_cast<std::size_t>(g.param_ids[i])];
            }
            const Mat4 m = general_two_qubit_gate(a);
            kernels::apply_two_qubit_gate(state.amps, m, total_bits - g.qubits[0],
                                          total_bits - g.qubits[1]);
            break;
        }
        }
    }
}

void apply_oracle(StateVector& state, const OraclePermutation& oracle) {
    if (oracle.n != state.n || oracle.perm.size() != state.amps.size()) {
        throw UsageError("oracle dimension does not match the state");
    }
    std::vector<Cplx> out(state.amps.size());
    kernels::apply_permutation(oracle.perm, state.amps, out);
    state.amps = std::move(out);
}

void OutcomeDistribution::validate() const {
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= -1e-12)) throw NumericalError("negative outcome probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw NumericalError("outcome probabilities do not sum to 1");
    }
}

OutcomeDistribution output_distribution(const CircuitLayout& layout,
                                        const ParamVector& params,
                                        const OraclePermutation& oracle) {
    layout.validate();
    if (oracle.n != layout.n) throw UsageError("oracle size does not match layout");
    StateVector state = zero_state(layout.n);
    apply_layer(state, layout.pre_layer, layout, params);
    apply_oracle(state, oracle);
    apply_layer(state, layout.post_layer, layout, params);

    OutcomeDistribution dist;
    dist.n = layout.n;
    dist.probs.assign(std::size_t{1} << layout.n, 0.0);
    kernels::marginal_probabilities(state.amps, layout.n, dist.probs);
    return dist;
}

OutcomeDistribution output_distribution(const CircuitLayout& layout,
                                        const ParamVector& params,
                                        const MappingTable& f) {
    return output_distribution(layout, params, build_oracle_permutation(f));
}

OutcomeDistribution simon_reference_distribution(int n, BitString s) {
    if (s.width() != n) throw UsageError("secret width != n");
    if (s.is_zero()) throw UsageError("secret must be nonzero");
    OutcomeDistribution dist;
    dist.n = n;
    dist.probs.assign(std::size_t{1} << n, 0.0);
    const double p = 1.0 / static_cast<double>(std::size_t{1} << (n - 1));
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
        if (dot2(BitString(n, y), s) == 0) dist.probs[y] = p;
    }
    return dist;
}

std::string distribution_csv(const OutcomeDistribution& dist) {
    std::string out = "y,prob\n";
    char buf[64];
    for (std::uint32_t y = 0; y < dist.probs.size(); ++y) {
        std::snprintf(buf, sizeof buf, "%.17g", dist.probs[y]);
        out += BitString(dist.n, y).str();
        out += ',';
        out += buf;
        out += '\n';
    }
    return out;
}

} // namespace qsimon
