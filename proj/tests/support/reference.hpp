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

// Test-only reference implementations. Everything here recomputes results by
// a route independent of the library code it checks: dense matrices instead
// of in-place kernels, series exponentials instead of closed forms or
// eigendecompositions, exhaustive candidate search instead of elimination,
// ordered tuple enumeration instead of multiset compression.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qsimon/circuit.hpp"
#include "qsimon/cost.hpp"
#include "qsimon/gf2.hpp"

namespace testref {

using Cplx = std::complex<double>;
using CMat = std::vector<std::vector<Cplx>>;
using CVec = std::vector<Cplx>;

inline CMat identity(std::size_t dim) {
    CMat m(dim, CVec(dim, Cplx{0.0}));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    CMat out(ra * rb, CVec(ca * cb, Cplx{0.0}));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

inline CMat matmul(const CMat& a, const CMat& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    CMat out(n, CVec(m, Cplx{0.0}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][p] * b[p][j];
    return out;
}

inline CVec matvec(const CMat& a, const CVec& v) {
    CVec out(a.size(), Cplx{0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline double max_abs_diff(const CMat& a, const CMat& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

/// exp(M) by scaling and squaring with a straight Taylor series.
inline CMat expm_series(CMat m) {
    double norm1 = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i) col += std::abs(m[i][j]);
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    while (norm1 > 0.5) {
        norm1 /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& row : m)
        for (auto& x : row) x *= scale;

    CMat sum = identity(m.size());
    CMat term = identity(m.size());
    for (int k = 1; k <= 40; ++k) {
        term = matmul(term, m);
        double biggest = 0.0;
        for (std::size_t i = 0; i < term.size(); ++i)
            for (std::size_t j = 0; j < term.size(); ++j) {
                term[i][j] /= static_cast<double>(k);
                biggest = std::max(biggest, std::abs(term[i][j]));
            }
        for (std::size_t i = 0; i < term.size(); ++i)
            for (std::size_t j = 0; j < term.size(); ++j) sum[i][j] += term[i][j];
        if (biggest < 1e-30) break;
    }
    for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
    return sum;
}

inline CMat pauli(int which) {
    const Cplx i{0.0, 1.0};
    switch (which) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -i}, {i, 0.0}};
    default: return {{1.0, 0.0}, {0.0, -1.0}};
    }
}

inline CMat from_mat2(const qsimon::Mat2& g) {
    return {{g[0], g[1]}, {g[2], g[3]}};
}

inline CMat from_mat4(const qsimon::Mat4& g) {
    CMat m(4, CVec(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] = g[4 * r + c];
    return m;
}

/// Full 2^(2n) x 2^(2n) matrix of one trainable layer, built by kron chains.
inline CMat dense_layer(const qsimon::CircuitLayout& layout,
                        const std::vector<qsimon::GateSite>& layer,
                        const qsimon::ParamVector& params) {
    const int total = 2 * layout.n;
    CMat acc = identity(std::size_t{1} << total);
    for (const qsimon::GateSite& site : layer) {
        CMat gate;
        int top; // 1-indexed position of the gate's first qubit
        if (site.kind == qsimon::GateKind::Restricted) {
            gate = from_mat2(
                qsimon::restricted_gate(params[static_cast<std::size_t>(site.param_ids[0])]));
            top = site.qubits[0];
        } else if (site.kind == qsimon::GateKind::General1Q) {
            std::array<double, 4> a;
            for (std::size_t i = 0; i < 4; ++i)
                a[i] = params[static_cast<std::size_t>(site.param_ids[i])];
            gate = from_mat2(qsimon::general_one_qubit_gate(a));
            top = site.qubits[0];
        } else {
            std::array<double, 16> a;
            for (std::size_t i = 0; i < 16; ++i)
                a[i] = params[static_cast<std::size_t>(site.param_ids[i])];
            gate = from_mat4(qsimon::general_two_qubit_gate(a));
            if (site.qubits[1] != site.qubits[0] + 1) {
                throw std::runtime_error("dense reference handles adjacent pairs only");
            }
            top = site.qubits[0];
        }
        const int width = site.kind == qsimon::GateKind::General2Q ? 2 : 1;
        CMat op = identity(1);
        op[0][0] = 1.0;
        for (int q = 1; q <= total;) {
            if (q == top) {
                op = kron(op, gate);
                q += width;
            } else {
                op = kron(op, identity(2));
                q += 1;
            }
        }
        acc = matmul(op, acc);
    }
    return acc;
}

inline CMat dense_permutation(const qsimon::OraclePermutation& oracle) {
    CMat m(oracle.perm.size(), CVec(oracle.perm.size(), Cplx{0.0}));
    for (std::size_t i = 0; i < oracle.perm.size(); ++i) m[oracle.perm[i]][i] = 1.0;
    return m;
}

/// Whole pipeline as one dense matrix applied to |0...0>.
inline qsimon::OutcomeDistribution dense_output_distribution(
    const qsimon::CircuitLayout& layout, const qsimon::ParamVector& params,
    const qsimon::MappingTable& f) {
    const CMat pre = dense_layer(layout, layout.pre_layer, params);
    const CMat post = dense_layer(layout, layout.post_layer, params);
    const CMat oracle = dense_permutation(qsimon::build_oracle_permutation(f));
    const CMat total = matmul(post, matmul(oracle, pre));

    CVec state(total.size(), Cplx{0.0});
    state[0] = 1.0;
    state = matvec(total, state);

    qsimon::OutcomeDistribution dist;
    dist.n = layout.n;
    dist.probs.assign(std::size_t{1} << layout.n, 0.0);
    const std::size_t block = std::size_t{1} << layout.n;
    for (std::size_t i = 0; i < state.size(); ++i) {
        dist.probs[i / block] += std::norm(state[i]);
    }
    return dist;
}

/// Exhaustive candidate search over every nonzero s.
inline qsimon::Gf2Solution exhaustive_solve(const std::vector<qsimon::BitString>& rows,
                                            int n) {
    std::vector<qsimon::BitString> found;
    for (std::uint32_t c = 1; c < (1u << n); ++c) {
        const qsimon::BitString cand(n, c);
        bool ok = true;
        for (qsimon::BitString row : rows) {
            if (qsimon::dot2(row, cand) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(cand);
    }
    qsimon::Gf2Solution sol;
    if (found.empty()) {
        sol.kind = qsimon::Gf2Solution::Kind::NoNonzeroSolution;
        sol.nullspace_dim = 0;
    } else if (found.size() == 1) {
        sol.kind = qsimon::Gf2Solution::Kind::UniqueNonzero;
        sol.secret = found.front();
        sol.nullspace_dim = 1;
    } else {
        sol.kind = qsimon::Gf2Solution::Kind::Ambiguous;
        int dim = 0;
        while ((std::size_t{1} << dim) < found.size() + 1) ++dim;
        sol.nullspace_dim = dim;
    }
    return sol;
}

/// Guess built on exhaustive_solve; independent of the production gf2 path.
class ExhaustivePost final : public qsimon::PostProcessor {
  public:
    explicit ExhaustivePost(int n) : n_(n) {}
    [[nodiscard]] qsimon::Guess guess(std::span<const qsimon::BitString> ys) const override {
        const auto sol = exhaustive_solve({ys.begin(), ys.end()}, n_);
        if (sol.kind == qsimon::Gf2Solution::Kind::UniqueNonzero) {
            return qsimon::Guess::secret(sol.secret);
        }
        return qsimon::Guess::failure();
    }
    [[nodiscard]] std::string name() const override { return "exhaustive"; }

  private:
    int n_;
};

/// Success probability by brute-force ordered tuple enumeration over
/// (2^n)^J tuples (no multiset compression).
inline double brute_force_success(const qsimon::OutcomeDistribution& dist,
                                  qsimon::BitString secret, int J,
                                  const qsimon::PostProcessor& post) {
    const std::uint64_t values = std::uint64_t{1} << dist.n;
    std::uint64_t tuples = 1;
    for (int i = 0; i < J; ++i) tuples *= values;

    double total = 0.0;
    std::vector<qsimon::BitString> ys(static_cast<std::size_t>(J),
                                      qsimon::BitString(dist.n, 0));
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rest = t;
        double prob = 1.0;
        for (int q = 0; q < J; ++q) {
            const auto y = static_cast<std::uint32_t>(rest % values);
            rest /= values;
            ys[static_cast<std::size_t>(q)] = qsimon::BitString(dist.n, y);
            prob *= dist.probs[y];
        }
        if (prob == 0.0) continue;
        const qsimon::Guess g = post.guess(ys);
        if (g.is_secret() && g.value() == secret) total += prob;
    }
    return total;
}

/// Pascal's triangle, for checking the counting formulas.
inline std::uint64_t pascal_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace testref
