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

#include "qsimon/gates.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace qsimon {

Mat2 restricted_gate(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {Cplx(c), Cplx(s), Cplx(s), Cplx(-c)};
}

Mat2 general_one_qubit_gate(const std::array<double, 4>& a) {
    const double omega = std::sqrt(a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
    const double k = omega < kOmegaEpsilon ? 1.0 : std::sin(omega) / omega;
    const double c = std::cos(omega);
    const Cplx phase = std::exp(Cplx(0.0, a[0]));
    // cos w * I + i k * (a1 X + a2 Y + a3 Z), then the global phase.
    return {
        phase * Cplx(c, k * a[3]),
        phase * Cplx(k * a[2], k * a[1]),
        phase * Cplx(-k * a[2], k * a[1]),
        phase * Cplx(c, -k * a[3]),
    };
}

Mat4 general_two_qubit_gate(const std::array<double, 16>& alpha) {
    using Eigen::Matrix2cd;
    using Eigen::Matrix4cd;
    const Cplx i{0.0, 1.0};

    std::array<Matrix2cd, 4> pauli;
    pauli[0] << 1, 0, 0, 1;
    pauli[1] << 0, 1, 1, 0;
    pauli[2] << 0, -i, i, 0;
    pauli[3] << 1, 0, 0, -1;

    Matrix4cd h = Matrix4cd::Zero();
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const double a = alpha[static_cast<std::size_t>(4 * j + k)];
            if (a == 0.0) continue;
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    h(r, c) += a * pauli[j](r / 2, c / 2) * pauli[k](r % 2, c % 2);
                }
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(h);
    Eigen::Vector4cd phases;
    for (int r = 0; r < 4; ++r) phases(r) = std::exp(i * es.eigenvalues()(r));
    const Matrix4cd u =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = u(r, c);
    }
    return out;
}

namespace {

template <std::size_t Dim>
double defect(const std::array<Cplx, Dim * Dim>& u) {
    double worst = 0.0;
    for (std::size_t r = 0; r < Dim; ++r) {
        for (std::size_t c = 0; c < Dim; ++c) {
            Cplx acc = 0.0;
            for (std::size_t k = 0; k < Dim; ++k) {
                acc += std::conj(u[k * Dim + r]) * u[k * Dim + c];
            }
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

} // namespace

double unitarity_defect(const Mat2& u) { return defect<2>(u); }
double unitarity_defect(const Mat4& u) { return defect<4>(u); }

} // namespace qsimon
