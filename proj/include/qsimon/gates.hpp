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

#include <array>
#include <complex>

namespace qsimon {

using Cplx = std::complex<double>;

/// Row-major 2x2 / 4x4 unitaries.
using Mat2 = std::array<Cplx, 4>;
using Mat4 = std::array<Cplx, 16>;

/// Below this the sin(w)/w factor switches to its limit value 1.
inline constexpr double kOmegaEpsilon = 1e-8;

/**
 * @brief One-parameter family [[cos t, sin t], [sin t, -cos t]].
 *
 * Real, unitary and involutory for every angle; t = pi/4 is the Hadamard,
 * t = 0 is Pauli-Z and t = pi/2 is Pauli-X.
 */
Mat2 restricted_gate(double theta);

/**
 * @brief General one-qubit unitary from four angles.
 *
 * Closed form exp(i a0) * (cos w * I + i sin(w)/w * (a1 X + a2 Y + a3 Z))
 * with w = sqrt(a1^2 + a2^2 + a3^2); equal to the matrix exponential
 * exp(i * sum_j a_j sigma_j). The w -> 0 singularity is removable.
 */
Mat2 general_one_qubit_gate(const std::array<double, 4>& alpha);

/**
 * @brief General two-qubit unitary exp(i H), H = sum_{j,k} a_{j,k}
 * sigma_j (x) sigma_k with row-major alpha[4*j + k].
 *
 * H is Hermitian for real coefficients, so the exponential is evaluated by
 * eigendecomposition.
 */
Mat4 general_two_qubit_gate(const std::array<double, 16>& alpha);

/// max |(U^dag U - I)_{ij}|; zero for exact unitaries.
double unitarity_defect(const Mat2& u);
double unitarity_defect(const Mat4& u);

} // namespace qsimon
