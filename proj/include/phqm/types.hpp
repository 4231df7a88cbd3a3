// Copyright 2026 The phqm Authors
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

#ifndef PHQM_TYPES_HPP
#define PHQM_TYPES_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace phqm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dimensions (d1, d2) of a bipartite factorization, d1 * d2 = total.
struct FactorDims {
    Index d1 = 0;
    Index d2 = 0;

    Index total() const { return d1 * d2; }
};

/// Default relative tolerance; all tolerances are relative to operator 2-norms.
inline constexpr double kDefaultTol = 1e-10;

/// Operator 2-norm (largest singular value).
double op_norm(const CMatrix& m);

/// Frobenius distance to the Hermitian part, relative check helper.
bool is_hermitian(const CMatrix& m, double tol = kDefaultTol);

/// Largest-magnitude entry of a matrix.
double max_abs(const CMatrix& m);

}  // namespace phqm

#endif  // PHQM_TYPES_HPP
