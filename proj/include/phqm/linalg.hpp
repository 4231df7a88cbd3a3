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

#ifndef PHQM_LINALG_HPP
#define PHQM_LINALG_HPP

#include <vector>

#include "phqm/types.hpp"

namespace phqm {

/// One eigenvalue with its right and left eigenvectors, normalized so that
/// left.dot(right) == 1 across a full biorthonormal decomposition.
struct EigenPair {
    Complex value;
    CVector right;
    CVector left;
};

/// Full biorthonormal eigendecomposition of a diagonalizable square matrix.
/// Pairs are sorted by (real, imaginary) part of the eigenvalue. Right
/// eigenvectors have unit Euclidean norm with their largest-magnitude entry
/// rotated real-positive; left vectors are the biorthonormal duals.
/// Throws NonDiagonalizable when the eigenvector matrix is rank-deficient
/// relative to tol, DimensionMismatch for non-square input.
std::vector<EigenPair> eig_general(const CMatrix& m, double tol = kDefaultTol);

/// Unique Hermitian positive-definite square root of a Hermitian
/// positive-definite matrix. Throws NotHermitian / NotPositiveDefinite.
CMatrix sqrt_pd(const CMatrix& g, double tol = kDefaultTol);

/// Kronecker product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Partial trace over one factor of a (d1*d2)-dimensional operator.
/// keep == 1 traces out the second factor, keep == 2 the first.
CMatrix partial_trace(const CMatrix& m, FactorDims dims, int keep);

/// Realignment R[(i,k),(j,l)] = M[(i,j),(k,l)] under row-major index pairing;
/// maps A (x) B to the rank-one matrix vec(A) vec(B)^T. Result is d1^2 x d2^2.
CMatrix reshuffle(const CMatrix& m, FactorDims dims);

/// Row-major vectorization (row index varies slowest), inverse of unvec_rm.
CVector vec_rm(const CMatrix& m);
CMatrix unvec_rm(const CVector& v, Index rows, Index cols);

}  // namespace phqm

#endif  // PHQM_LINALG_HPP
