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

#ifndef PHQM_GNS_HPP
#define PHQM_GNS_HPP

#include <vector>

#include "phqm/types.hpp"

namespace phqm {

/// A concrete *-algebra of complex matrices, stored through a
/// Hilbert-Schmidt-orthonormal basis of its span. The basis is closed under
/// products and conjugate transposition (to tolerance) and contains the
/// identity in its span.
class MatrixAlgebra {
public:
    /// Closes the span of {identity, generators} under products and adjoints
    /// using rank-revealing orthogonalization until the span stabilizes.
    static MatrixAlgebra close(const std::vector<CMatrix>& generators,
                               double tol = kDefaultTol);

    Index ambient_dim() const { return ambient_dim_; }
    const std::vector<CMatrix>& basis() const { return basis_; }
    const std::vector<CMatrix>& generators() const { return generators_; }
    Index size() const { return static_cast<Index>(basis_.size()); }

    /// Coordinates of a matrix in the orthonormal basis; optionally reports
    /// the norm of the component outside the span.
    CVector coordinates(const CMatrix& m, double* residual = nullptr) const;

    /// Linear combination sum_i c_i basis_i.
    CMatrix from_coordinates(const CVector& coords) const;

private:
    Index ambient_dim_ = 0;
    std::vector<CMatrix> basis_;
    std::vector<CMatrix> generators_;
};

/// A positive normalized linear functional on a MatrixAlgebra, given by its
/// values on the basis elements.
class StateFunctional {
public:
    /// omega(A) = tr(rho A) for an ambient density matrix rho.
    static StateFunctional from_density(const MatrixAlgebra& algebra, const CMatrix& rho,
                                        double tol = 1e-8);
    static StateFunctional from_values(const MatrixAlgebra& algebra, const CVector& values,
                                       double tol = 1e-8);

    const MatrixAlgebra& algebra() const { return algebra_; }
    const CVector& values() const { return values_; }

    /// Linear extension to the span of the algebra.
    Complex evaluate(const CMatrix& m) const;

    /// Gram matrix Gamma[i,j] = omega(basis_i^dag basis_j).
    CMatrix gram() const;

private:
    StateFunctional(MatrixAlgebra algebra, CVector values)
        : algebra_(std::move(algebra)), values_(std::move(values)) {}
    void validate(double tol) const;

    MatrixAlgebra algebra_;
    CVector values_;
};

/// A finite-dimensional GNS representation: the Hilbert space obtained by
/// quotienting the Gelfand ideal out of the algebra, the represented basis
/// elements, and the cyclic vector (the image of the identity).
struct GnsRepresentation {
    Index hilbert_dim = 0;
    std::vector<CMatrix> rep;  // one matrix per algebra basis element
    CVector cyclic_vector;
    CMatrix quotient;  // algebra coordinates -> Hilbert-space coordinates
};

/// GNS construction: kernel extraction via the Gram eigendecomposition with a
/// relative cutoff, whitening so the induced inner product is Euclidean, and
/// left multiplication pushed through the quotient.
GnsRepresentation gns_construct(const StateFunctional& omega, double tol = kDefaultTol);

/// Representation of the product system on the tensor Hilbert space: basis
/// pairs map to Kronecker products, the cyclic vector is the tensor of the
/// cyclic vectors, and the induced state factorizes.
GnsRepresentation product_representation(const GnsRepresentation& r1,
                                         const GnsRepresentation& r2);

/// Residual of the projection of the reconstructed density operator (the
/// rank-one projector onto the cyclic vector) onto the span of the
/// represented algebra; zero means the state's density operator lies inside
/// the represented algebra.
double density_membership_residual(const GnsRepresentation& rep);

}  // namespace phqm

#endif  // PHQM_GNS_HPP
