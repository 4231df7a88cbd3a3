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

#include "phqm/gns.hpp"

#include <string>

#include <Eigen/Eigenvalues>

#include "phqm/errors.hpp"
#include "phqm/linalg.hpp"

namespace phqm {

namespace {

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
    return (a.adjoint() * b).trace();
}

// Appends the component of m orthogonal to the current basis when it is
// numerically significant; returns true when the basis grew.
bool try_extend(std::vector<CMatrix>& basis, const CMatrix& m, double tol) {
    CMatrix residual = m;
    for (const CMatrix& b : basis) residual -= hs_inner(b, residual) * b;
    // Second orthogonalization pass for numerical stability.
    for (const CMatrix& b : basis) residual -= hs_inner(b, residual) * b;
    const double norm = residual.norm();
    if (norm <= tol * std::max(1.0, m.norm())) return false;
    basis.push_back(residual / norm);
    return true;
}

}  // namespace

MatrixAlgebra MatrixAlgebra::close(const std::vector<CMatrix>& generators, double tol) {
    if (generators.empty()) {
        throw Error(ErrorKind::InvalidArgument, "close: at least one generator required");
    }
    const Index d = generators.front().rows();
    for (const CMatrix& g : generators) {
        if (g.rows() != d || g.cols() != d) {
            throw Error(ErrorKind::DimensionMismatch, "close: generators must be square and same dimension");
        }
    }

    MatrixAlgebra algebra;
    algebra.ambient_dim_ = d;
    algebra.generators_ = generators;

    std::vector<CMatrix>& basis = algebra.basis_;
    try_extend(basis, CMatrix::Identity(d, d), tol);
    for (const CMatrix& g : generators) {
        try_extend(basis, g, tol);
        try_extend(basis, g.adjoint(), tol);
    }

    bool grew = true;
    while (grew) {
        grew = false;
        const size_t count = basis.size();
        for (size_t i = 0; i < count; ++i) {
            if (try_extend(basis, basis[i].adjoint(), tol)) grew = true;
            for (size_t j = 0; j < count; ++j) {
                if (try_extend(basis, basis[i] * basis[j], tol)) grew = true;
            }
        }
        if (static_cast<Index>(basis.size()) > d * d) {
            throw Error(ErrorKind::BasisOverflow,
                        "closure exceeded ambient dimension squared (" +
                            std::to_string(basis.size()) + " elements)");
        }
    }
    return algebra;
}

CVector MatrixAlgebra::coordinates(const CMatrix& m, double* residual) const {
    if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) {
        throw Error(ErrorKind::DimensionMismatch, "coordinates: dimension mismatch");
    }
    CVector coords(size());
    CMatrix rest = m;
    for (Index i = 0; i < size(); ++i) {
        coords(i) = hs_inner(basis_[static_cast<size_t>(i)], m);
        rest -= coords(i) * basis_[static_cast<size_t>(i)];
    }
    if (residual != nullptr) *residual = rest.norm();
    return coords;
}

CMatrix MatrixAlgebra::from_coordinates(const CVector& coords) const {
    if (coords.size() != size()) {
        throw Error(ErrorKind::DimensionMismatch, "from_coordinates: coordinate count mismatch");
    }
    CMatrix m = CMatrix::Zero(ambient_dim_, ambient_dim_);
    for (Index i = 0; i < size(); ++i) m += coords(i) * basis_[static_cast<size_t>(i)];
    return m;
}

StateFunctional StateFunctional::from_density(const MatrixAlgebra& algebra, const CMatrix& rho,
                                              double tol) {
    if (rho.rows() != algebra.ambient_dim() || rho.cols() != algebra.ambient_dim()) {
        throw Error(ErrorKind::DimensionMismatch, "from_density: density matrix dimension mismatch");
    }
    CVector values(algebra.size());
    for (Index i = 0; i < algebra.size(); ++i) {
        values(i) = (rho * algebra.basis()[static_cast<size_t>(i)]).trace();
    }
    StateFunctional omega(algebra, std::move(values));
    omega.validate(tol);
    return omega;
}

StateFunctional StateFunctional::from_values(const MatrixAlgebra& algebra, const CVector& values,
                                             double tol) {
    if (values.size() != algebra.size()) {
        throw Error(ErrorKind::DimensionMismatch, "from_values: one value per basis element required");
    }
    StateFunctional omega(algebra, values);
    omega.validate(tol);
    return omega;
}

void StateFunctional::validate(double tol) const {
    const Index d = algebra_.ambient_dim();
    const Complex unit = evaluate(CMatrix::Identity(d, d));
    if (std::abs(unit - Complex(1.0, 0.0)) > tol) {
        throw Error(ErrorKind::NotNormalized,
                    "omega(identity) = " + std::to_string(unit.real()) + " + " +
                        std::to_string(unit.imag()) + "i");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram());
    const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    if (solver.eigenvalues()(0) < -tol * scale) {
        throw Error(ErrorKind::NotPositive,
                    "state Gram matrix has eigenvalue " + std::to_string(solver.eigenvalues()(0)));
    }
}

Complex StateFunctional::evaluate(const CMatrix& m) const {
    const CVector coords = algebra_.coordinates(m);
    return coords.cwiseProduct(values_).sum();
}

CMatrix StateFunctional::gram() const {
    const Index n = algebra_.size();
    CMatrix gamma(n, n);
    for (Index i = 0; i < n; ++i) {
        const CMatrix bi_dag = algebra_.basis()[static_cast<size_t>(i)].adjoint();
        for (Index j = 0; j < n; ++j) {
            gamma(i, j) = evaluate(bi_dag * algebra_.basis()[static_cast<size_t>(j)]);
        }
    }
    return (gamma + gamma.adjoint()) / 2.0;
}

GnsRepresentation gns_construct(const StateFunctional& omega, double tol) {
    const MatrixAlgebra& algebra = omega.algebra();
    const Index n = algebra.size();
    const CMatrix gamma = omega.gram();

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gamma);
    const Eigen::VectorXd evals = solver.eigenvalues();
    const double emax = std::max(0.0, evals(n - 1));
    if (evals(0) < -tol * std::max(1.0, emax)) {
        throw Error(ErrorKind::NotPositive,
                    "Gram matrix has eigenvalue " + std::to_string(evals(0)));
    }

    const double cutoff = tol * std::max(1.0, emax);
    std::vector<Index> kept;
    for (Index i = 0; i < n; ++i) {
        if (evals(i) > cutoff) kept.push_back(i);
    }
    const Index h = static_cast<Index>(kept.size());
    if (h == 0) {
        throw Error(ErrorKind::NotNormalized, "state annihilates the whole algebra");
    }

    // Whitened quotient: rows are sqrt(eigenvalue) * eigenvector^dag, with the
    // eigenvector phase fixed by its largest-magnitude component.
    CMatrix quotient(h, n);   // algebra coords -> Hilbert coords
    CMatrix pinv(n, h);       // right inverse on the co-kernel
    for (Index k = 0; k < h; ++k) {
        CVector v = solver.eigenvectors().col(kept[static_cast<size_t>(k)]);
        Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        if (std::abs(v(imax)) > 0) v *= std::conj(v(imax)) / std::abs(v(imax));
        const double lam = evals(kept[static_cast<size_t>(k)]);
        quotient.row(k) = std::sqrt(lam) * v.adjoint();
        pinv.col(k) = v / std::sqrt(lam);
    }

    GnsRepresentation rep;
    rep.hilbert_dim = h;
    rep.quotient = quotient;
    rep.rep.reserve(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) {
        // Left-multiplication by basis_i in algebra coordinates.
        CMatrix left(n, n);
        for (Index j = 0; j < n; ++j) {
            left.col(j) = algebra.coordinates(algebra.basis()[static_cast<size_t>(i)] *
                                              algebra.basis()[static_cast<size_t>(j)]);
        }
        rep.rep.push_back(quotient * left * pinv);
    }
    rep.cyclic_vector =
        quotient * algebra.coordinates(CMatrix::Identity(algebra.ambient_dim(), algebra.ambient_dim()));
    return rep;
}

GnsRepresentation product_representation(const GnsRepresentation& r1, const GnsRepresentation& r2) {
    GnsRepresentation out;
    out.hilbert_dim = r1.hilbert_dim * r2.hilbert_dim;
    out.rep.reserve(r1.rep.size() * r2.rep.size());
    for (const CMatrix& a : r1.rep) {
        for (const CMatrix& b : r2.rep) out.rep.push_back(kron(a, b));
    }
    out.cyclic_vector = kron(r1.cyclic_vector, r2.cyclic_vector);
    out.quotient = kron(r1.quotient, r2.quotient);
    return out;
}

double density_membership_residual(const GnsRepresentation& rep) {
    const CMatrix rho = rep.cyclic_vector * rep.cyclic_vector.adjoint();
    std::vector<CMatrix> basis;
    for (const CMatrix& r : rep.rep) try_extend(basis, r, 1e-12);
    CMatrix rest = rho;
    for (const CMatrix& b : basis) rest -= hs_inner(b, rest) * b;
    return rest.norm() / std::max(1e-300, rho.norm());
}

}  // namespace phqm
