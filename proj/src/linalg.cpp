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

#include "phqm/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "phqm/errors.hpp"

namespace phqm {

double op_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.norm());
    return (m - m.adjoint()).norm() <= tol * scale;
}

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

namespace {

void require_square(const CMatrix& m, const char* where) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(where) + " requires a square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_finite(const CMatrix& m, const char* where) {
    if (!m.allFinite()) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(where) + ": matrix has non-finite entries");
    }
}

void require_factor_dims(const CMatrix& m, FactorDims dims, const char* where) {
    if (dims.d1 <= 0 || dims.d2 <= 0 || m.rows() != dims.total() || m.cols() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(where) + ": matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " but factor dims are (" +
                        std::to_string(dims.d1) + ", " + std::to_string(dims.d2) + ")");
    }
}

// Rotate the largest-magnitude entry of v to the positive real axis.
void fix_phase(CVector& v) {
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex pivot = v(imax);
    if (std::abs(pivot) > 0) v *= std::conj(pivot) / std::abs(pivot);
}

}  // namespace

std::vector<EigenPair> eig_general(const CMatrix& m, double tol) {
    require_square(m, "eig_general");
    require_finite(m, "eig_general");
    const Index n = m.rows();

    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NonDiagonalizable, "eigen solver did not converge");
    }

    std::vector<Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    const CVector values = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
        return values(a).imag() < values(b).imag();
    });

    CMatrix right(n, n);
    for (Index k = 0; k < n; ++k) {
        CVector v = solver.eigenvectors().col(order[static_cast<size_t>(k)]);
        v.normalize();
        fix_phase(v);
        right.col(k) = v;
    }

    // Defective input shows up as a (near-)singular eigenvector matrix.
    const auto svd = right.jacobiSvd();
    const double smin = svd.singularValues()(n - 1);
    const double smax = svd.singularValues()(0);
    if (smin <= tol * std::max(1.0, smax)) {
        throw Error(ErrorKind::NonDiagonalizable,
                    "eigenvector system is rank deficient (smallest pivot " +
                        std::to_string(smin) + ")");
    }

    const CMatrix left = right.inverse().adjoint();
    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<size_t>(n));
    for (Index k = 0; k < n; ++k) {
        pairs.push_back(EigenPair{values(order[static_cast<size_t>(k)]), right.col(k), left.col(k)});
    }
    return pairs;
}

CMatrix sqrt_pd(const CMatrix& g, double tol) {
    require_square(g, "sqrt_pd");
    require_finite(g, "sqrt_pd");
    const double scale = std::max(1.0, op_norm(g));
    if ((g - g.adjoint()).norm() > tol * scale) {
        throw Error(ErrorKind::NotHermitian,
                    "matrix deviates from Hermitian by " +
                        std::to_string((g - g.adjoint()).norm()));
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> solver((g + g.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NotPositiveDefinite, "eigen solver did not converge");
    }
    const Eigen::VectorXd evals = solver.eigenvalues();
    if (evals(0) <= tol * scale) {
        throw Error(ErrorKind::NotPositiveDefinite,
                    "smallest eigenvalue " + std::to_string(evals(0)));
    }
    CMatrix root = solver.eigenvectors() * evals.cwiseSqrt().asDiagonal() *
                   solver.eigenvectors().adjoint();
    return (root + root.adjoint()) / 2.0;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

CMatrix partial_trace(const CMatrix& m, FactorDims dims, int keep) {
    require_factor_dims(m, dims, "partial_trace");
    if (keep != 1 && keep != 2) {
        throw Error(ErrorKind::InvalidArgument, "partial_trace: keep must be 1 or 2");
    }
    const Index d1 = dims.d1;
    const Index d2 = dims.d2;
    if (keep == 1) {
        CMatrix out = CMatrix::Zero(d1, d1);
        for (Index i = 0; i < d1; ++i)
            for (Index k = 0; k < d1; ++k)
                for (Index j = 0; j < d2; ++j) out(i, k) += m(i * d2 + j, k * d2 + j);
        return out;
    }
    CMatrix out = CMatrix::Zero(d2, d2);
    for (Index j = 0; j < d2; ++j)
        for (Index l = 0; l < d2; ++l)
            for (Index i = 0; i < d1; ++i) out(j, l) += m(i * d2 + j, i * d2 + l);
    return out;
}

CMatrix reshuffle(const CMatrix& m, FactorDims dims) {
    require_factor_dims(m, dims, "reshuffle");
    const Index d1 = dims.d1;
    const Index d2 = dims.d2;
    CMatrix out(d1 * d1, d2 * d2);
    for (Index i = 0; i < d1; ++i)
        for (Index k = 0; k < d1; ++k)
            for (Index j = 0; j < d2; ++j)
                for (Index l = 0; l < d2; ++l)
                    out(i * d1 + k, j * d2 + l) = m(i * d2 + j, k * d2 + l);
    return out;
}

CVector vec_rm(const CMatrix& m) {
    CVector v(m.size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

CMatrix unvec_rm(const CVector& v, Index rows, Index cols) {
    if (v.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "unvec_rm: size mismatch");
    }
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
    return m;
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotIntertwiner: return "NotIntertwiner";
        case ErrorKind::NotQuasiHermitian: return "NotQuasiHermitian";
        case ErrorKind::IncompatibleMetric: return "IncompatibleMetric";
        case ErrorKind::MixedGlobalState: return "MixedGlobalState";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::IncompletePovm: return "IncompletePovm";
        case ErrorKind::NotLocalPovm: return "NotLocalPovm";
        case ErrorKind::InconsistentData: return "InconsistentData";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::BasisOverflow: return "BasisOverflow";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonDiagonalizable: return "NonDiagonalizable";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::ComplexSpectrum: return "ComplexSpectrum";
        case ErrorKind::SingularFrame: return "SingularFrame";
    }
    return "Error";
}

bool is_validation_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonDiagonalizable:
        case ErrorKind::NotPositiveDefinite:
        case ErrorKind::ComplexSpectrum:
        case ErrorKind::SingularFrame:
            return false;
        default:
            return true;
    }
}

}  // namespace phqm
