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

#include "phqm/metric.hpp"

#include <string>

#include <Eigen/Eigenvalues>

#include "phqm/errors.hpp"

namespace phqm {

namespace {

void require_dim(const CMatrix& o, Index dim, const char* where) {
    if (o.rows() != dim || o.cols() != dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(where) + ": operator is " + std::to_string(o.rows()) + "x" +
                        std::to_string(o.cols()) + ", metric dimension is " + std::to_string(dim));
    }
}

}  // namespace

Metric Metric::from_matrix(const CMatrix& g, double tol) {
    Metric m;
    m.g_ = (g + g.adjoint()) / 2.0;
    m.eta_ = sqrt_pd(g, tol);  // validates Hermitian positive-definite
    m.eta_inv_ = m.eta_.inverse();
    m.eta_inv_ = (m.eta_inv_ + m.eta_inv_.adjoint()) / 2.0;
    m.g_inv_ = m.eta_inv_ * m.eta_inv_;
    return m;
}

Metric Metric::identity(Index dim) {
    Metric m;
    m.g_ = CMatrix::Identity(dim, dim);
    m.eta_ = m.g_;
    m.eta_inv_ = m.g_;
    m.g_inv_ = m.g_;
    return m;
}

bool Metric::is_euclidean(double tol) const {
    return (g_ - CMatrix::Identity(dim(), dim())).norm() <= tol * std::max(1.0, g_.norm());
}

Complex Metric::inner(const CVector& psi, const CVector& phi) const {
    if (psi.size() != dim() || phi.size() != dim()) {
        throw Error(ErrorKind::DimensionMismatch, "Metric::inner: vector size mismatch");
    }
    return psi.dot(g_ * phi);
}

double Metric::norm(const CVector& psi) const {
    return std::sqrt(std::max(0.0, inner(psi, psi).real()));
}

Metric metric_from_hamiltonian(const CMatrix& h, const RVector& lambda, double tol) {
    if (h.rows() != h.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "metric_from_hamiltonian: H must be square");
    }
    if (lambda.size() != h.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "metric_from_hamiltonian: lambda length " + std::to_string(lambda.size()) +
                        " does not match dimension " + std::to_string(h.rows()));
    }
    if ((lambda.array() <= 0.0).any()) {
        throw Error(ErrorKind::InvalidArgument, "lambda must be strictly positive");
    }

    const auto pairs = eig_general(h, tol);
    const double scale = std::max(1.0, op_norm(h));
    CMatrix g = CMatrix::Zero(h.rows(), h.cols());
    for (Index i = 0; i < h.rows(); ++i) {
        const auto& p = pairs[static_cast<size_t>(i)];
        if (std::abs(p.value.imag()) > tol * scale) {
            throw Error(ErrorKind::ComplexSpectrum,
                        "eigenvalue " + std::to_string(p.value.real()) + " + " +
                            std::to_string(p.value.imag()) + "i has nonzero imaginary part");
        }
        g += lambda(i) * (p.left * p.left.adjoint());
    }
    g = (g + g.adjoint()) / 2.0;
    return Metric::from_matrix(g, tol);
}

QuasiHermiticityCheck is_quasi_hermitian(const CMatrix& o, const Metric& m, double tol) {
    require_dim(o, m.dim(), "is_quasi_hermitian");
    const double denom = op_norm(m.g()) * std::max(op_norm(o), 1e-300);
    QuasiHermiticityCheck check;
    check.residual = op_norm(o.adjoint() * m.g() - m.g() * o) / denom;
    check.ok = check.residual <= tol;
    return check;
}

CMatrix hermitize(const CMatrix& o, const Metric& m) {
    require_dim(o, m.dim(), "hermitize");
    return m.eta() * o * m.eta_inv();
}

CMatrix g_adjoint(const CMatrix& o, const Metric& m) {
    require_dim(o, m.dim(), "g_adjoint");
    return m.g_inv() * o.adjoint() * m.g();
}

MetricState MetricState::from_rho_bar(const CMatrix& rho_bar, const Metric& m, double tol) {
    require_dim(rho_bar, m.dim(), "MetricState");
    const CMatrix herm = m.eta() * rho_bar * m.eta_inv();
    const double scale = std::max(1.0, herm.norm());
    if ((herm - herm.adjoint()).norm() > tol * scale) {
        throw Error(ErrorKind::NotHermitian,
                    "state is not G-self-adjoint (residual " +
                        std::to_string((herm - herm.adjoint()).norm()) + ")");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver((herm + herm.adjoint()) / 2.0);
    if (solver.eigenvalues()(0) < -tol * scale) {
        throw Error(ErrorKind::NotPositive,
                    "state has negative eigenvalue " + std::to_string(solver.eigenvalues()(0)));
    }
    if (std::abs(rho_bar.trace() - Complex(1.0, 0.0)) > tol * scale) {
        throw Error(ErrorKind::NotNormalized,
                    "state trace is " + std::to_string(rho_bar.trace().real()));
    }
    return MetricState(rho_bar, m);
}

MetricState MetricState::from_euclidean(const CMatrix& rho, const Metric& m, double tol) {
    require_dim(rho, m.dim(), "MetricState");
    return from_rho_bar(m.eta_inv() * rho * m.eta(), m, tol);
}

MetricState MetricState::pure(const CVector& psi, const Metric& m) {
    if (psi.size() != m.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "MetricState::pure: vector size mismatch");
    }
    const double norm_sq = m.inner(psi, psi).real();
    if (norm_sq <= 0.0) {
        throw Error(ErrorKind::NotPositive, "MetricState::pure: zero G-norm vector");
    }
    CMatrix rho_bar = (psi * psi.adjoint() * m.g()) / norm_sq;
    return MetricState(std::move(rho_bar), m);
}

CMatrix MetricState::euclidean() const {
    return metric_.eta() * rho_bar_ * metric_.eta_inv();
}

MetricMapCheck check_metric_map(const CMatrix& t, const Metric& source, const Metric& target,
                                double tol) {
    if (t.rows() != target.dim() || t.cols() != source.dim() || source.dim() != target.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "check_metric_map: dimension mismatch");
    }
    MetricMapCheck check;
    check.residual = op_norm(t.adjoint() * target.g() * t - source.g()) /
                     std::max(1e-300, op_norm(source.g()));
    check.isometry = check.residual <= tol;
    check.smallest_singular = t.jacobiSvd().singularValues()(t.cols() - 1);
    check.unitary = check.isometry && check.smallest_singular > tol;
    return check;
}

MetricMap intertwiner_from_unitary(const CMatrix& u, const Metric& source, const Metric& target,
                                   double tol) {
    if (u.rows() != u.cols() || u.rows() != source.dim() || source.dim() != target.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "intertwiner_from_unitary: dimension mismatch");
    }
    const double unitarity =
        (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
    if (unitarity > tol * std::max(1.0, u.norm())) {
        throw Error(ErrorKind::NotUnitary,
                    "U deviates from Euclidean unitarity by " + std::to_string(unitarity));
    }
    MetricMap map;
    map.t = target.eta_inv() * u.adjoint() * source.eta();
    map.source = source;
    map.target = target;
    map.certificate = check_metric_map(map.t, source, target, tol);
    return map;
}

Complex expectation(const CMatrix& o, const MetricState& state) {
    require_dim(o, state.metric().dim(), "expectation");
    return (g_adjoint(o, state.metric()) * state.rho_bar()).trace();
}

}  // namespace phqm
