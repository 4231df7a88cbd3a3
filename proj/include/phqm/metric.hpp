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

#ifndef PHQM_METRIC_HPP
#define PHQM_METRIC_HPP

#include "phqm/linalg.hpp"
#include "phqm/types.hpp"

namespace phqm {

/// A Hermitian positive-definite metric operator G together with its cached
/// principal square root eta and the inverses of both. Defines the inner
/// product <psi, phi>_G = psi^dag G phi. Immutable after construction.
class Metric {
public:
    /// Validates Hermiticity and positive-definiteness, caches eta = sqrt(G).
    static Metric from_matrix(const CMatrix& g, double tol = kDefaultTol);

    static Metric identity(Index dim);

    const CMatrix& g() const { return g_; }
    const CMatrix& eta() const { return eta_; }
    const CMatrix& eta_inv() const { return eta_inv_; }
    const CMatrix& g_inv() const { return g_inv_; }
    Index dim() const { return g_.rows(); }

    bool is_euclidean(double tol = kDefaultTol) const;

    /// G-inner product <psi, phi>_G.
    Complex inner(const CVector& psi, const CVector& phi) const;
    double norm(const CVector& psi) const;

private:
    Metric() = default;
    CMatrix g_, eta_, eta_inv_, g_inv_;
};

/// Most general Hamiltonian-compatible metric G = sum_i lambda_i l_i l_i^dag
/// built from the left eigenvectors of a diagonalizable real-spectrum H.
/// The result satisfies H^dag G = G H and is positive definite for strictly
/// positive lambda. Right eigenvectors are unit-normalized and the left
/// vectors are their biorthonormal duals, so a Hermitian H with all-ones
/// lambda yields the identity metric.
Metric metric_from_hamiltonian(const CMatrix& h, const RVector& lambda,
                               double tol = kDefaultTol);

/// Result of the quasi-Hermiticity test |O^dag G - G O| <= tol |G| |O|.
struct QuasiHermiticityCheck {
    bool ok = false;
    double residual = 0.0;  // |O^dag G - G O| / (|G| |O|), operator norms

    explicit operator bool() const { return ok; }
};

QuasiHermiticityCheck is_quasi_hermitian(const CMatrix& o, const Metric& m,
                                         double tol = kDefaultTol);

/// Similarity map O -> eta O eta^-1 carrying G-space operators to Euclidean
/// ones; Hermitian output iff O is quasi-Hermitian with respect to m.
CMatrix hermitize(const CMatrix& o, const Metric& m);

/// Adjoint with respect to the G inner product: O* = G^-1 O^dag G.
CMatrix g_adjoint(const CMatrix& o, const Metric& m);

/// A density operator rho_bar expressed relative to a Metric; related to a
/// Euclidean density matrix rho by rho_bar = eta^-1 rho eta.
class MetricState {
public:
    /// Validates G-self-adjointness, positivity of eta rho_bar eta^-1, and
    /// unit trace (all relative to tol).
    static MetricState from_rho_bar(const CMatrix& rho_bar, const Metric& m,
                                    double tol = 1e-8);
    static MetricState from_euclidean(const CMatrix& rho, const Metric& m,
                                      double tol = 1e-8);
    /// Pure state from a vector psi in H_G: rho_bar = psi psi^dag G / <psi,G psi>.
    static MetricState pure(const CVector& psi, const Metric& m);

    const CMatrix& rho_bar() const { return rho_bar_; }
    const Metric& metric() const { return metric_; }
    /// eta rho_bar eta^-1, the Hermitized (Euclidean) density matrix.
    CMatrix euclidean() const;

private:
    MetricState(CMatrix rho_bar, Metric m) : rho_bar_(std::move(rho_bar)), metric_(std::move(m)) {}
    CMatrix rho_bar_;
    Metric metric_;
};

/// Certificate for a linear map T between metric spaces. T is an isometry
/// when T^dag G_target T = G_source and additionally a (generalized) unitary
/// when T is invertible.
struct MetricMapCheck {
    bool isometry = false;
    bool unitary = false;
    double residual = 0.0;       // |T^dag G T - G'| / |G'|
    double smallest_singular = 0.0;
};

MetricMapCheck check_metric_map(const CMatrix& t, const Metric& source,
                                const Metric& target, double tol = kDefaultTol);

/// An intertwiner between two metric spaces with its certificate.
struct MetricMap {
    CMatrix t;
    Metric source;  // G'
    Metric target;  // G
    MetricMapCheck certificate;
};

/// T_U = eta^-1 U^dag eta' for a Euclidean unitary U; certified unitary from
/// the source (G') space to the target (G) space, satisfying eta' = U eta T_U.
MetricMap intertwiner_from_unitary(const CMatrix& u, const Metric& source,
                                   const Metric& target, double tol = kDefaultTol);

/// tr(g_adjoint(O) rho_bar): the G-Hilbert-Schmidt pairing of O with the
/// state; real for quasi-Hermitian O, equal to the Euclidean expectation of
/// the Hermitized pair.
Complex expectation(const CMatrix& o, const MetricState& state);

}  // namespace phqm

#endif  // PHQM_METRIC_HPP
