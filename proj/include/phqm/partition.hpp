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

#ifndef PHQM_PARTITION_HPP
#define PHQM_PARTITION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "phqm/metric.hpp"
#include "phqm/types.hpp"

namespace phqm {

/// Tensor product structure on a metric space: an invertible map onto the
/// Euclidean tensor product of the declared factors.
struct Bipartition {
    FactorDims dims;
    CMatrix tps_map;

    /// Canonical TPS through Hermitisization: psi -> eta psi.
    static Bipartition from_metric(const Metric& m, FactorDims dims);
    /// TPS transported through an intertwiner: psi -> eta' T^-1 psi.
    static Bipartition from_intertwiner(const MetricMap& map, FactorDims dims);
};

/// Operator Schmidt decomposition M = sum_i c_i A_i (x) B_i with descending
/// non-negative coefficients and Hilbert-Schmidt-orthonormal factor operators.
struct SchmidtDecomposition {
    Eigen::VectorXd coefficients;
    std::vector<CMatrix> left_ops;
    std::vector<CMatrix> right_ops;

    Index rank(double rel_tol = 1e-8) const;
};

SchmidtDecomposition operator_schmidt(const CMatrix& m, FactorDims dims,
                                      double tol = kDefaultTol);

/// Factors a Euclidean unitary into U1 (x) U2 when its operator Schmidt rank
/// is 1 (second coefficient <= rank1_tol * first). The global phase goes to
/// U1; U2's largest-magnitude entry is made real-positive.
std::optional<std::pair<CMatrix, CMatrix>> is_local_unitary(const CMatrix& u, FactorDims dims,
                                                            double rank1_tol = 1e-8);

struct BipartitionDecision {
    enum class Verdict { Equivalent, NotEquivalent, Undetermined };

    Verdict verdict = Verdict::Undetermined;
    std::optional<std::pair<CMatrix, CMatrix>> witness;
    /// Reconstruction residual |V - U1 (x) U2| of the witness when present.
    double witness_residual = 0.0;
    /// Smallest second-to-first Schmidt coefficient ratio seen in the search.
    double best_locality_gap = 0.0;
    int candidates_tried = 0;
};

/// Decides whether the two metrics induce the same bipartition when
/// identified through the given intertwiner T (certified unitary from
/// G' to G): the test unitary V = eta' T^-1 eta^-1 must factor locally.
BipartitionDecision same_bipartition(const Metric& g, const Metric& g_prime, const CMatrix& t,
                                     FactorDims dims, double tol = kDefaultTol);

/// Searches the commutant of H for an intertwiner T with T^dag G T = G' whose
/// test unitary factors locally. For compatible metrics such a T always
/// exists; the locality search is budgeted and sound but incomplete, so the
/// verdict is Equivalent or Undetermined.
BipartitionDecision hamiltonian_compatible_class(const CMatrix& h, const Metric& g,
                                                 const Metric& g_prime, FactorDims dims,
                                                 double tol, int search_budget,
                                                 std::uint64_t seed);

/// Theorem-2 reduced state: tr_other(eta rho_bar eta^-1), Hermitian PSD with
/// unit trace on the kept factor.
CMatrix reduced_state(const MetricState& state, FactorDims dims, int keep);

/// Base-2 von Neumann entropy of the reduced state of a globally pure state;
/// eigenvalues below 1e-14 are clamped to zero. Throws MixedGlobalState when
/// purity is below 1 - 1e-8.
double entanglement_entropy(const MetricState& state, FactorDims dims);

}  // namespace phqm

#endif  // PHQM_PARTITION_HPP
