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

#ifndef PHQM_RNG_HPP
#define PHQM_RNG_HPP

#include <cstdint>

#include "phqm/types.hpp"

namespace phqm {

/// Deterministic counter-free random stream (splitmix64). Streams derived
/// from the same seed but different (stream_a, stream_b) labels are
/// independent, so replicas and measurement settings can each own one.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_a = 0,
                       std::uint64_t stream_b = 0);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1).
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-distributed unitary via QR of a complex Ginibre matrix.
CMatrix haar_unitary(Index n, RngStream& rng);

}  // namespace phqm

#endif  // PHQM_RNG_HPP
