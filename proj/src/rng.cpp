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

#include "phqm/rng.hpp"

#include <cmath>

#include <Eigen/QR>

namespace phqm {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b) {
    // Fold the stream labels into the seed through two mixing rounds.
    std::uint64_t x = seed;
    std::uint64_t s = splitmix64(x);
    x ^= stream_a + 0x632BE59BD9B4E019ULL;
    s ^= splitmix64(x);
    x ^= stream_b + 0x9E6C63D0876A9A47ULL;
    s ^= splitmix64(x);
    state_ = s;
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

CMatrix haar_unitary(Index n, RngStream& rng) {
    CMatrix ginibre(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) ginibre(i, j) = Complex(rng.normal(), rng.normal());
    Eigen::HouseholderQR<CMatrix> qr(ginibre);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace phqm
