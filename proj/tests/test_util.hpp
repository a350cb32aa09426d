// Copyright 2026 The orbitdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

#include "orbitdim/orbitdim.hpp"

namespace orbitdim::testing {

/// mpq_class(a, b) is not reduced by gmpxx; arithmetic needs reduced operands.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Random ket with small Gaussian-rational amplitudes; some are left zero
/// so that sparse kets also get exercised.
inline PureKet random_small_ket(std::size_t n, std::mt19937_64& rng, bool with_fractions = true) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, with_fractions ? 3 : 1);
    std::bernoulli_distribution keep(0.7);
    for (;;) {
        Amplitudes amps(dimension_of(n));
        bool nonzero = false;
        for (auto& a : amps) {
            if (!keep(rng)) continue;
            a = GaussianRational(frac(num(rng), den(rng)), frac(num(rng), den(rng)));
            nonzero = nonzero || !a.is_zero();
        }
        if (nonzero) return PureKet(n, std::move(amps));
    }
}

/// Product of random single-qubit kets.
inline PureKet random_product_ket(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Amplitudes amps{GaussianRational(1L)};
    for (std::size_t k = 0; k < n; ++k) {
        GaussianRational a0, a1;
        do {
            a0 = GaussianRational(d(rng), d(rng));
            a1 = GaussianRational(d(rng), d(rng));
        } while (a0.is_zero() && a1.is_zero());
        Amplitudes next;
        for (const auto& x : amps) {
            next.push_back(x * a0);
            next.push_back(x * a1);
        }
        amps = std::move(next);
    }
    return PureKet(n, std::move(amps));
}

} // namespace orbitdim::testing
