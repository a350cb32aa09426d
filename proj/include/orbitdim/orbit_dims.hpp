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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdim/error.hpp"
#include "orbitdim/lie_action.hpp"
#include "orbitdim/pure_ket.hpp"
#include "orbitdim/rank.hpp"

namespace orbitdim {

/// Dimension of the orbit of psi in ket space: rank of {X_k psi}.
inline int ket_orbit_dim(const PureKet& ket, GroupKind group, const RankOptions& opts = {}) {
    return certified_rank(tangent_matrix(ket, group).matrix, opts);
}

/// The tangent matrix extended by -psi and -i psi. Its kernel is the
/// isotropy algebra of the ray [psi] (X psi = lambda psi), so the state
/// orbit dimension is rank(M) - 2.
inline RationalMatrix state_space_matrix(const PureKet& ket, GroupKind group) {
    auto m = tangent_matrix(ket, group).matrix;
    RealVector minus_psi = realify(ket);
    for (auto& x : minus_psi) x = -x;
    m.append_column(minus_psi);
    m.append_column(scalar_mul_i(minus_psi));
    return m;
}

inline int state_orbit_dim(const PureKet& ket, GroupKind group, const RankOptions& opts = {}) {
    return certified_rank(state_space_matrix(ket, group), opts) - 2;
}

struct OrbitReport {
    GroupKind group;
    int ket_dim;
    int state_dim;
};

inline OrbitReport orbit_report(const PureKet& ket, GroupKind group, const RankOptions& opts = {}) {
    return {group, ket_orbit_dim(ket, group, opts), state_orbit_dim(ket, group, opts)};
}

/// dim O^GL - dim O^SL in ket space: 2 when SL cannot rescale or rephase
/// psi on its own, 0 otherwise.
inline int witness_w1(const PureKet& ket, const RankOptions& opts = {}) {
    return ket_orbit_dim(ket, GroupKind::GL, opts) - ket_orbit_dim(ket, GroupKind::SL, opts);
}

inline GaussianRational determinant(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

/// Invertible local operator A_1 x ... x A_n, one factor per qubit.
class Ilo {
public:
    explicit Ilo(std::vector<Mat2> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw Error(ErrorCode::DimensionMismatch, "an ILO needs at least one factor");
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if (determinant(factors_[k]).is_zero())
                throw Error(ErrorCode::DimensionMismatch, "factor " + std::to_string(k + 1) + " is singular");
    }

    static Ilo identity(std::size_t n) {
        const GaussianRational o(0L), one(1L);
        return Ilo(std::vector<Mat2>(n, Mat2{one, o, o, one}));
    }

    std::size_t qubits() const { return factors_.size(); }
    const std::vector<Mat2>& factors() const { return factors_; }
    const Mat2& operator[](std::size_t k) const { return factors_[k]; }

    friend bool operator==(const Ilo&, const Ilo&) = default;

private:
    std::vector<Mat2> factors_;
};

using Rng = std::mt19937_64;

inline constexpr int max_resamples = 1000;

/// Gaussian-integer entries a + bi with a, b uniform in [-range, range];
/// singular factors are redrawn.
inline Ilo random_ilo(std::size_t n, Rng& rng, long range) {
    if (range < 1) throw Error(ErrorCode::DimensionMismatch, "ILO entry range must be at least 1");
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<Mat2> factors;
    factors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        int attempts = 0;
        for (;;) {
            Mat2 m;
            for (auto& z : m) {
                const long re = dist(rng);
                const long im = dist(rng);
                z = GaussianRational(re, im);
            }
            if (!determinant(m).is_zero()) {
                factors.push_back(std::move(m));
                break;
            }
            if (++attempts >= max_resamples)
                throw Error(ErrorCode::SamplingFailed, "could not draw an invertible factor");
        }
    }
    return Ilo(std::move(factors));
}

inline PureKet apply_ilo(const Ilo& op, const PureKet& ket) {
    if (op.qubits() != ket.qubits())
        throw Error(ErrorCode::DimensionMismatch, "ILO has " + std::to_string(op.qubits()) + " factors, ket has " +
                                                      std::to_string(ket.qubits()) + " qubits");
    Amplitudes amps = ket.amplitudes();
    for (std::size_t k = 1; k <= op.qubits(); ++k) amps = apply_local(op[k - 1], ket.qubits(), k, amps);
    return PureKet(ket.qubits(), std::move(amps));
}

struct SamplingOptions {
    int trials = 5;
    long range = 9;
    std::uint64_t seed = 0;
};

/// Independent generator for one trial, derived from the master seed so
/// trials can be evaluated in any order.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

struct PrincipalSample {
    int d2 = 0;
    std::vector<int> trial_values;
    /// Trials disagreed: some random ILO landed off the principal stratum.
    bool disagreement = false;
};

/// Dimension of a principal U(2)^n orbit inside the SLOCC class of psi:
/// push psi by random ILOs and take the largest state-space U(2) orbit.
inline PrincipalSample principal_u2_dim(const PureKet& ket, const SamplingOptions& sampling,
                                        const RankOptions& opts = {}) {
    if (sampling.trials < 1) throw Error(ErrorCode::DimensionMismatch, "at least one trial is required");
    PrincipalSample out;
    for (int t = 0; t < sampling.trials; ++t) {
        Rng rng = trial_rng(sampling.seed, static_cast<std::uint64_t>(t));
        const auto moved = apply_ilo(random_ilo(ket.qubits(), rng, sampling.range), ket);
        out.trial_values.push_back(state_orbit_dim(moved, GroupKind::U2, opts));
    }
    out.d2 = *std::max_element(out.trial_values.begin(), out.trial_values.end());
    out.disagreement = std::any_of(out.trial_values.begin(), out.trial_values.end(),
                                   [&](int v) { return v != out.d2; });
    return out;
}

struct ClassDimensions {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
    int trials_used = 0;
    std::vector<int> trial_values;
    std::uint64_t seed = 0;
    bool disagreement = false;
};

/// D1 = SLOCC class dimension in state space, D2 = principal U(2) orbit
/// dimension, D3 = D1 - D2 free parameters.
inline ClassDimensions class_dimensions(const PureKet& ket, const SamplingOptions& sampling,
                                        const RankOptions& opts = {}) {
    ClassDimensions out;
    out.d1 = state_orbit_dim(ket, GroupKind::GL, opts);
    auto principal = principal_u2_dim(ket, sampling, opts);
    out.d2 = principal.d2;
    out.d3 = out.d1 - out.d2;
    out.trials_used = sampling.trials;
    out.trial_values = std::move(principal.trial_values);
    out.seed = sampling.seed;
    out.disagreement = principal.disagreement;
    return out;
}

/// Ket with Gaussian-integer amplitudes drawn like ILO entries; the zero
/// ket is redrawn.
inline PureKet random_ket(std::size_t n, Rng& rng, long range) {
    if (range < 1) throw Error(ErrorCode::DimensionMismatch, "amplitude range must be at least 1");
    std::uniform_int_distribution<long> dist(-range, range);
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        Amplitudes amps(dimension_of(n));
        bool nonzero = false;
        for (auto& z : amps) {
            const long re = dist(rng);
            const long im = dist(rng);
            z = GaussianRational(re, im);
            nonzero = nonzero || !z.is_zero();
        }
        if (nonzero) return PureKet(n, std::move(amps));
    }
    throw Error(ErrorCode::SamplingFailed, "could not draw a nonzero ket");
}

struct GenericSample {
    PureKet ket;
    int d1;
};

inline GenericSample sample_generic(std::size_t n, Rng& rng, long range = 9, const RankOptions& opts = {}) {
    auto ket = random_ket(n, rng, range);
    const int d1 = state_orbit_dim(ket, GroupKind::GL, opts);
    return {std::move(ket), d1};
}

/// D1 of a random ket: the dimension of the largest SLOCC class.
inline int generic_state_d1(std::size_t n, Rng& rng, long range = 9, const RankOptions& opts = {}) {
    return sample_generic(n, rng, range, opts).d1;
}

/// Separability type signalled by D2 for two to four qubits.
inline std::string_view d2_ladder_label(std::size_t n, int d2) {
    switch (n) {
    case 1:
        if (d2 == 2) return "single-qubit";
        break;
    case 2:
        if (d2 == 5) return "entangled";
        if (d2 == 4) return "disentangled";
        break;
    case 3:
        if (d2 == 9) return "genuine";
        if (d2 == 7) return "biseparable";
        if (d2 == 6) return "product";
        break;
    case 4:
        if (d2 == 12) return "genuine";
        if (d2 == 11) return "A-BCD";
        if (d2 == 10) return "AB-CD";
        if (d2 == 9) return "A-B-CD";
        if (d2 == 8) return "A-B-C-D";
        break;
    default: break;
    }
    return "unlabelled";
}

} // namespace orbitdim
