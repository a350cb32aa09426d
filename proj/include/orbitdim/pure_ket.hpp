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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitdim/error.hpp"
#include "orbitdim/gaussian_rational.hpp"

namespace orbitdim {

/// Amplitude vector of length 2^n. Zero is allowed: tangent vectors X psi
/// live here, not only states.
using Amplitudes = std::vector<GaussianRational>;

/// Realified vector (a_0, b_0, a_1, b_1, ...) of length 2^(n+1).
using RealVector = std::vector<Rational>;

/// Row-major 2x2 complex matrix acting on one qubit.
using Mat2 = std::array<GaussianRational, 4>;

inline constexpr std::size_t max_qubits = 24;

inline std::size_t dimension_of(std::size_t n) { return std::size_t{1} << n; }

/// Bit mask of qubit k (1-based) inside an amplitude index. Qubit 1 is the
/// most significant bit, so label i_1...i_n reads left to right.
inline std::size_t qubit_mask(std::size_t n, std::size_t k) { return std::size_t{1} << (n - k); }

/// An n-qubit ket with exact amplitudes, unnormalized and never zero.
class PureKet {
public:
    PureKet(std::size_t n, Amplitudes amps) : n_(n), amps_(std::move(amps)) {
        if (n_ == 0 || n_ > max_qubits)
            throw Error(ErrorCode::DimensionMismatch, "qubit count " + std::to_string(n_) + " out of range");
        if (amps_.size() != dimension_of(n_))
            throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(dimension_of(n_)) +
                                                          " amplitudes, got " + std::to_string(amps_.size()));
        bool nonzero = false;
        for (const auto& a : amps_) nonzero = nonzero || !a.is_zero();
        if (!nonzero) throw Error(ErrorCode::ZeroKet, "all amplitudes are zero");
    }

    /// Single computational basis ket |label>.
    static PureKet basis(std::size_t n, std::size_t index) {
        Amplitudes amps(dimension_of(n));
        if (index >= amps.size()) throw Error(ErrorCode::BadIndex, "basis index out of range");
        amps[index] = GaussianRational(1L);
        return PureKet(n, std::move(amps));
    }

    std::size_t qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    const Amplitudes& amplitudes() const { return amps_; }
    const GaussianRational& operator[](std::size_t i) const { return amps_[i]; }

    std::size_t nonzero_terms() const {
        std::size_t count = 0;
        for (const auto& a : amps_) count += a.is_zero() ? 0 : 1;
        return count;
    }

    friend bool operator==(const PureKet& a, const PureKet& b) { return a.n_ == b.n_ && a.amps_ == b.amps_; }

private:
    std::size_t n_;
    Amplitudes amps_;
};

/// Binary label of an amplitude index, qubit 1 first.
inline std::string basis_label(std::size_t n, std::size_t index) {
    std::string label(n, '0');
    for (std::size_t k = 1; k <= n; ++k)
        if (index & qubit_mask(n, k)) label[k - 1] = '1';
    return label;
}

inline RealVector realify(std::span<const GaussianRational> amps) {
    RealVector out;
    out.reserve(2 * amps.size());
    for (const auto& a : amps) {
        out.push_back(a.re);
        out.push_back(a.im);
    }
    return out;
}

inline RealVector realify(const PureKet& ket) { return realify(std::span(ket.amplitudes())); }

inline Amplitudes derealify_amplitudes(std::span<const Rational> vec) {
    if (vec.size() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "realified vector has odd length");
    Amplitudes amps;
    amps.reserve(vec.size() / 2);
    for (std::size_t j = 0; j < vec.size(); j += 2) amps.emplace_back(vec[j], vec[j + 1]);
    return amps;
}

inline PureKet derealify(std::span<const Rational> vec) {
    std::size_t dim = vec.size() / 2;
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw Error(ErrorCode::DimensionMismatch, "realified length is not 2^(n+1)");
    std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
    return PureKet(n, derealify_amplitudes(vec));
}

/// (a, b) -> (-b, a) per amplitude pair, i.e. realify(i * psi).
inline RealVector scalar_mul_i(std::span<const Rational> vec) {
    if (vec.size() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "realified vector has odd length");
    RealVector out(vec.size());
    for (std::size_t j = 0; j < vec.size(); j += 2) {
        out[j] = -vec[j + 1];
        out[j + 1] = vec[j];
    }
    return out;
}

/// (I x ... x m x ... x I) amps with m on qubit k, by walking the index
/// pairs that differ only in that qubit's bit.
inline Amplitudes apply_local(const Mat2& m, std::size_t n, std::size_t k, std::span<const GaussianRational> amps) {
    if (k == 0 || k > n) throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(k) + " not in 1.." + std::to_string(n));
    if (amps.size() != dimension_of(n)) throw Error(ErrorCode::DimensionMismatch, "amplitude count does not match qubit count");
    const std::size_t mask = qubit_mask(n, k);
    Amplitudes out(amps.size());
    for (std::size_t lo = 0; lo < amps.size(); ++lo) {
        if (lo & mask) continue;
        const std::size_t hi = lo | mask;
        out[lo] = m[0] * amps[lo] + m[1] * amps[hi];
        out[hi] = m[2] * amps[lo] + m[3] * amps[hi];
    }
    return out;
}

} // namespace orbitdim
