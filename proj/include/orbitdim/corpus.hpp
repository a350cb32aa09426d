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
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitdim/error.hpp"
#include "orbitdim/pure_ket.hpp"

namespace orbitdim {

struct ClassTriple {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
    friend bool operator==(const ClassTriple&, const ClassTriple&) = default;
};

/// Ket-space orbit dimensions under GL and SL as printed in the witness tables.
struct KetDimPair {
    int gl = 0;
    int sl = 0;
    friend bool operator==(const KetDimPair&, const KetDimPair&) = default;
};

struct NamedState {
    std::string name;
    PureKet ket;
    std::optional<ClassTriple> expected;
    std::optional<KetDimPair> expected_ket_dims;
};

namespace detail {

/// Terms like "0011" or "-1111"; every coefficient is +1 or -1.
inline PureKet ket_from_terms(std::size_t n, const std::vector<std::string_view>& terms) {
    Amplitudes amps(dimension_of(n));
    for (auto term : terms) {
        long sign = 1;
        if (term.front() == '-') {
            sign = -1;
            term.remove_prefix(1);
        }
        std::size_t index = 0;
        for (char c : term) index = (index << 1) | static_cast<std::size_t>(c - '0');
        amps[index] = GaussianRational(sign);
    }
    return PureKet(n, std::move(amps));
}

struct CatalogEntry {
    std::string_view name;
    std::size_t n;
    std::vector<std::string_view> terms;
    ClassTriple expected;
    std::optional<KetDimPair> ket_dims;
};

// Order within each qubit count is the printed row order.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"ket0", 1, {"0"}, {2, 2, 0}, KetDimPair{4, 4}},

        {"Bell", 2, {"00", "11"}, {6, 5, 1}, KetDimPair{8, 6}},
        {"Product2", 2, {"00"}, {4, 4, 0}, KetDimPair{6, 6}},

        {"GHZ3", 3, {"000", "111"}, {14, 9, 5}, KetDimPair{16, 14}},
        {"W3", 3, {"100", "010", "001"}, {12, 9, 3}, KetDimPair{14, 14}},
        {"Biseparable3", 3, {"000", "011"}, {8, 7, 1}, KetDimPair{10, 10}},
        {"Product3", 3, {"000"}, {6, 6, 0}, KetDimPair{8, 8}},

        {"GHZ4", 4, {"0000", "1111"}, {18, 12, 6}, std::nullopt},
        {"W4", 4, {"1000", "0100", "0010", "0001"}, {16, 12, 4}, std::nullopt},
        {"C4", 4, {"0011", "1100", "0101", "1010", "0110", "1001"}, {22, 12, 10}, std::nullopt},
        {"kappa4", 4, {"0000", "0011", "1010", "-1111"}, {22, 12, 10}, std::nullopt},
        {"E4", 4, {"0000", "0101", "1001", "-1111"}, {22, 12, 10}, std::nullopt},
        {"L4", 4, {"0000", "0011", "1001", "-1111"}, {22, 12, 10}, std::nullopt},
        {"H4", 4, {"0011", "0110", "1100"}, {20, 12, 8}, std::nullopt},
        {"lambda4", 4, {"0101", "0110", "1010"}, {20, 12, 8}, std::nullopt},
        {"M4", 4, {"0011", "0101", "1100"}, {20, 12, 8}, std::nullopt},
        {"pi4", 4, {"0000", "0011", "0101", "0110", "1010", "1111"}, {20, 12, 8}, std::nullopt},
        {"theta4", 4, {"0000", "0101", "0110", "1010", "1100", "1111"}, {20, 12, 8}, std::nullopt},
        {"sigma4", 4, {"0000", "0011", "1001", "1010", "1100", "1111"}, {20, 12, 8}, std::nullopt},
        {"rho4", 4, {"0000", "0011", "0110", "1010", "1100", "1111"}, {20, 12, 8}, std::nullopt},
        {"xi4", 4, {"0000", "0110", "1001", "1010", "1100", "1111"}, {20, 12, 8}, std::nullopt},
        {"epsilon4", 4, {"0000", "0011", "0110", "1001", "1010", "1111"}, {20, 12, 8}, std::nullopt},
        {"chi4", 4, {"0000", "0011", "0110", "1010", "1100", "-1111"}, {24, 12, 12}, std::nullopt},
        {"psi4", 4, {"0000", "0101", "1010", "-1111"}, {20, 12, 8}, std::nullopt},
        {"phi4", 4, {"0000", "0011", "1100", "-1111"}, {20, 12, 8}, std::nullopt},
        {"mu4", 4, {"0000", "0110", "1001", "-1111"}, {20, 12, 8}, std::nullopt},
        {"varphi4", 4, {"0001", "0110", "1011"}, {18, 12, 6}, std::nullopt},
        {"vartheta4", 4, {"0010", "0101", "1011"}, {18, 12, 6}, std::nullopt},
        {"tau4", 4, {"0001", "0111", "1010"}, {18, 12, 6}, std::nullopt},
        {"varrho4", 4, {"0010", "0111", "1001"}, {18, 12, 6}, std::nullopt},
        {"zeta4", 4, {"0000", "1011", "1100"}, {18, 12, 6}, std::nullopt},
        {"iota4", 4, {"0000", "0011", "1101"}, {18, 12, 6}, std::nullopt},
        {"nu4", 4, {"0010", "0101", "1001", "1011"}, {20, 12, 8}, std::nullopt},
        {"omega4", 4, {"0000", "0101", "1000", "1110"}, {20, 12, 8}, std::nullopt},
        {"varpi4", 4, {"0010", "0101", "1000", "1100"}, {20, 12, 8}, std::nullopt},
        {"A-B-C-D", 4, {"0000"}, {8, 8, 0}, std::nullopt},
        {"A-B-CD", 4, {"0000", "0011"}, {10, 9, 1}, std::nullopt},
        {"AB-CD", 4, {"0000", "0011", "1100", "1111"}, {12, 10, 2}, std::nullopt},
        {"A-GHZ", 4, {"0000", "0111"}, {16, 11, 5}, std::nullopt},
        {"A-W", 4, {"0100", "0010", "0001"}, {14, 11, 3}, std::nullopt},
    };
    return entries;
}

inline std::string_view resolve_alias(std::string_view name) {
    if (name == "GHZ2" || name == "Entangled") return "Bell";
    if (name == "Disentangled") return "Product2";
    return name;
}

inline NamedState make_named(const CatalogEntry& e) {
    return {std::string(e.name), ket_from_terms(e.n, e.terms), e.expected, e.ket_dims};
}

inline std::optional<std::size_t> suffix_count(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    std::size_t n = 0;
    auto digits = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.front() == '0') return std::nullopt;
    return n;
}

} // namespace detail

/// |0...0> + |1...1>.
inline PureKet ghz_state(std::size_t n) {
    Amplitudes amps(dimension_of(n));
    amps.front() = GaussianRational(1L);
    amps.back() = GaussianRational(1L);
    return PureKet(n, std::move(amps));
}

/// Equal superposition of the n single-excitation basis kets.
inline PureKet w_state(std::size_t n) {
    Amplitudes amps(dimension_of(n));
    for (std::size_t k = 1; k <= n; ++k) amps[qubit_mask(n, k)] = GaussianRational(1L);
    return PureKet(n, std::move(amps));
}

/// Catalog rows for one qubit count in printed order (empty for n > 4).
inline std::vector<NamedState> corpus_table(std::size_t n) {
    std::vector<NamedState> rows;
    for (const auto& e : detail::catalog())
        if (e.n == n) rows.push_back(detail::make_named(e));
    return rows;
}

inline std::vector<NamedState> corpus_all() {
    std::vector<NamedState> rows;
    for (const auto& e : detail::catalog()) rows.push_back(detail::make_named(e));
    return rows;
}

/// Looks up a cataloged state; "GHZ<n>" and "W<n>" work for every n.
inline NamedState corpus(std::string_view name) {
    const auto resolved = detail::resolve_alias(name);
    for (const auto& e : detail::catalog())
        if (e.name == resolved) {
            auto state = detail::make_named(e);
            state.name = std::string(name);
            return state;
        }
    if (auto n = detail::suffix_count(name, "GHZ"); n && *n >= 1 && *n <= max_qubits)
        return {std::string(name), ghz_state(*n), std::nullopt, std::nullopt};
    if (auto n = detail::suffix_count(name, "W"); n && *n >= 1 && *n <= max_qubits)
        return {std::string(name), w_state(*n), std::nullopt, std::nullopt};
    throw Error(ErrorCode::UnknownName, "no corpus state named '" + std::string(name) + "'");
}

} // namespace orbitdim
