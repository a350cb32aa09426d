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
#include <cctype>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitdim/error.hpp"
#include "orbitdim/matrix.hpp"
#include "orbitdim/pure_ket.hpp"

namespace orbitdim {

/// Real basis of gl(2, C). R, S, T span su(2); adding E gives u(2); R, S,
/// T, U, V, W span sl(2, C); all eight span gl(2, C).
enum class GeneratorKind { R, S, T, E, U, V, W, Q };

inline constexpr std::array<GeneratorKind, 8> all_generator_kinds = {
    GeneratorKind::R, GeneratorKind::S, GeneratorKind::T, GeneratorKind::E,
    GeneratorKind::U, GeneratorKind::V, GeneratorKind::W, GeneratorKind::Q};

inline char to_char(GeneratorKind kind) { return "RSTEUVWQ"[static_cast<int>(kind)]; }

inline Mat2 generator_matrix(GeneratorKind kind) {
    const GaussianRational o(0L), one(1L), i(0L, 1L);
    switch (kind) {
    case GeneratorKind::R: return {o, one, -one, o};
    case GeneratorKind::S: return {o, i, i, o};
    case GeneratorKind::T: return {i, o, o, -i};
    case GeneratorKind::E: return {i, o, o, i};
    case GeneratorKind::U: return {o, one, one, o};
    case GeneratorKind::V: return {o, i, -i, o};
    case GeneratorKind::W: return {one, o, o, -one};
    case GeneratorKind::Q: return {one, o, o, one};
    }
    return {};
}

/// A basis generator acting on one qubit (1-based).
struct Generator {
    GeneratorKind kind;
    std::size_t qubit;
    friend bool operator==(const Generator&, const Generator&) = default;
};

inline std::string column_label(const Generator& g) { return std::to_string(g.qubit) + ":" + to_char(g.kind); }

enum class GroupKind { GL, SL, U2, SU2 };

inline constexpr std::array<GroupKind, 4> all_groups = {GroupKind::GL, GroupKind::SL, GroupKind::U2, GroupKind::SU2};

inline std::string_view to_string(GroupKind g) {
    switch (g) {
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::U2: return "U2";
    case GroupKind::SU2: return "SU2";
    }
    return "?";
}

inline GroupKind parse_group(std::string_view text) {
    std::string upper;
    for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (auto g : all_groups)
        if (upper == to_string(g)) return g;
    throw Error(ErrorCode::BadDocument, "unknown group '" + std::string(text) + "' (expected GL, SL, U2 or SU2)");
}

/// Generator kinds spanning the group's Lie algebra, in column order.
inline std::span<const GeneratorKind> generator_kinds(GroupKind g) {
    using K = GeneratorKind;
    static constexpr std::array<K, 8> gl = {K::R, K::S, K::T, K::E, K::U, K::V, K::W, K::Q};
    static constexpr std::array<K, 6> sl = {K::R, K::S, K::T, K::U, K::V, K::W};
    static constexpr std::array<K, 4> u2 = {K::R, K::S, K::T, K::E};
    static constexpr std::array<K, 3> su2 = {K::R, K::S, K::T};
    switch (g) {
    case GroupKind::GL: return gl;
    case GroupKind::SL: return sl;
    case GroupKind::U2: return u2;
    case GroupKind::SU2: return su2;
    }
    return {};
}

inline Amplitudes apply_generator(const Generator& gen, std::size_t n, std::span<const GaussianRational> amps) {
    return apply_local(generator_matrix(gen.kind), n, gen.qubit, amps);
}

/// X psi for a single basis generator; the result may be zero.
inline Amplitudes apply_generator(const Generator& gen, const PureKet& ket) {
    return apply_generator(gen, ket.qubits(), ket.amplitudes());
}

/// Columns realify(X psi), qubit-major and kind-minor.
struct TangentMatrix {
    std::size_t qubits = 0;
    GroupKind group = GroupKind::GL;
    std::vector<Generator> generators;
    RationalMatrix matrix;
};

inline TangentMatrix tangent_matrix(const PureKet& ket, GroupKind group) {
    TangentMatrix tm{ket.qubits(), group, {}, {}};
    const auto kinds = generator_kinds(group);
    std::vector<RealVector> columns;
    columns.reserve(ket.qubits() * kinds.size());
    for (std::size_t k = 1; k <= ket.qubits(); ++k)
        for (auto kind : kinds) {
            Generator g{kind, k};
            columns.push_back(realify(std::span<const GaussianRational>(apply_generator(g, ket))));
            tm.generators.push_back(g);
        }
    tm.matrix = RationalMatrix::from_columns(columns);
    return tm;
}

/// Debug dump: header row of "k:KIND" labels, then one row per real
/// coordinate labelled a_<basis> or b_<basis>.
inline void write_tangent_tsv(std::ostream& os, const TangentMatrix& tm) {
    os << "coord";
    for (const auto& g : tm.generators) os << '\t' << column_label(g);
    os << '\n';
    for (std::size_t i = 0; i < tm.matrix.rows(); ++i) {
        os << (i % 2 == 0 ? "a_" : "b_") << basis_label(tm.qubits, i / 2);
        for (std::size_t j = 0; j < tm.matrix.cols(); ++j) os << '\t' << to_string(tm.matrix(i, j));
        os << '\n';
    }
}

} // namespace orbitdim
