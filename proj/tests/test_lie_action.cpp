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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "orbitdim/orbitdim.hpp"
#include "test_util.hpp"

namespace orbitdim {
namespace {

using K = GeneratorKind;

PureKet ket_of(std::size_t n, std::initializer_list<std::pair<std::size_t, GaussianRational>> terms) {
    Amplitudes amps(dimension_of(n));
    for (const auto& [i, a] : terms) amps[i] = a;
    return PureKet(n, amps);
}

Amplitudes amps_of(const PureKet& k) { return k.amplitudes(); }

TEST(Generators, MatricesMatchTheBasis) {
    const GaussianRational o(0L), one(1L), i(0L, 1L);
    EXPECT_EQ(generator_matrix(K::R), (Mat2{o, one, -one, o}));
    EXPECT_EQ(generator_matrix(K::S), (Mat2{o, i, i, o}));
    EXPECT_EQ(generator_matrix(K::T), (Mat2{i, o, o, -i}));
    EXPECT_EQ(generator_matrix(K::E), (Mat2{i, o, o, i}));
    EXPECT_EQ(generator_matrix(K::U), (Mat2{o, one, one, o}));
    EXPECT_EQ(generator_matrix(K::V), (Mat2{o, i, -i, o}));
    EXPECT_EQ(generator_matrix(K::W), (Mat2{one, o, o, -one}));
    EXPECT_EQ(generator_matrix(K::Q), (Mat2{one, o, o, one}));
}

TEST(ApplyGenerator, Examples) {
    const auto zero = PureKet::basis(1, 0);
    const auto one = PureKet::basis(1, 1);
    EXPECT_EQ(apply_generator({K::W, 1}, zero), amps_of(zero));
    EXPECT_EQ(apply_generator({K::W, 1}, one), (Amplitudes{GaussianRational(0L), GaussianRational(-1L)}));
    EXPECT_EQ(apply_generator({K::U, 1}, PureKet::basis(2, 0b00)), amps_of(PureKet::basis(2, 0b10)));
    EXPECT_EQ(apply_generator({K::T, 2}, PureKet::basis(2, 0b01)),
              amps_of(ket_of(2, {{0b01, GaussianRational(0L, -1L)}})));
}

TEST(ApplyGenerator, QubitOutOfRange) {
    try {
        apply_generator({K::R, 3}, PureKet::basis(2, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::QubitOutOfRange);
    }
    EXPECT_THROW(apply_generator({K::R, 0}, PureKet::basis(2, 0)), Error);
}

TEST(ApplyGenerator, AcceptsZeroTangentVectors) {
    const Amplitudes zero(4);
    for (auto kind : all_generator_kinds) {
        auto out = apply_generator({kind, 2}, 2, zero);
        for (const auto& a : out) EXPECT_TRUE(a.is_zero());
    }
}

TEST(ApplyGenerator, IdentityRelations) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        auto ket = testing::random_small_ket(n, rng);
        Amplitudes i_psi = ket.amplitudes();
        for (auto& a : i_psi) a = a.times_i();
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(apply_generator({K::Q, k}, ket), ket.amplitudes());
            EXPECT_EQ(apply_generator({K::E, k}, ket), i_psi);
        }
    }
}

TEST(ApplyGenerator, AdditiveInTheKet) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        auto a = testing::random_small_ket(n, rng);
        auto b = testing::random_small_ket(n, rng);
        Amplitudes sum(dimension_of(n));
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
        for (auto kind : all_generator_kinds)
            for (std::size_t k = 1; k <= n; ++k) {
                Generator g{kind, k};
                auto lhs = apply_generator(g, n, sum);
                auto xa = apply_generator(g, a);
                auto xb = apply_generator(g, b);
                for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_EQ(lhs[i], xa[i] + xb[i]);
            }
    }
}

// Full 2^n x 2^n operator I x .. x X x .. x I, built by Kronecker products.
std::vector<Amplitudes> kron_operator(GeneratorKind kind, std::size_t n, std::size_t k) {
    const GaussianRational o(0L), one(1L);
    std::vector<Amplitudes> m{{one}};
    for (std::size_t q = 1; q <= n; ++q) {
        const Mat2 f = q == k ? generator_matrix(kind) : Mat2{one, o, o, one};
        const std::size_t d = m.size();
        std::vector<Amplitudes> next(2 * d, Amplitudes(2 * d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b) next[2 * i + a][2 * j + b] = m[i][j] * f[2 * a + b];
        m = std::move(next);
    }
    return m;
}

TEST(ApplyGenerator, CommutesWithRealification) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 6; ++t) {
        const std::size_t n = 1 + t % 3;
        auto ket = testing::random_small_ket(n, rng);
        const auto v = realify(ket);
        for (auto kind : all_generator_kinds)
            for (std::size_t k = 1; k <= n; ++k) {
                const auto op = kron_operator(kind, n, k);
                // Complex entry c acts on (a, b) as the real block [[Re c, -Im c], [Im c, Re c]].
                RealVector expected(v.size());
                for (std::size_t i = 0; i < op.size(); ++i)
                    for (std::size_t j = 0; j < op.size(); ++j) {
                        const auto& c = op[i][j];
                        expected[2 * i] += c.re * v[2 * j] - c.im * v[2 * j + 1];
                        expected[2 * i + 1] += c.im * v[2 * j] + c.re * v[2 * j + 1];
                    }
                EXPECT_EQ(realify(std::span<const GaussianRational>(apply_generator({kind, k}, ket))), expected);
            }
    }
}

TEST(TangentMatrix, ColumnCountsAndOrder) {
    const auto ket = corpus("GHZ3").ket;
    EXPECT_EQ(tangent_matrix(ket, GroupKind::GL).matrix.cols(), 24u);
    EXPECT_EQ(tangent_matrix(ket, GroupKind::SL).matrix.cols(), 18u);
    EXPECT_EQ(tangent_matrix(ket, GroupKind::U2).matrix.cols(), 12u);
    EXPECT_EQ(tangent_matrix(ket, GroupKind::SU2).matrix.cols(), 9u);
    EXPECT_EQ(tangent_matrix(ket, GroupKind::GL).matrix.rows(), 16u);

    const auto sl = tangent_matrix(PureKet::basis(2, 0), GroupKind::SL);
    std::string labels;
    for (const auto& g : sl.generators) labels += column_label(g) + " ";
    EXPECT_EQ(labels, "1:R 1:S 1:T 1:U 1:V 1:W 2:R 2:S 2:T 2:U 2:V 2:W ");
}

TEST(TangentMatrix, ColumnsAreRealifiedImages) {
    std::mt19937_64 rng(37);
    auto ket = testing::random_small_ket(3, rng);
    const auto tm = tangent_matrix(ket, GroupKind::GL);
    for (std::size_t j = 0; j < tm.generators.size(); ++j)
        EXPECT_EQ(tm.matrix.column(j), realify(std::span<const GaussianRational>(apply_generator(tm.generators[j], ket))));
}

TEST(TangentMatrix, SingleQubitSU2Columns) {
    const auto tm = tangent_matrix(PureKet::basis(1, 0), GroupKind::SU2);
    ASSERT_EQ(tm.matrix.rows(), 4u);
    ASSERT_EQ(tm.matrix.cols(), 3u);
    auto col = [](std::initializer_list<long> xs) {
        std::vector<Rational> out;
        for (long x : xs) out.emplace_back(x);
        return out;
    };
    EXPECT_EQ(tm.matrix.column(0), col({0, 0, -1, 0}));
    EXPECT_EQ(tm.matrix.column(1), col({0, 0, 0, 1}));
    EXPECT_EQ(tm.matrix.column(2), col({0, 1, 0, 0}));
}

TEST(TangentMatrix, RanksFromWitnessTables) {
    const auto gl = tangent_matrix(PureKet::basis(1, 0), GroupKind::GL);
    EXPECT_EQ(gl.matrix.rows(), 4u);
    EXPECT_EQ(gl.matrix.cols(), 8u);
    EXPECT_EQ(exact_rank(gl.matrix).rank, 4);

    const auto sl = tangent_matrix(corpus("Bell").ket, GroupKind::SL);
    EXPECT_EQ(sl.matrix.rows(), 8u);
    EXPECT_EQ(sl.matrix.cols(), 12u);
    EXPECT_EQ(exact_rank(sl.matrix).rank, 6);
}

TEST(TangentMatrix, TsvDump) {
    std::ostringstream os;
    write_tangent_tsv(os, tangent_matrix(PureKet::basis(1, 0), GroupKind::SU2));
    EXPECT_EQ(os.str(), "coord\t1:R\t1:S\t1:T\n"
                        "a_0\t0\t0\t0\n"
                        "b_0\t0\t0\t1\n"
                        "a_1\t-1\t0\t0\n"
                        "b_1\t0\t1\t0\n");
}

TEST(GroupKind, Parsing) {
    EXPECT_EQ(parse_group("gl"), GroupKind::GL);
    EXPECT_EQ(parse_group("SU2"), GroupKind::SU2);
    EXPECT_THROW(parse_group("SO3"), Error);
}

} // namespace
} // namespace orbitdim
