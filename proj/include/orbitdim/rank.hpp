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
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "orbitdim/error.hpp"
#include "orbitdim/matrix.hpp"

namespace orbitdim {

enum class RankMethod { Exact, Float };

struct RankResult {
    int rank = 0;
    RankMethod method = RankMethod::Exact;
    std::optional<double> gap_ratio;
};

/// Exact rank over Q. Each column is scaled to integers by the lcm of its
/// denominators, then reduced by fraction-free (Bareiss) elimination with
/// the largest-magnitude entry of the column as pivot.
inline RankResult exact_rank(const RationalMatrix& m) {
    if (m.empty()) return {0, RankMethod::Exact, std::nullopt};
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::vector<BigInt> a(rows * cols);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };
    for (std::size_t j = 0; j < cols; ++j) {
        BigInt scale = 1;
        for (std::size_t i = 0; i < rows; ++i) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t i = 0; i < rows; ++i) {
            const Rational& q = m(i, j);
            if (sgn(q) == 0) continue;
            BigInt& dst = at(i, j);
            mpz_divexact(dst.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
            dst *= q.get_num();
        }
    }

    BigInt prev = 1;
    BigInt t;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (sgn(at(i, c)) == 0) continue;
            if (pivot == rows || mpz_cmpabs(at(i, c).get_mpz_t(), at(pivot, c).get_mpz_t()) > 0) pivot = i;
        }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));

        const BigInt& p = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt& lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt& x = at(i, j);
                x *= p;
                mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), at(rank, j).get_mpz_t());
                x -= t;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return {static_cast<int>(rank), RankMethod::Exact, std::nullopt};
}

struct FloatRankOptions {
    double tol_scale = 1e-12;
    double min_gap = 1e6;
};

/// SVD rank with threshold sigma_1 * max(rows, cols) * tol_scale. Throws
/// AmbiguousRank when sigma_r / sigma_{r+1} falls below min_gap, because
/// then the spectrum does not separate signal from rounding.
inline RankResult float_rank(const Eigen::MatrixXd& m, const FloatRankOptions& opts = {}) {
    if (m.size() == 0) return {0, RankMethod::Float, std::numeric_limits<double>::infinity()};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& s = svd.singularValues();
    const double tol = s(0) * static_cast<double>(std::max(m.rows(), m.cols())) * opts.tol_scale;
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol) ++r;

    double gap = std::numeric_limits<double>::infinity();
    if (r > 0 && r < s.size() && s(r) > 0.0) gap = s(r - 1) / s(r);
    if (gap < opts.min_gap)
        throw Error(ErrorCode::AmbiguousRank, "spectral gap " + std::to_string(gap) + " at rank " + std::to_string(r) +
                                                  " is below " + std::to_string(opts.min_gap));
    return {static_cast<int>(r), RankMethod::Float, gap};
}

inline RankResult float_rank(const RationalMatrix& m, const FloatRankOptions& opts = {}) {
    return float_rank(m.to_double(), opts);
}

/// Counts cross-validated matrices; shared by concurrent callers.
struct RankAudit {
    std::atomic<std::size_t> checked{0};
};

/// How orbit computations obtain ranks. The exact path always decides; with
/// float_check the SVD path must agree or RankMismatch is thrown.
struct RankOptions {
    bool float_check = false;
    FloatRankOptions float_options{};
    RankAudit* audit = nullptr;
};

inline int certified_rank(const RationalMatrix& m, const RankOptions& opts = {}) {
    const int exact = exact_rank(m).rank;
    if (opts.float_check) {
        const int approx = float_rank(m, opts.float_options).rank;
        if (approx != exact)
            throw Error(ErrorCode::RankMismatch,
                        "float rank " + std::to_string(approx) + " disagrees with exact rank " + std::to_string(exact));
        if (opts.audit) opts.audit->checked.fetch_add(1, std::memory_order_relaxed);
    }
    return exact;
}

} // namespace orbitdim
