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

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "orbitdim/error.hpp"

namespace orbitdim {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or "-p/q" exactly. Denominators must be nonzero;
/// the result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        return p;
    };
    std::size_t end_num = digits(pos);
    if (end_num == pos) throw Error(ErrorCode::BadRational, "malformed rational '" + std::string(text) + "'");
    std::size_t end = end_num;
    if (end < text.size() && text[end] == '/') {
        std::size_t end_den = digits(end + 1);
        if (end_den == end + 1) throw Error(ErrorCode::BadRational, "malformed rational '" + std::string(text) + "'");
        end = end_den;
    }
    if (end != text.size()) throw Error(ErrorCode::BadRational, "malformed rational '" + std::string(text) + "'");

    std::string body(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        BigInt den(body.substr(slash + 1), 10);
        if (den == 0) throw Error(ErrorCode::BadRational, "zero denominator in '" + std::string(text) + "'");
        q = Rational(BigInt(body.substr(0, slash), 10), den);
    } else {
        q = Rational(BigInt(body, 10));
    }
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {
        re.canonicalize();
        im.canonicalize();
    }
    GaussianRational(long real, long imag = 0) : re(real), im(imag) {}

    static GaussianRational i() { return {0L, 1L}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational times_i() const { return {-im, re}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// "1", "-1/2", "3i", "1/2-1/3i": compact human-readable form.
inline std::string to_string(const GaussianRational& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string imag;
    if (z.im == 1) imag = "i";
    else if (z.im == -1) imag = "-i";
    else imag = to_string(z.im) + "i";
    if (sgn(z.re) == 0) return imag;
    return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + imag;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

} // namespace orbitdim
