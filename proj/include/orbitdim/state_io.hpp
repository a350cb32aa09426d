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

#include <string>
#include <string_view>

#include "json.hpp"

#include "orbitdim/error.hpp"
#include "orbitdim/pure_ket.hpp"

namespace orbitdim {

namespace detail {

inline Rational rational_field(const nlohmann::json& term, const char* key) {
    if (!term.contains(key)) return Rational(0);
    const auto& v = term.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(BigInt(v.dump(), 10));
    throw Error(ErrorCode::BadRational, std::string("field '") + key + "' must be a rational string");
}

} // namespace detail

/// Reads a ket from the state-file document
///   {"n": 2, "terms": [{"basis": "00", "re": "1", "im": "0"}, ...]}
/// Missing basis labels are zero amplitudes; a missing "re" or "im" is 0.
inline PureKet parse_state(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer())
        throw Error(ErrorCode::BadDocument, "state document needs an integer field 'n'");
    const auto n_signed = doc.at("n").get<long long>();
    if (n_signed < 1 || n_signed > static_cast<long long>(max_qubits))
        throw Error(ErrorCode::BadDocument, "'n' must be in 1.." + std::to_string(max_qubits));
    const auto n = static_cast<std::size_t>(n_signed);
    if (!doc.contains("terms") || !doc.at("terms").is_array())
        throw Error(ErrorCode::BadDocument, "state document needs an array field 'terms'");

    Amplitudes amps(dimension_of(n));
    std::vector<bool> seen(amps.size(), false);
    for (const auto& term : doc.at("terms")) {
        if (!term.is_object() || !term.contains("basis") || !term.at("basis").is_string())
            throw Error(ErrorCode::BadIndex, "every term needs a string 'basis'");
        const auto label = term.at("basis").get<std::string>();
        if (label.size() != n) throw Error(ErrorCode::BadIndex, "basis '" + label + "' does not have length " + std::to_string(n));
        std::size_t index = 0;
        for (char c : label) {
            if (c != '0' && c != '1') throw Error(ErrorCode::BadIndex, "basis '" + label + "' is not binary");
            index = (index << 1) | static_cast<std::size_t>(c - '0');
        }
        if (seen[index]) throw Error(ErrorCode::DuplicateIndex, "basis '" + label + "' listed twice");
        seen[index] = true;
        amps[index] = GaussianRational(detail::rational_field(term, "re"), detail::rational_field(term, "im"));
    }
    return PureKet(n, std::move(amps));
}

inline PureKet parse_state(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::BadDocument, e.what());
    }
    return parse_state(doc);
}

inline PureKet parse_state(const std::string& text) { return parse_state(std::string_view(text)); }
inline PureKet parse_state(const char* text) { return parse_state(std::string_view(text)); }

/// Inverse of parse_state; only nonzero amplitudes are written.
inline nlohmann::json serialize_state(const PureKet& ket) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < ket.size(); ++i) {
        if (ket[i].is_zero()) continue;
        terms.push_back({{"basis", basis_label(ket.qubits(), i)}, {"re", to_string(ket[i].re)}, {"im", to_string(ket[i].im)}});
    }
    return {{"n", ket.qubits()}, {"terms", std::move(terms)}};
}

/// "|0000>+|1111>", "(1/2-1/3i)|000>": the printed representative form.
inline std::string format_ket(const PureKet& ket) {
    std::string out;
    for (std::size_t i = 0; i < ket.size(); ++i) {
        const auto& a = ket[i];
        if (a.is_zero()) continue;
        const std::string label = "|" + basis_label(ket.qubits(), i) + ">";
        const bool real = sgn(a.im) == 0;
        if (real && a.re == 1) {
            out += (out.empty() ? "" : "+") + label;
        } else if (real && a.re == -1) {
            out += "-" + label;
        } else if (real && sgn(a.re) < 0) {
            out += to_string(a.re) + label;
        } else if (real) {
            out += (out.empty() ? "" : "+") + to_string(a.re) + label;
        } else {
            out += (out.empty() ? "(" : "+(") + to_string(a) + ")" + label;
        }
    }
    return out;
}

} // namespace orbitdim
