/*
   Copyright 2026 The spetses Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "degrees.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "laurent.hpp"

namespace spetses {

using Json = nlohmann::json;

/// {"conductor":N,"coeffs":[[k,"p/q"],...]}, zero coefficients omitted.
inline Json to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    const auto& cs = c.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (sgn(cs[k]) != 0) coeffs.push_back(Json::array({k, cs[k].get_str()}));
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    try {
        const int n = j.at("conductor").get<int>();
        if (n < 1) throw InvalidArgument("conductor must be positive");
        std::vector<Rational> c(static_cast<std::size_t>(n));
        for (const auto& t : j.at("coeffs")) {
            const auto k = t.at(0).get<long long>();
            if (k < 0 || k >= n) throw InvalidArgument("coefficient index out of range");
            c[static_cast<std::size_t>(k)] += parse_rational(t.at(1).get<std::string>());
        }
        return Cyclotomic::from_coefficients(n, std::move(c));
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed cyclotomic JSON: ") + e.what());
    }
}

/// {"var":"q","root_order":D,"terms":[[e,cyclo],...]}, exponents ascending.
inline Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_json(c)}));
    return {{"var", p.var()}, {"root_order", p.root_order()}, {"terms", terms}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
    try {
        LaurentPoly::Terms terms;
        for (const auto& t : j.at("terms")) terms[t.at(0).get<int>()] += cyclotomic_from_json(t.at(1));
        return LaurentPoly::from_terms(std::move(terms), j.at("root_order").get<int>(), j.at("var").get<std::string>());
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

inline Json to_json(const CharData& d) {
    return {{"label", d.label.to_string()}, {"feg", to_json(d.feg)}, {"deg", to_json(d.deg)},
            {"schur", to_json(d.schur)},    {"a", d.a},                {"A", d.A},
            {"b", d.b},                     {"B", d.B},                {"h", d.h_char},
            {"c", d.content_c}};
}

inline Json to_json(const VerificationReport& r) {
    return {{"group", r.group},
            {"p", r.p},
            {"claim", r.claim},
            {"equal", r.equal},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
            {"ms", r.ms}};
}

}  // namespace spetses
