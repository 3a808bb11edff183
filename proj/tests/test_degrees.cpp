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


#include <gtest/gtest.h>

#include "spetses/degrees.hpp"

using namespace spetses;

namespace {
std::vector<GroupSpec> desk_groups() {
    return {GroupSpec::gm1n(2, 1), GroupSpec::gm1n(3, 1), GroupSpec::gm1n(2, 2), GroupSpec::gm1n(2, 3),
            GroupSpec::gm1n(3, 2), GroupSpec::gm1n(3, 3), GroupSpec::gm1n(4, 2), GroupSpec::gmmn(2, 3),
            GroupSpec::gmmn(3, 2), GroupSpec::gmmn(3, 3), GroupSpec::gmmn(4, 3), GroupSpec::gmmn(2, 4)};
}
LaurentPoly q(int e) { return LaurentPoly::q_power(e); }
}  // namespace

TEST(Degrees, HandChecks) {
    const auto g = GroupSpec::gm1n(2, 1);
    const auto lab = parse_label(g, "[(),(1)]");
    EXPECT_EQ(generic_degree(lab), q(1));
    EXPECT_EQ(fake_degree(lab), q(1));
    EXPECT_EQ(schur_element(trivial_label(g), SchurFormula::chlouveraki), LaurentPoly(1) + q(1));
    EXPECT_EQ(schur_element(lab, SchurFormula::mathas), exact_div(LaurentPoly(1) + q(1), q(1)));
}

TEST(Degrees, ReflectionFakeDegree) {
    const auto g = GroupSpec::gm1n(2, 2);
    EXPECT_EQ(fake_degree(exterior_twist_label(g, 1, 1)), q(1) + q(3));
    EXPECT_EQ(fake_degree(trivial_label(g)), LaurentPoly(1));
    EXPECT_EQ(generic_degree(trivial_label(g)), LaurentPoly(1));
    EXPECT_EQ(schur_element(trivial_label(g)), q_integer(2) * q_integer(4));
}

TEST(Degrees, TwistedReflectionFakeDegree) {
    for (const auto& g : desk_groups()) {
        const auto inv = invariants(g);
        const int h = inv.coxeter_number;
        for (int p = 1; p < h; ++p) {
            if (std::gcd(p, h) != 1) continue;
            LaurentPoly expect;
            for (int e : inv.exponents) expect += q(static_cast<int>(mod(static_cast<long long>(p) * e, h)));
            EXPECT_EQ(fake_degree(exterior_twist_label(g, 1, p)), expect) << g.name() << " p=" << p;
        }
    }
}

TEST(Degrees, SchurFormulasAgree) {
    for (const auto& g : desk_groups()) {
        if (g.kind() != GroupKind::Gm1n) continue;
        // as printed, the two forms differ by the sign (-1)^{mn}
        const int sign = (g.m() * g.n()) % 2 == 0 ? 1 : -1;
        for (const auto& lab : all_labels(g))
            EXPECT_EQ(schur_element(lab, SchurFormula::chlouveraki), schur_element(lab, SchurFormula::mathas) * sign)
                << g.name() << " " << lab.to_string();
    }
}

TEST(Degrees, CharTableIdentities) {
    for (const auto& g : desk_groups()) {
        const auto inv = invariants(g);
        const auto table = char_table(g);
        LaurentPoly regular;
        for (const auto& d : *table) {
            EXPECT_EQ(d.deg * d.schur, inv.poincare);
            EXPECT_LE(d.a, d.b) << g.name() << " " << d.label.to_string();
            regular += d.feg * Cyclotomic(Rational(d.dim));
            for (const auto& [e, c] : d.feg.terms()) {
                EXPECT_TRUE(c.is_rational());
                EXPECT_GT(c.rational_value(), 0);
                EXPECT_EQ(c.rational_value().get_den(), 1);
            }
        }
        EXPECT_EQ(regular, inv.poincare) << g.name();
        EXPECT_EQ(find_char(*table, trivial_label(g)).content_c, inv.num_reflections);
        EXPECT_EQ(find_char(*table, exterior_twist_label(g, 1, 1)).h_char, inv.coxeter_number);
    }
}

TEST(Degrees, FamiliesShareAandA) {
    for (const auto& g : desk_groups()) {
        const auto table = char_table(g);
        for (const auto& f : families(g)) {
            const auto& first = find_char(*table, f.members.front());
            for (const auto& lab : f.members) {
                EXPECT_EQ(find_char(*table, lab).a, first.a) << g.name() << " " << lab.to_string();
                EXPECT_EQ(find_char(*table, lab).A, first.A) << g.name() << " " << lab.to_string();
            }
        }
    }
}

TEST(Degrees, GmmnRepresentativeIndependence) {
    for (const auto& g : {GroupSpec::gmmn(3, 3), GroupSpec::gmmn(4, 3), GroupSpec::gmmn(2, 4), GroupSpec::gmmn(3, 2)})
        for (const auto& lab : all_labels(g)) {
            const MSymbol s = symbol_of(lab);
            const LaurentPoly base = symbol_generic_degree(g, s);
            for (int r = 1; r < g.m(); ++r) EXPECT_EQ(symbol_generic_degree(g, s.rotated(r)), base) << lab.to_string();
            EXPECT_EQ(symbol_generic_degree(g, s.shifted(1)), base) << lab.to_string();
            EXPECT_EQ(symbol_generic_degree(g, s.shifted(2).rotated(1)), base) << lab.to_string();
        }
}
