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
#include "spetses/reprs.hpp"

using namespace spetses;

namespace {
std::vector<GroupSpec> model_groups() {
    return {GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 2), GroupSpec::gm1n(2, 3), GroupSpec::gm1n(4, 2), GroupSpec::gm1n(3, 3)};
}
}  // namespace

TEST(Reprs, SmallModels) {
    const auto g = GroupSpec::gm1n(2, 2);
    const Model md = build_model(parse_label(g, "[(1),(1)]"));
    EXPECT_EQ(md.dimension(), 2);
    EXPECT_EQ(md.t.trace(), Cyclotomic(0));
    const Model triv = build_model(trivial_label(g));
    EXPECT_EQ(triv.t, Matrix::identity(1));
    EXPECT_EQ(triv.s[0], Matrix::identity(1));
    const Model m3 = build_model(parse_label(GroupSpec::gm1n(2, 3), "[(2),(1)]"));
    EXPECT_EQ(m3.dimension(), 3);
}

TEST(Reprs, TableauCountMatchesDimension) {
    for (const auto& g : model_groups())
        for (const auto& lab : all_labels(g))
            EXPECT_EQ(BigInt(static_cast<long>(standard_tableaux(lab.lambda).size())), dimension(lab)) << lab.to_string();
}

TEST(Reprs, ReflectionWords) {
    for (const auto& g : model_groups())
        for (const auto& r : enumerate_reflections(g)) EXPECT_EQ(evaluate_word(g, reflection_word(g, r)), r.matrix);
}

TEST(Reprs, ContentMatchesGeneralizedCoxeterNumber) {
    for (const auto& g : model_groups()) {
        const auto inv = invariants(g);
        const auto table = char_table(g);
        for (const auto& d : *table) {
            const Cyclotomic c = reflection_character_sum(d.label);
            EXPECT_EQ(Cyclotomic(inv.num_reflections) - c, Cyclotomic(d.h_char)) << g.name() << " " << d.label.to_string();
        }
    }
    EXPECT_EQ(reflection_character_sum(parse_label(GroupSpec::gm1n(2, 2), "[(1),(1)]")), Cyclotomic(0));
}

TEST(Reprs, DualAndGaloisOracles) {
    for (const auto& g : {GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 2), GroupSpec::gm1n(4, 2), GroupSpec::gm1n(3, 3)}) {
        const int h = invariants(g).coxeter_number;
        std::map<std::string, std::map<MonomialMatrix, Cyclotomic>> chars;
        for (const auto& lab : all_labels(g)) chars[lab.to_string()] = model_character(lab);
        for (const auto& lab : all_labels(g)) {
            const auto& chi = chars.at(lab.to_string());
            EXPECT_EQ(static_cast<long>(chi.size()), invariants(g).order.get_si());
            const auto& dual = chars.at(dual_label(lab).to_string());
            for (const auto& [x, v] : chi) EXPECT_EQ(dual.at(x), v.conj()) << lab.to_string();
            for (int p = 1; p < h; ++p) {
                if (std::gcd(p, h) != 1) continue;
                const auto& tw = chars.at(galois_twist(lab, p).to_string());
                for (const auto& [x, v] : chi) EXPECT_EQ(tw.at(x), v.galois(p)) << lab.to_string() << " p=" << p;
            }
        }
    }
}

TEST(Reprs, ExteriorPowerContent) {
    const auto g = GroupSpec::gm1n(3, 2);
    const auto inv = invariants(g);
    for (int p : {1, 5})
        for (int k = 0; k <= 2; ++k)
            EXPECT_EQ(reflection_character_sum(exterior_twist_label(g, k, p)),
                      Cyclotomic(inv.num_reflections - k * inv.coxeter_number));
}
