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

#include "spetses/group.hpp"

using namespace spetses;

namespace {
long long brute_reflections(const GroupSpec& g) {
    long long count = 0;
    for (const auto& e : enumerate_elements(g))
        if (e.fixed_space_dimension() == g.n() - 1) ++count;
    return count;
}
}  // namespace

TEST(Groups, Parse) {
    EXPECT_EQ(GroupSpec::parse(" G( 3 , 1 , 2 ) "), GroupSpec::gm1n(3, 2));
    EXPECT_EQ(GroupSpec::parse("G(4,4,3)"), GroupSpec::gmmn(4, 3));
    EXPECT_EQ(GroupSpec::parse("A2"), GroupSpec::type_a(3));
    EXPECT_THROW(GroupSpec::parse("G(2,2,2)"), InvalidGroup);
    EXPECT_THROW(GroupSpec::parse("G(4,2,2)"), InvalidGroup);
    EXPECT_THROW(GroupSpec::parse("G(1,1,3)"), InvalidGroup);
    EXPECT_THROW(GroupSpec::parse("H4"), InvalidGroup);
}

TEST(Groups, Invariants) {
    const auto inv = invariants(GroupSpec::gm1n(3, 2));
    EXPECT_EQ(inv.degrees, (std::vector<int>{3, 6}));
    EXPECT_EQ(inv.coxeter_number, 6);
    EXPECT_EQ(inv.num_reflections, 7);
    EXPECT_EQ(inv.num_hyperplanes, 5);
    EXPECT_EQ(inv.order, 18);
    const auto inv2 = invariants(GroupSpec::gmmn(3, 3));
    EXPECT_EQ(inv2.degrees, (std::vector<int>{3, 3, 6}));
    EXPECT_EQ(inv2.coxeter_number, 6);
    EXPECT_EQ(inv2.num_reflections, 9);
}

TEST(Groups, ReflectionsMatchBruteForce) {
    EXPECT_EQ(enumerate_reflections(GroupSpec::gm1n(2, 2)).size(), 4u);
    EXPECT_EQ(enumerate_reflections(GroupSpec::gm1n(3, 2)).size(), 7u);
    for (const auto& g : {GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 2), GroupSpec::gm1n(2, 3), GroupSpec::gm1n(4, 2),
                          GroupSpec::gmmn(3, 3), GroupSpec::gmmn(4, 3), GroupSpec::gmmn(3, 2)}) {
        const auto refl = enumerate_reflections(g);
        EXPECT_EQ(static_cast<long long>(refl.size()), brute_reflections(g)) << g.name();
        EXPECT_EQ(static_cast<long long>(refl.size()), invariants(g).num_reflections) << g.name();
        for (const auto& r : refl) EXPECT_EQ(r.matrix.fixed_space_dimension(), g.n() - 1);
    }
}

TEST(Groups, ElementCount) {
    EXPECT_EQ(enumerate_elements(GroupSpec::gmmn(3, 3)).size(), 54u);
    EXPECT_THROW(enumerate_elements(GroupSpec::gm1n(10, 8)), BoundExceeded);
}
