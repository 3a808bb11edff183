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

#include "spetses/catalan.hpp"

using namespace spetses;

namespace {
LaurentPoly q(int e) { return LaurentPoly::q_power(e); }
}  // namespace

TEST(Catalan, SpotValues) {
    EXPECT_EQ(catalan(GroupSpec::parse("A2"), 5), 7);
    EXPECT_EQ(catalan(GroupSpec::gm1n(2, 2), 5), 6);
    EXPECT_EQ(catalan(GroupSpec::gm1n(2, 2), 5), static_cast<long>(binomial(4, 2)));
    for (const auto& g : {GroupSpec::parse("A2"), GroupSpec::parse("A4"), GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 3),
                          GroupSpec::gmmn(4, 3), GroupSpec::gmmn(3, 2)})
        EXPECT_EQ(catalan(g, 1), 1) << g.name();
    EXPECT_THROW(catalan(GroupSpec::gm1n(2, 2), 2), InvalidArgument);
}

TEST(Catalan, QVersionAtOne) {
    for (const auto& g : {GroupSpec::parse("A3"), GroupSpec::gm1n(2, 3), GroupSpec::gmmn(3, 3)})
        for (long long p : default_p_values(g)) EXPECT_EQ(q_catalan(g, p).value_at_one(), Cyclotomic(catalan(g, p)));
}

TEST(Trace, SmallCases) {
    const auto g = GroupSpec::gm1n(2, 2);
    EXPECT_EQ(trace_sum(g, 1), (LaurentPoly(1) - q(1)) * (LaurentPoly(1) - q(1)) * q(-2));
    EXPECT_EQ(trace_sum(g, 3), main_closed_form(g, 3));
    EXPECT_EQ(trace_sum(GroupSpec::gmmn(3, 3), 5), main_closed_form(GroupSpec::gmmn(3, 3), 5));
    EXPECT_THROW(trace_sum(GroupSpec::parse("A2"), 1), InvalidArgument);
}

TEST(Trace, MainIdentity) {
    for (const auto& g : {GroupSpec::gm1n(2, 2), GroupSpec::gmmn(3, 2), GroupSpec::gm1n(3, 3)})
        for (const auto& r : verify_main(g, default_p_values(g))) EXPECT_TRUE(r.equal) << g.name() << " p=" << r.p << " " << r.witness.value_or("");
}

TEST(Trace, SwappedRoute) {
    for (const auto& g : {GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 2)})
        for (long long p : default_p_values(g)) EXPECT_EQ(trace_sum_swapped(g, p), trace_sum(g, p)) << g.name() << " p=" << p;
}

TEST(Trace, Vanishing) {
    for (const auto& g : {GroupSpec::gm1n(2, 2), GroupSpec::gmmn(3, 3), GroupSpec::gm1n(3, 2)})
        for (long long p : default_p_values(g)) {
            const auto r = verify_vanishing(g, p);
            EXPECT_TRUE(r.equal) << g.name() << " p=" << p << " " << r.witness.value_or("");
        }
}

TEST(Trace, Parking) {
    EXPECT_TRUE(verify_parking(GroupSpec::gm1n(2, 2), 1).equal);
    const auto r = verify_parking(GroupSpec::gm1n(2, 2), 3);
    EXPECT_TRUE(r.equal) << r.witness.value_or("");
    EXPECT_EQ(r.rhs, (q(3) - 1) * (q(3) - 1));
    EXPECT_TRUE(verify_parking(GroupSpec::gmmn(3, 2), 2).equal);
    for (const auto& g : {GroupSpec::gm1n(3, 2), GroupSpec::gmmn(3, 3)})
        for (long long p : default_p_values(g)) EXPECT_TRUE(verify_parking(g, p).equal) << g.name() << " p=" << p;
}
