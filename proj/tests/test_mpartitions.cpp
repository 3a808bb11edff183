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

#include <set>

#include "spetses/mpartition.hpp"

using namespace spetses;

namespace {
std::vector<GroupSpec> desk_groups() {
    return {GroupSpec::gm1n(2, 1), GroupSpec::gm1n(2, 2), GroupSpec::gm1n(2, 3), GroupSpec::gm1n(3, 2),
            GroupSpec::gm1n(3, 3), GroupSpec::gm1n(4, 2), GroupSpec::gmmn(2, 3), GroupSpec::gmmn(3, 2),
            GroupSpec::gmmn(3, 3), GroupSpec::gmmn(4, 3), GroupSpec::gmmn(2, 4)};
}
}  // namespace

TEST(MPartitions, Counts) {
    EXPECT_EQ(all_labels(GroupSpec::gm1n(2, 2)).size(), 5u);
    EXPECT_EQ(all_labels(GroupSpec::gm1n(3, 2)).size(), 9u);
    // G(3,3,3): 10 characters
    EXPECT_EQ(all_labels(GroupSpec::gmmn(3, 3)).size(), 10u);
    bool found = false;
    for (const auto& lab : all_labels(GroupSpec::gmmn(3, 3)))
        if (lab.lambda.to_string() == "[(1),(1),(1)]") {
            EXPECT_EQ(lab.stabilizer(), 3);
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(MPartitions, Burnside) {
    for (const auto& g : desk_groups()) {
        BigInt total = 0;
        for (const auto& lab : all_labels(g)) total += dimension(lab) * dimension(lab);
        EXPECT_EQ(total, invariants(g).order) << g.name();
    }
}

TEST(MPartitions, ExteriorTwists) {
    const auto g = GroupSpec::gm1n(2, 3);
    EXPECT_EQ(exterior_twist_label(g, 1, 1).to_string(), "[(2),(1)]");
    const auto g2 = GroupSpec::gm1n(3, 2);
    EXPECT_EQ(exterior_twist_label(g2, 0, 5).to_string(), "[(2),(),()]");
    EXPECT_EQ(exterior_twist_label(g2, 1, 5).to_string(), "[(1),(),(1)]");
    EXPECT_THROW(exterior_twist_label(g2, 1, 3), InvalidArgument);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(dimension(exterior_twist_label(g, k, 1)), static_cast<long>(binomial(3, k)));
}

TEST(MPartitions, GaloisTwist) {
    const auto g = GroupSpec::gm1n(3, 2);
    EXPECT_EQ(galois_twist(parse_label(g, "[(1),(1),()]"), 5).to_string(), "[(1),(),(1)]");
    EXPECT_EQ(galois_twist(trivial_label(g), 5), trivial_label(g));
    for (const auto& G : desk_groups()) {
        const int h = invariants(G).coxeter_number;
        std::set<std::string> seen;
        for (const auto& lab : all_labels(G)) {
            for (int p = 1; p < 2 * h; ++p) {
                if (std::gcd(p, h) != 1) continue;
                for (int p2 = 1; p2 < h; ++p2) {
                    if (std::gcd(p2, h) != 1) continue;
                    EXPECT_EQ(galois_twist(galois_twist(lab, p), p2), galois_twist(lab, p * p2));
                }
            }
            seen.insert(galois_twist(lab, h - 1).to_string());
        }
        EXPECT_EQ(seen.size(), all_labels(G).size());
    }
}

TEST(MPartitions, Dual) {
    for (const auto& g : desk_groups())
        for (const auto& lab : all_labels(g)) {
            EXPECT_EQ(dual_label(dual_label(lab)), lab);
            if (g.m() <= 2) {
                EXPECT_EQ(dual_label(lab), lab);
            }
        }
    EXPECT_EQ(dual_label(trivial_label(GroupSpec::gm1n(3, 2))), trivial_label(GroupSpec::gm1n(3, 2)));
}

TEST(MPartitions, Dimension) {
    EXPECT_EQ(dimension(parse_label(GroupSpec::gm1n(2, 2), "[(1),(1)]")), 2);
    EXPECT_EQ(dimension(trivial_label(GroupSpec::gmmn(4, 3))), 1);
    EXPECT_EQ(standard_tableaux_count({3, 2}), 5);
}

TEST(MPartitions, ParseRoundTrip) {
    for (const auto& g : desk_groups())
        for (const auto& lab : all_labels(g)) EXPECT_EQ(parse_label(g, lab.to_string()), lab);
    EXPECT_THROW(parse_label(GroupSpec::gm1n(2, 2), "[(1),(2)]"), InvalidArgument);
    EXPECT_THROW(parse_label(GroupSpec::gm1n(2, 2), "[(1,2),()]"), InvalidArgument);
    EXPECT_THROW(parse_label(GroupSpec::gm1n(2, 2), "(1),(1)"), InvalidArgument);
}
