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

#include "spetses/symbol.hpp"

using namespace spetses;

namespace {
std::vector<GroupSpec> desk_groups() {
    return {GroupSpec::gm1n(2, 2), GroupSpec::gm1n(2, 3), GroupSpec::gm1n(3, 2), GroupSpec::gm1n(3, 3),
            GroupSpec::gm1n(4, 2), GroupSpec::gmmn(2, 3), GroupSpec::gmmn(3, 2), GroupSpec::gmmn(3, 3),
            GroupSpec::gmmn(4, 3)};
}
}  // namespace

TEST(Symbols, Examples) {
    const auto g = GroupSpec::gm1n(2, 3);
    EXPECT_EQ(symbol_of(parse_label(g, "[(2),(1)]")).to_string(), "0,3;1");
    EXPECT_EQ(symbol_of(trivial_label(GroupSpec::gm1n(3, 4))).to_string(), "4;;");
    const auto st = symbol_stats(symbol_of(trivial_label(GroupSpec::gm1n(3, 4))), SymbolKind::content1);
    EXPECT_EQ(st.rank, 4);
    EXPECT_EQ(st.content, 1);
    EXPECT_EQ(st.defect, 0);
    MSymbol zeros{{{0}, {0}, {0}}};
    EXPECT_EQ(symbol_stats(zeros, SymbolKind::content0).rank, 0);
    EXPECT_THROW(symbol_stats(zeros, SymbolKind::content1), InvalidArgument);
}

TEST(Symbols, RankAndDefectOfLabels) {
    for (const auto& g : desk_groups())
        for (const auto& lab : all_labels(g)) {
            const MSymbol s = symbol_of(lab);
            const auto st = symbol_stats(s, symbol_kind(g));
            EXPECT_EQ(st.rank, g.n()) << lab.to_string();
            EXPECT_EQ(st.defect, 0) << lab.to_string();
            EXPECT_EQ(rotation_stabilizer(s), lab.stabilizer());
            const auto st2 = symbol_stats(s.shifted(2), symbol_kind(g));
            EXPECT_EQ(st2.rank, st.rank);
            EXPECT_EQ(st2.defect, st.defect);
        }
}

TEST(Symbols, Stabilizer) {
    const auto g = GroupSpec::gmmn(3, 3);
    EXPECT_EQ(rotation_stabilizer(symbol_of(parse_label(g, "[(1),(1),(1)]:0"))), 3);
    EXPECT_EQ(rotation_stabilizer(symbol_of(parse_label(GroupSpec::gm1n(2, 2), "[(1),(1)]"))), 1);
}

TEST(Symbols, FamiliesPartitionLabels) {
    for (const auto& g : desk_groups()) {
        std::size_t total = 0;
        for (const auto& f : families(g)) total += f.members.size();
        EXPECT_EQ(total, all_labels(g).size()) << g.name();
    }
}

TEST(Symbols, TrivialIsSingleton) {
    for (const auto& g : desk_groups()) {
        const auto fams = families(g);
        const auto& f = family_of(fams, trivial_label(g));
        EXPECT_EQ(f.members.size(), 1u) << g.name();
        EXPECT_EQ(unipotent_symbols_with_entries(g, f.entries).size(), 1u) << g.name();
    }
}

TEST(Symbols, UnipotentEnumerationContainsLabels) {
    for (const auto& g : desk_groups()) {
        for (const auto& f : families(g)) {
            const auto uni = unipotent_symbols_with_entries(g, f.entries);
            EXPECT_GE(uni.size() * static_cast<std::size_t>(g.kind() == GroupKind::Gmmn ? g.m() : 1), f.members.size());
        }
    }
}
