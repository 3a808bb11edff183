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

#include "spetses/finite_group.hpp"

using namespace spetses;

namespace {

bool is_unitary(const FourierMatrix& fm) {
    const std::size_t n = fm.entries.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Cyclotomic s;
            for (std::size_t k = 0; k < n; ++k) s += fm.entries[i][k] * fm.entries[j][k].conj();
            if (s != Cyclotomic(i == j ? 1 : 0)) return false;
        }
    return true;
}

}  // namespace

TEST(FiniteGroup, TablesValidate) {
    EXPECT_EQ(cyclic_group(5).size(), 5);
    EXPECT_EQ(symmetric_group(3).size(), 6);
    EXPECT_EQ(symmetric_group(4).classes().size(), 5u);
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), InvalidArgument);
    EXPECT_THROW(symmetric_group(6), BoundExceeded);
}

TEST(FiniteGroup, CharacterTables) {
    const auto s4 = symmetric_group(4);
    const auto ct = character_table(s4, s4.all_elements());
    ASSERT_EQ(ct.values.size(), 5u);
    std::vector<long> degs;
    for (const auto& row : ct.values) degs.push_back(static_cast<long>(row[static_cast<std::size_t>(ct.class_of.at(s4.identity()))].rational_value().get_num().get_si()));
    EXPECT_EQ(degs, (std::vector<long>{1, 1, 2, 3, 3}));

    const auto c3 = cyclic_group(3);
    const auto t3 = character_table(c3, c3.all_elements());
    ASSERT_EQ(t3.values.size(), 3u);
    bool saw_root = false;
    for (const auto& row : t3.values)
        if (row[static_cast<std::size_t>(t3.class_of.at(1))] == cyclo(3, 1)) saw_root = true;
    EXPECT_TRUE(saw_root);
}

TEST(NonabelianFourier, TrivialGroup) {
    const auto fm = nonabelian_fourier(cyclic_group(1));
    ASSERT_EQ(fm.entries.size(), 1u);
    EXPECT_EQ(fm.entries[0][0], Cyclotomic(1));
}

TEST(NonabelianFourier, CyclicTwo) {
    const auto fm = nonabelian_fourier(cyclic_group(2));
    ASSERT_EQ(fm.entries.size(), 4u);
    for (const auto& row : fm.entries)
        for (const auto& v : row) EXPECT_TRUE(v == Cyclotomic(ratio(1, 2)) || v == Cyclotomic(ratio(-1, 2))) << v;
    EXPECT_TRUE(is_unitary(fm));
}

TEST(NonabelianFourier, Unitary) {
    for (const auto& G : {cyclic_group(3), symmetric_group(3), cyclic_group(4), symmetric_group(4)})
        EXPECT_TRUE(is_unitary(nonabelian_fourier(G)));
}

// real characters: symmetric
TEST(NonabelianFourier, SymmetricThree) {
    const auto s3 = nonabelian_fourier(symmetric_group(3));
    for (std::size_t i = 0; i < s3.entries.size(); ++i)
        for (std::size_t j = 0; j < s3.entries.size(); ++j) EXPECT_EQ(s3.entries[i][j], s3.entries[j][i]);
    EXPECT_EQ(s3.entries.size(), 8u);
    EXPECT_EQ(s3.entries[0][0], Cyclotomic(ratio(1, 6)));
}
