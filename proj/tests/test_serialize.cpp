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

#include "spetses/spetses.hpp"

using namespace spetses;

TEST(Serialize, CyclotomicShape) {
    const Cyclotomic c = cyclo(4, 1) * Cyclotomic(ratio(3, 2)) - 1;
    const Json j = to_json(c);
    EXPECT_EQ(j.dump(), R"({"coeffs":[[0,"-1"],[1,"3/2"]],"conductor":4})");
    EXPECT_EQ(cyclotomic_from_json(j), c);
}

TEST(Serialize, LaurentRoundTrip) {
    const LaurentPoly p = LaurentPoly::monomial(cyclo(3, 1), 2, 4) + LaurentPoly::monomial(Cyclotomic(-2), -1, 4);
    const Json j = to_json(p);
    EXPECT_EQ(j["var"], "q");
    EXPECT_EQ(j["root_order"], 4);
    EXPECT_EQ(j["terms"][0][0], -1);
    EXPECT_EQ(j["terms"][1][0], 2);
    EXPECT_EQ(laurent_from_json(j), p);
    EXPECT_THROW(laurent_from_json(Json::parse(R"({"var":"q"})")), InvalidArgument);
}

TEST(Serialize, CharRecordAndReport) {
    const GroupSpec g = GroupSpec::gm1n(2, 2);
    const Json rec = to_json(char_table(g)->front());
    for (const char* key : {"label", "feg", "deg", "schur", "a", "A", "b", "B", "h", "c"}) EXPECT_TRUE(rec.contains(key)) << key;
    const Json rep = to_json(verify_main(g, 1));
    for (const char* key : {"group", "p", "claim", "equal", "lhs", "rhs", "witness", "ms"}) EXPECT_TRUE(rep.contains(key)) << key;
    EXPECT_EQ(rep["group"], "G(2,1,2)");
    EXPECT_TRUE(rep["equal"].get<bool>());
}
