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

#include "spetses/cyclotomic.hpp"
#include "spetses/laurent.hpp"

using namespace spetses;

TEST(Cyclotomic, ZetaSixSquared) {
    EXPECT_EQ(cyclo(6, 2), cyclo(6, 1) - 1);
}

TEST(Cyclotomic, MixedConductorSum) {
    const Cyclotomic s = cyclo(4, 1) + cyclo(6, 1);
    EXPECT_EQ(s.conductor(), 12);
    std::vector<Rational> expect(4);
    expect[2] = 1;
    expect[3] = 1;
    EXPECT_EQ(s.coefficients(), expect);
}

TEST(Cyclotomic, InverseAndNorm) {
    const Cyclotomic a = cyclo(5, 1) + 2;
    EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    EXPECT_EQ(Cyclotomic(cyclo(3, 1) - 1).norm(), Rational(3));
    EXPECT_THROW(Cyclotomic().inverse(), DivisionByZero);
}

TEST(Cyclotomic, ToString) {
    EXPECT_EQ(cyclo(12, 3).to_string(), "E(12)^3");
    EXPECT_EQ(Cyclotomic(ratio(-3, 2)).to_string(), "-3/2");
    EXPECT_EQ((cyclo(3, 1) * ratio(1, 2)).to_string(), "1/2*E(3)");
}

TEST(Laurent, QIntegerProduct) {
    const LaurentPoly p = q_integer(2) * q_integer(4);
    LaurentPoly expect(1);
    expect += LaurentPoly::q_power(1) * 2 + LaurentPoly::q_power(2) * 2 + LaurentPoly::q_power(3) * 2 + LaurentPoly::q_power(4);
    EXPECT_EQ(p, expect);
}

TEST(Laurent, ExactDivision) {
    const LaurentPoly p = q_integer(6);
    EXPECT_EQ(exact_div(p, q_integer(3)), LaurentPoly(1) + LaurentPoly::q_power(3));
    EXPECT_THROW(exact_div(p, q_integer(4)), InexactDivision);
}

TEST(Laurent, EvalAtRoot) {
    // [3]_q at zeta_3 vanishes
    EXPECT_TRUE(eval_at_root(q_integer(3), 3, 1).is_zero());
    EXPECT_EQ(eval_at_root(q_integer(2), 4, 1), cyclo(4, 1) + 1);
}
