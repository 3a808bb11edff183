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

#include "spetses/fourier.hpp"

using namespace spetses;

namespace {
std::vector<GroupSpec> fourier_groups() {
    return {GroupSpec::gm1n(2, 1), GroupSpec::gm1n(3, 1), GroupSpec::gm1n(2, 2), GroupSpec::gm1n(3, 2), GroupSpec::gm1n(2, 3)};
}
}  // namespace

TEST(Fourier, TrivialPairing) {
    for (const auto& g : fourier_groups()) EXPECT_EQ(pairing(trivial_label(g), trivial_label(g)), Cyclotomic(1)) << g.name();
}

TEST(Fourier, T1) {
    for (const auto& g : fourier_groups())
        for (const auto& r : verify_T1(g)) EXPECT_TRUE(r.equal) << g.name() << " " << r.witness.value_or("");
}

TEST(Fourier, T2T3AndIndependence) {
    for (const auto& g : fourier_groups()) {
        const auto pp = check_pairing_properties(g);
        EXPECT_TRUE(pp.symmetric) << g.name();
        EXPECT_TRUE(pp.support_ok) << g.name();
        EXPECT_TRUE(pp.rep_independent) << g.name();
        EXPECT_TRUE(pp.shift_independent) << g.name();
        for (const auto& f : pp.failures) ADD_FAILURE() << g.name() << " " << f;
    }
}

TEST(Fourier, Swap) {
    for (const auto& g : fourier_groups()) {
        const int h = invariants(g).coxeter_number;
        for (int p = 1; p <= 3 * h; ++p) {
            if (std::gcd(p, h) != 1) continue;
            const auto r = verify_transform_swap(g, p);
            EXPECT_TRUE(r.equal) << g.name() << " p=" << p << " " << r.witness.value_or("");
        }
    }
}

TEST(Fourier, PairingMatrixShapes) {
    const auto mats = pairing_matrices(GroupSpec::gm1n(2, 2));
    std::size_t total = 0;
    for (const auto& pm : mats) {
        EXPECT_EQ(pm.entries.size(), pm.family.members.size());
        total += pm.family.members.size();
    }
    EXPECT_EQ(total, 5u);
}
