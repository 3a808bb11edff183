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


#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "degrees.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "mpartition.hpp"
#include "symbol.hpp"

namespace spetses {

/// Result of one exact verification.
struct VerificationReport {
    std::string group;
    long long p = 0;
    std::string claim;  // main | vanishing | parking | T1 | swap
    bool equal = false;
    LaurentPoly lhs;
    LaurentPoly rhs;
    std::optional<std::string> witness;  // first differing term, or a description
    double ms = 0;
};

namespace detail {

/// First exponent where two polynomials differ, rendered as "exponent: lhs vs rhs".
inline std::optional<std::string> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
    const LaurentPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    const int e = d.low_degree();
    return "y^" + std::to_string(e) + ": " + a.coefficient(e).to_string() + " vs " + b.coefficient(e).to_string();
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

/// psi : Y -> rows, Y the sorted entries; copies of a value go to its rows in ascending order.
inline std::vector<int> canonical_psi(const MSymbol& s, const std::vector<int>& Y) {
    std::vector<int> psi(Y.size());
    std::map<int, std::vector<int>> rows_of;
    for (int i = 0; i < s.m(); ++i)
        for (int x : s[i]) rows_of[x].push_back(i);
    std::size_t pos = 0;
    while (pos < Y.size()) {
        const auto& rows = rows_of.at(Y[pos]);
        for (int r : rows) psi[pos++] = r;
    }
    return psi;
}

/// All psi in the class [canonical_psi]: permutations of rows inside each value group.
inline std::vector<std::vector<int>> psi_class(const MSymbol& s, const std::vector<int>& Y) {
    const std::vector<int> base = canonical_psi(s, Y);
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
    for (std::size_t i = 0; i < Y.size();) {
        std::size_t j = i;
        while (j < Y.size() && Y[j] == Y[i]) ++j;
        groups.push_back({i, j});
        i = j;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur = base;
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            out.push_back(cur);
            return;
        }
        const auto [b, e] = groups[gi];
        std::vector<int> rows(base.begin() + static_cast<long>(b), base.begin() + static_cast<long>(e));
        std::sort(rows.begin(), rows.end());
        do {
            std::copy(rows.begin(), rows.end(), cur.begin() + static_cast<long>(b));
            self(self, gi + 1);
        } while (std::next_permutation(rows.begin(), rows.end()));
    };
    rec(rec, 0);
    return out;
}

/// epsilon(psi) = (-1)^{#{y < y' : psi(y) < psi(y')}}
inline int epsilon(const std::vector<int>& psi) {
    long long c = 0;
    for (std::size_t a = 0; a < psi.size(); ++a)
        for (std::size_t b = a + 1; b < psi.size(); ++b)
            if (psi[a] < psi[b]) ++c;
    return c % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Fourier pairing {S, S'} for labels of G(m,1,n). Both symbols are shifted to
/// the common content of the group's families, plus `extra_shift` further shifts.
/// `rep_choice` selects which element of the class [kappa^{-1}(S')] stands in for
/// the second argument (0 is the canonical one).
inline Cyclotomic pairing(const CharLabel& a, const CharLabel& b, int extra_shift = 0, std::size_t rep_choice = 0) {
    const GroupSpec& g = a.group;
    detail::require_gm1n(g, "the Fourier pairing");
    const int m = g.m();
    const int target = family_content(g) + m * extra_shift;
    const MSymbol sa = shifted_to_content(symbol_of(a), target);
    const MSymbol sb = shifted_to_content(symbol_of(b), target);
    const std::vector<int> Y = sa.entries();
    if (Y != sb.entries()) return Cyclotomic(0);
    const int l = (target - 1) / m;
    const auto cls_b = detail::psi_class(sb, Y);
    const std::vector<int>& psi_b = cls_b.at(rep_choice % cls_b.size());
    const int eps_b = detail::epsilon(psi_b);
    std::vector<Rational> acc(static_cast<std::size_t>(m));
    for (const auto& nu : detail::psi_class(sa, Y)) {
        long long e = 0;
        for (std::size_t y = 0; y < Y.size(); ++y) e += static_cast<long long>(nu[y]) * psi_b[y];
        acc[static_cast<std::size_t>(mod(-e, m))] += detail::epsilon(nu) * eps_b;
    }
    Cyclotomic sum = Cyclotomic::from_coefficients(m, std::move(acc));
    Cyclotomic t(1);
    const Cyclotomic tm = detail::tau(m);
    for (int k = 0; k < l; ++k) t *= tm;
    if (mod(static_cast<long long>(l) * (m - 1), 2) == 1) sum = -sum;
    return sum / t;
}

/// Square pairing matrix of one family.
struct PairingMatrix {
    Family family;
    std::vector<std::vector<Cyclotomic>> entries;
};

inline std::vector<PairingMatrix> pairing_matrices(const GroupSpec& g) {
    std::vector<PairingMatrix> out;
    for (const auto& f : families(g)) {
        PairingMatrix pm{f, {}};
        for (const auto& x : f.members) {
            std::vector<Cyclotomic> row;
            for (const auto& y : f.members) row.push_back(pairing(x, y));
            pm.entries.push_back(std::move(row));
        }
        out.push_back(std::move(pm));
    }
    return out;
}

/// T1: Deg_chi = sum_phi {chi, phi} Feg_phi, one report per label.
inline std::vector<VerificationReport> verify_T1(const GroupSpec& g, int extra_shift = 0) {
    detail::require_gm1n(g, "verify_T1");
    const auto table = char_table(g);
    const auto fams = families(g);
    std::vector<VerificationReport> out;
    for (const auto& d : *table) {
        const auto start = std::chrono::steady_clock::now();
        LaurentPoly rhs;
        for (const auto& phi : family_of(fams, d.label).members)
            rhs += find_char(*table, phi).feg * pairing(d.label, phi, extra_shift);
        VerificationReport r{g.name(), 0, "T1", d.deg == rhs, d.deg, rhs, detail::first_difference(d.deg, rhs), 0};
        if (r.witness) *r.witness = d.label.to_string() + " " + *r.witness;
        r.ms = detail::elapsed_ms(start);
        out.push_back(std::move(r));
    }
    return out;
}

struct PairingProperties {
    bool symmetric = true;      // T2
    bool support_ok = true;     // T3: nonzero => equal h
    bool rep_independent = true;
    bool shift_independent = true;
    std::vector<std::string> failures;
};

/// T2, T3, and independence of the pairing from the representative and content choices.
inline PairingProperties check_pairing_properties(const GroupSpec& g) {
    const auto table = char_table(g);
    const auto labels = all_labels(g);
    PairingProperties pp;
    for (const auto& x : labels)
        for (const auto& y : labels) {
            const Cyclotomic v = pairing(x, y);
            const std::string who = x.to_string() + " " + y.to_string();
            if (v != pairing(y, x)) {
                pp.symmetric = false;
                pp.failures.push_back("T2 " + who);
            }
            if (!v.is_zero() && find_char(*table, x).h_char != find_char(*table, y).h_char) {
                pp.support_ok = false;
                pp.failures.push_back("T3 " + who);
            }
            for (std::size_t rep = 1; rep < 4; ++rep)
                if (pairing(x, y, 0, rep) != v) {
                    pp.rep_independent = false;
                    pp.failures.push_back("representative " + who);
                    break;
                }
            if (pairing(x, y, 1) != v) {
                pp.shift_independent = false;
                pp.failures.push_back("shift " + who);
            }
        }
    return pp;
}

/// sum_chi y^{(h_chi - nh)p} Feg_chi(zeta_h^p) Deg_chi(q) against the swapped sum, in y with y^h = q.
inline VerificationReport verify_transform_swap(const GroupSpec& g, long long p) {
    detail::require_gm1n(g, "verify_transform_swap");
    const auto start = std::chrono::steady_clock::now();
    const int h = invariants(g).coxeter_number;
    if (std::gcd(mod(p, h), static_cast<long long>(h)) != 1)
        throw InvalidArgument("p = " + std::to_string(p) + " is not coprime to h = " + std::to_string(h));
    const int n = g.n();
    LaurentPoly lhs;
    LaurentPoly rhs;
    for (const auto& d : *char_table(g)) {
        const long long f = (static_cast<long long>(d.h_char) - static_cast<long long>(n) * h) * p;
        const LaurentPoly feg_y = d.feg.with_root_order(h);
        const LaurentPoly deg_y = d.deg.with_root_order(h);
        lhs += (deg_y * eval_at_root(d.feg, h, p)).shifted(static_cast<int>(f));
        rhs += (feg_y * eval_at_root(d.deg, h, p)).shifted(static_cast<int>(f));
    }
    VerificationReport r{g.name(), p, "swap", lhs == rhs, lhs, rhs, detail::first_difference(lhs, rhs), 0};
    r.ms = detail::elapsed_ms(start);
    return r;
}

}  // namespace spetses
