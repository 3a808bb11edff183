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

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "laurent.hpp"
#include "mpartition.hpp"
#include "symbol.hpp"

namespace spetses {

namespace detail {

inline LaurentPoly qpow(int e) { return LaurentPoly::q_power(e); }

/// q^e - 1
inline LaurentPoly q_minus_one(int e) { return binomial_term(Cyclotomic(1), e, Cyclotomic(1), 0); }

/// tau(m) = prod_{i<j} (zeta^i - zeta^j)
inline Cyclotomic tau(int m) {
    Cyclotomic t(1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) t *= cyclo(m, i) - cyclo(m, j);
    return t;
}

/// Theta(A, q^m) = prod_{x in A, x >= 1} prod_{j=1}^{x} (q^{mj} - 1)
inline LaurentPoly theta(const std::vector<int>& row, int m) {
    LaurentPoly r(1);
    for (int x : row)
        for (int j = 1; j <= x; ++j) r *= q_minus_one(m * j);
    return r;
}

/// Delta(A, q^m) = prod_{x' < x} (q^{mx} - q^{mx'})
inline LaurentPoly delta(const std::vector<int>& row, int m) {
    LaurentPoly r(1);
    for (std::size_t a = 0; a < row.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) r *= binomial_term(Cyclotomic(1), m * row[a], Cyclotomic(1), m * row[b]);
    return r;
}

/// prod_{i <= j} prod_{(x, y) in S_i x S_j, y < x if i = j} (q^x zeta^i - q^y zeta^j)
inline LaurentPoly pair_product(const MSymbol& s) {
    const int m = s.m();
    LaurentPoly r(1);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int x : s[i])
                for (int y : s[j]) {
                    if (i == j && !(y < x)) continue;
                    r *= binomial_term(cyclo(m, i), x, cyclo(m, j), y);
                }
    return r;
}

/// sum_{k=1}^{l} C(m(l-k) + offset, 2)
inline int q_shift(int m, int l, int offset) {
    long long e = 0;
    for (int k = 1; k <= l; ++k) e += choose2(static_cast<long long>(m) * (l - k) + offset);
    return static_cast<int>(e);
}

inline LaurentPoly product_q_minus_one(int m, int upto) {
    LaurentPoly r(1);
    for (int i = 1; i <= upto; ++i) r *= q_minus_one(m * i);
    return r;
}

inline void require_gm1n(const GroupSpec& g, const char* what) {
    if (g.kind() != GroupKind::Gm1n) throw InvalidArgument(std::string(what) + " is available for G(m,1,n) only");
}

}  // namespace detail

/// Feg_chi(q) from the symbol of the label.
inline LaurentPoly fake_degree(const CharLabel& lab) {
    using namespace detail;
    const GroupSpec& g = lab.group;
    const int m = g.m();
    const int n = g.n();
    const MSymbol s = symbol_of(lab);
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (int i = 0; i < m; ++i) {
        num *= delta(s[i], m);
        den *= theta(s[i], m);
    }
    if (g.kind() == GroupKind::Gm1n) {
        const int l = (s.content() - 1) / m;
        num *= product_q_minus_one(m, n);
        long long e = 0;
        for (int i = 1; i < m; ++i)
            for (int x : s[i]) e += static_cast<long long>(m - i) * x;
        return exact_div(num, den).shifted(static_cast<int>(e) - q_shift(m, l, 1));
    }
    const int l = s.content() / m;
    num *= q_minus_one(n) * product_q_minus_one(m, n - 1);
    LaurentPoly rot;
    for (int j = 0; j < m; ++j) {
        long long e = 0;
        for (int i = 1; i < m; ++i)
            for (int x : s[static_cast<int>(mod(i + j, m))]) e += static_cast<long long>(m - i) * x;
        rot += qpow(static_cast<int>(e));
    }
    num *= rot;
    const LaurentPoly r = exact_div(num, den).shifted(-q_shift(m, l, 0));
    return r * Cyclotomic(ratio(1, lab.stabilizer()));
}

/// Deg of the unipotent character with the given symbol (any representative).
inline LaurentPoly symbol_generic_degree(const GroupSpec& g, const MSymbol& s) {
    using namespace detail;
    require_imprimitive(g);
    const int m = g.m();
    const int n = g.n();
    const SymbolStats st = symbol_stats(s, symbol_kind(g));
    LaurentPoly num = pair_product(s);
    LaurentPoly den(1);
    for (int i = 0; i < m; ++i) den *= theta(s[i], m);
    long long sign_exp;
    int l;
    Cyclotomic scalar(1);
    if (g.kind() == GroupKind::Gm1n) {
        l = (s.content() - 1) / m;
        num *= product_q_minus_one(m, n);
        den = den.shifted(q_shift(m, l, 1));
        sign_exp = choose2(m) * choose2(l);
    } else {
        l = s.content() / m;
        num *= q_minus_one(n) * product_q_minus_one(m, n - 1);
        den = den.shifted(q_shift(m, l, 0));
        // gamma(S) = def(S)/m * (m l - 1), def taken as the raw value
        long long weighted = 0;
        for (int i = 0; i < m; ++i) weighted += static_cast<long long>(i) * static_cast<long long>(s[i].size());
        const long long twice_def = static_cast<long long>(m - 1) * s.content() - 2 * weighted;
        const long long raw_def = twice_def / 2;
        if (twice_def % 2 != 0 || raw_def % m != 0) throw InvalidArgument("gamma(S) is not an integer for " + s.to_string());
        const long long gamma = raw_def / m * (static_cast<long long>(m) * l - 1);
        sign_exp = choose2(m) * choose2(l) + gamma;
        scalar = Cyclotomic(ratio(m, rotation_stabilizer(s)));
    }
    (void)st;
    Cyclotomic t(1);
    const Cyclotomic tm = tau(m);
    for (int k = 0; k < l; ++k) t *= tm;
    if (mod(sign_exp, 2) == 1) scalar = -scalar;
    return exact_div(num, den) * (scalar / t);
}

inline LaurentPoly generic_degree(const CharLabel& lab) { return symbol_generic_degree(lab.group, symbol_of(lab)); }

enum class SchurFormula { chlouveraki, mathas };

namespace detail {

/// Q_0 = q, Q_s = zeta_m^s, as a monomial.
inline LaurentPoly Q(int m, int s) { return s == 0 ? qpow(1) : LaurentPoly(cyclo(m, s)); }

inline LaurentPoly schur_chlouveraki(const CharLabel& lab) {
    const int m = lab.group.m();
    const int n = lab.group.n();
    std::vector<int> all;
    for (const auto& p : lab.lambda.comps) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.rbegin(), all.rend());
    long long nbar = 0;
    for (std::size_t i = 0; i < all.size(); ++i) nbar += static_cast<long long>(i) * all[i];
    LaurentPoly num(1);
    for (int s = 0; s < m; ++s) {
        const Partition& ls = lab.lambda[s];
        for (int t = 0; t < m; ++t) {
            const Partition ct = conjugate(lab.lambda[t]);
            const int e = (s == 0 ? 1 : 0) - (t == 0 ? 1 : 0);
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (int j = 1; j <= ls[i]; ++j) {
                    const int mu_j = j <= static_cast<int>(ct.size()) ? ct[static_cast<std::size_t>(j - 1)] : 0;
                    const int h = ls[i] - static_cast<int>(i + 1) + mu_j - j + 1;
                    num *= binomial_term(cyclo(m, s - t), h + e, Cyclotomic(1), 0);
                }
        }
    }
    LaurentPoly r = exact_div(num, pow(q_minus_one(1), n)).shifted(static_cast<int>(-nbar));
    if (mod(static_cast<long long>(n) * (m - 1), 2) == 1) r = -r;
    return r;
}

inline LaurentPoly schur_mathas(const CharLabel& lab) {
    const int m = lab.group.m();
    const int n = lab.group.n();
    long long alpha = 0;
    for (const auto& p : lab.lambda.comps)
        for (std::size_t i = 0; i < p.size(); ++i) alpha += static_cast<long long>(i) * p[i];
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (int s = 0; s < m; ++s) {
        const Partition& ls = lab.lambda[s];
        const Partition cs = conjugate(ls);
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (int j = 1; j <= ls[i]; ++j) {
                const int h = ls[i] - static_cast<int>(i + 1) + cs[static_cast<std::size_t>(j - 1)] - j + 1;
                num *= Q(m, s) * q_integer(h);
            }
        for (int t = s + 1; t < m; ++t) {
            const Partition& lt = lab.lambda[t];
            const Partition ct = conjugate(lt);
            const LaurentPoly Qs = Q(m, s);
            const LaurentPoly Qt = Q(m, t);
            for (std::size_t i = 0; i < lt.size(); ++i)
                for (int j = 1; j <= lt[i]; ++j) num *= qpow(j - static_cast<int>(i + 1)) * Qt - Qs;
            const int lt1 = lt.empty() ? 0 : lt.front();
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (int j = 1; j <= ls[i]; ++j) {
                    const LaurentPoly c = qpow(j - static_cast<int>(i + 1)) * Qs;
                    num *= c - qpow(lt1) * Qt;
                    for (int k = 1; k <= lt1; ++k) {
                        const int ctk = ct[static_cast<std::size_t>(k - 1)];
                        num *= c - qpow(k - 1 - ctk) * Qt;
                        den *= c - qpow(k - ctk) * Qt;
                    }
                }
        }
    }
    LaurentPoly r = exact_div(num, den).shifted(static_cast<int>(-alpha - n));
    if (mod(static_cast<long long>(m) * n, 2) == 1) r = -r;
    return r;
}

}  // namespace detail

/// Schur element S_chi(q). Both formulas apply to G(m,1,n); for G(m,m,n) the
/// element is P_W / Deg_chi whichever formula is requested.
inline LaurentPoly schur_element(const CharLabel& lab, SchurFormula formula = SchurFormula::chlouveraki) {
    if (lab.group.kind() == GroupKind::Gmmn) return exact_div(invariants(lab.group).poincare, generic_degree(lab));
    detail::require_gm1n(lab.group, "schur_element");
    return formula == SchurFormula::chlouveraki ? detail::schur_chlouveraki(lab) : detail::schur_mathas(lab);
}

struct CharData {
    CharLabel label;
    LaurentPoly feg;
    LaurentPoly deg;
    LaurentPoly schur;
    BigInt dim;
    int a = 0;
    int A = 0;
    int b = 0;
    int B = 0;
    int h_char = 0;
    long long content_c = 0;
};

/// All invariants of one character, cross-validated; a mismatch throws ConsistencyFailure.
inline CharData char_data(const CharLabel& lab) {
    const GroupSpec& g = lab.group;
    const GroupInvariants inv = invariants(g);
    CharData d{lab, fake_degree(lab), generic_degree(lab), LaurentPoly(), dimension(lab)};
    const std::string who = g.name() + " " + lab.to_string();
    if (d.deg.is_zero() || d.deg.low_degree() < 0)
        throw ConsistencyFailure("generic degree of " + who + " is not a polynomial");
    if (g.kind() == GroupKind::Gm1n) {
        d.schur = schur_element(lab, SchurFormula::chlouveraki);
        if (d.schur * d.deg != inv.poincare)
            throw ConsistencyFailure("symbol generic degree of " + who + " differs from P_W / S_chi");
    } else {
        d.schur = exact_div(inv.poincare, d.deg);
    }
    const LaurentPoly dual_feg = fake_degree(dual_label(lab));
    d.a = d.deg.low_degree();
    d.A = d.deg.high_degree();
    d.b = dual_feg.low_degree();
    d.B = dual_feg.high_degree();
    d.h_char = d.a + d.A;
    d.content_c = inv.num_reflections - d.h_char;

    const Cyclotomic dimc(Rational(d.dim));
    if (d.feg.value_at_one() != dimc || d.deg.value_at_one() != dimc)
        throw ConsistencyFailure("Feg(1) or Deg(1) of " + who + " differs from the dimension");
    const Cyclotomic via_trace = (d.feg.derivative_at_one() + dual_feg.derivative_at_one()) / dimc;
    if (via_trace != Cyclotomic(d.h_char))
        throw ConsistencyFailure("h_chi of " + who + ": a + A = " + std::to_string(d.h_char) +
                                 " but (N(chi) + N(chi*)) / chi(1) = " + via_trace.to_string());
    return d;
}

namespace detail {
inline std::mutex& table_mutex() {
    static std::mutex mu;
    return mu;
}
inline std::map<std::string, std::shared_ptr<const std::vector<CharData>>>& table_cache() {
    static std::map<std::string, std::shared_ptr<const std::vector<CharData>>> cache;
    return cache;
}
}  // namespace detail

/// CharData for every label of g (memoized per group, thread-safe).
inline std::shared_ptr<const std::vector<CharData>> char_table(const GroupSpec& g) {
    {
        std::lock_guard<std::mutex> lock(detail::table_mutex());
        auto it = detail::table_cache().find(g.name());
        if (it != detail::table_cache().end()) return it->second;
    }
    auto table = std::make_shared<std::vector<CharData>>();
    for (const auto& lab : all_labels(g)) table->push_back(char_data(lab));
    // exterior twists: h_{k,p} = k h
    const int h = invariants(g).coxeter_number;
    for (int p = 1; p < h; ++p) {
        if (std::gcd(p, h) != 1) continue;
        for (int k = 0; k <= g.n(); ++k) {
            const CharLabel lab = exterior_twist_label(g, k, p);
            for (const auto& d : *table)
                if (d.label == lab && d.h_char != k * h)
                    throw ConsistencyFailure("h of exterior twist " + lab.to_string() + " is " + std::to_string(d.h_char) +
                                             ", expected " + std::to_string(k * h));
        }
    }
    std::lock_guard<std::mutex> lock(detail::table_mutex());
    return detail::table_cache().emplace(g.name(), std::move(table)).first->second;
}

inline const CharData& find_char(const std::vector<CharData>& table, const CharLabel& lab) {
    for (const auto& d : table)
        if (d.label == lab) return d;
    throw InvalidArgument("label " + lab.to_string() + " not found");
}

}  // namespace spetses
