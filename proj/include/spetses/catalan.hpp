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

#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "degrees.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "group.hpp"
#include "laurent.hpp"
#include "mpartition.hpp"

namespace spetses {

inline void require_coprime(const GroupSpec& g, long long p) {
    const int h = invariants(g).coxeter_number;
    if (p < 1) throw InvalidArgument("p must be positive, got " + std::to_string(p));
    if (std::gcd(mod(p, h), static_cast<long long>(h)) != 1)
        throw InvalidArgument("p = " + std::to_string(p) + " is not coprime to h = " + std::to_string(h));
}

/// Cat_p(W) = prod (p + (p e_i mod h)) / d_i.
inline Rational catalan(const GroupSpec& g, long long p) {
    require_coprime(g, p);
    const auto inv = invariants(g);
    Rational r = 1;
    for (std::size_t i = 0; i < inv.degrees.size(); ++i)
        r *= ratio(p + mod(p * inv.exponents[i], inv.coxeter_number), inv.degrees[i]);
    return r;
}

/// Cat_p(W; q) = prod [p + (p e_i mod h)]_q / [d_i]_q.
inline LaurentPoly q_catalan(const GroupSpec& g, long long p) {
    require_coprime(g, p);
    const auto inv = invariants(g);
    LaurentPoly num(1);
    for (int e : inv.exponents) num *= q_integer(static_cast<int>(p + mod(p * e, inv.coxeter_number)));
    return exact_div(num, inv.poincare);
}

/// q^{-np} (1 - q)^n Cat_p(W; q)
inline LaurentPoly main_closed_form(const GroupSpec& g, long long p) {
    const int n = g.rank();
    return (pow(LaurentPoly(1) - LaurentPoly::q_power(1), n) * q_catalan(g, p)).shifted(static_cast<int>(-n * p));
}

namespace detail {
inline void require_trace_group(const GroupSpec& g) {
    if (!g.is_imprimitive()) throw InvalidArgument("trace sums are available for G(m,1,n) and G(m,m,n) only");
}

/// Divides a y-polynomial (y^h = q) by P_W(q) and collapses it to a polynomial in q.
inline LaurentPoly collapse(const GroupSpec& g, const LaurentPoly& sum_y, int h) {
    const LaurentPoly pw = invariants(g).poincare.with_root_order(h);
    const LaurentPoly quotient = exact_div(sum_y, pw);
    if (!quotient.is_integral())
        throw ConsistencyFailure(g.name() + ": trace sum has fractional powers of q: " + quotient.to_string());
    return quotient.to_integral();
}
}  // namespace detail

/// (1/P_W) sum_chi y^{(h_chi - nh)p} Feg_chi(zeta_h^p) Deg_chi(y^h), collapsed to a polynomial in q.
inline LaurentPoly trace_sum(const GroupSpec& g, long long p) {
    detail::require_trace_group(g);
    require_coprime(g, p);
    const int h = invariants(g).coxeter_number;
    const int n = g.rank();
    LaurentPoly sum;
    for (const auto& d : *char_table(g)) {
        const Cyclotomic c = eval_at_root(d.feg, h, p);
        if (c.is_zero()) continue;
        const long long f = (static_cast<long long>(d.h_char) - static_cast<long long>(n) * h) * p;
        sum += (d.deg.with_root_order(h) * c).shifted(static_cast<int>(f));
    }
    return detail::collapse(g, sum, h);
}

/// Same sum with the roles of Feg and Deg exchanged: (1/P_W) sum y^f Feg_chi(q) Deg_chi(zeta_h^p).
inline LaurentPoly trace_sum_swapped(const GroupSpec& g, long long p) {
    detail::require_trace_group(g);
    require_coprime(g, p);
    const int h = invariants(g).coxeter_number;
    const int n = g.rank();
    LaurentPoly sum;
    for (const auto& d : *char_table(g)) {
        const Cyclotomic c = eval_at_root(d.deg, h, p);
        if (c.is_zero()) continue;
        const long long f = (static_cast<long long>(d.h_char) - static_cast<long long>(n) * h) * p;
        sum += (d.feg.with_root_order(h) * c).shifted(static_cast<int>(f));
    }
    return detail::collapse(g, sum, h);
}

/// Residues in [1, 3h] coprime to h.
inline std::vector<long long> default_p_values(const GroupSpec& g) {
    const int h = invariants(g).coxeter_number;
    std::vector<long long> ps;
    for (long long p = 1; p <= 3LL * h; ++p)
        if (std::gcd(p, static_cast<long long>(h)) == 1) ps.push_back(p);
    return ps;
}

inline VerificationReport verify_main(const GroupSpec& g, long long p) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r{g.name(), p, "main", false, LaurentPoly(), main_closed_form(g, p), std::nullopt, 0};
    try {
        r.lhs = trace_sum(g, p);
        r.equal = r.lhs == r.rhs;
        r.witness = detail::first_difference(r.lhs, r.rhs);
    } catch (const InexactDivision& e) {
        r.witness = e.what();
    } catch (const ConsistencyFailure& e) {
        r.witness = e.what();
    }
    r.ms = detail::elapsed_ms(start);
    return r;
}

inline std::vector<VerificationReport> verify_main(const GroupSpec& g, const std::vector<long long>& ps) {
    std::vector<VerificationReport> out;
    for (long long p : ps) out.push_back(verify_main(g, p));
    return out;
}

/// Deg_chi(zeta_h^p) over all labels. lhs and rhs encode the values as
/// polynomials in a label index L (coefficient of L^i is the value at label i).
inline VerificationReport verify_vanishing(const GroupSpec& g, long long p) {
    detail::require_trace_group(g);
    require_coprime(g, p);
    const auto start = std::chrono::steady_clock::now();
    const int h = invariants(g).coxeter_number;
    const auto table = char_table(g);
    std::vector<CharLabel> twists;
    for (int k = 0; k <= g.n(); ++k) twists.push_back(exterior_twist_label(g, k, p));
    VerificationReport r{g.name(), p, "vanishing", true, LaurentPoly(), LaurentPoly(), std::nullopt, 0};
    for (std::size_t i = 0; i < table->size(); ++i) {
        const CharData& d = (*table)[i];
        const Cyclotomic value = eval_at_root(d.deg, h, p);
        Cyclotomic expected(0);
        for (int k = 0; k <= g.n(); ++k)
            if (twists[static_cast<std::size_t>(k)] == d.label) expected = Cyclotomic(k % 2 == 0 ? 1 : -1);
        r.lhs += LaurentPoly::monomial(value, static_cast<int>(i), 1, "L");
        r.rhs += LaurentPoly::monomial(expected, static_cast<int>(i), 1, "L");
        if (value != expected && r.equal) {
            r.equal = false;
            r.witness = d.label.to_string() + ": " + value.to_string() + " vs " + expected.to_string();
        }
    }
    r.ms = detail::elapsed_ms(start);
    return r;
}

/// sum_chi y^{(nh - h_chi)p} chi(1) Feg_chi(zeta_h^{-p}) against (q^p - 1)^n.
inline VerificationReport verify_parking(const GroupSpec& g, long long p) {
    detail::require_trace_group(g);
    require_coprime(g, p);
    const auto start = std::chrono::steady_clock::now();
    const int h = invariants(g).coxeter_number;
    const int n = g.rank();
    LaurentPoly sum;
    for (const auto& d : *char_table(g)) {
        const long long f = (static_cast<long long>(n) * h - d.h_char) * p;
        const Cyclotomic c = eval_at_root(d.feg, h, -p) * Cyclotomic(Rational(d.dim));
        sum += LaurentPoly::monomial(c, static_cast<int>(f), h);
    }
    VerificationReport r{g.name(), p, "parking", false, LaurentPoly(), pow(LaurentPoly::q_power(static_cast<int>(p)) - 1, n), std::nullopt, 0};
    if (sum.is_integral()) {
        r.lhs = sum.to_integral();
        r.equal = r.lhs == r.rhs;
        r.witness = detail::first_difference(r.lhs, r.rhs);
    } else {
        r.lhs = sum;
        r.witness = "fractional powers of q in " + sum.to_string();
    }
    r.ms = detail::elapsed_ms(start);
    return r;
}

}  // namespace spetses
