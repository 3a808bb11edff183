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
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace spetses {

/// Laurent polynomial with cyclotomic coefficients.
///
/// Exponents are integers counting powers of y, where y^D = var and D is the
/// root order. With D = 1 this is an ordinary Laurent polynomial in var. The
/// term map never holds a zero coefficient.
class LaurentPoly {
public:
    using Terms = std::map<int, Cyclotomic>;

    LaurentPoly() = default;
    LaurentPoly(Cyclotomic c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(0, std::move(c));
    }
    LaurentPoly(long long c) : LaurentPoly(Cyclotomic(c)) {}  // NOLINT
    LaurentPoly(int c) : LaurentPoly(Cyclotomic(c)) {}        // NOLINT

    static LaurentPoly monomial(Cyclotomic c, int exponent, int root_order = 1, std::string var = "q") {
        LaurentPoly p;
        p.var_ = std::move(var);
        p.root_order_ = check_root_order(root_order);
        if (!c.is_zero()) p.terms_.emplace(exponent, std::move(c));
        return p;
    }

    /// var^e (with D = 1).
    static LaurentPoly q_power(int e) { return monomial(Cyclotomic(1), e); }

    static LaurentPoly from_terms(Terms terms, int root_order = 1, std::string var = "q") {
        LaurentPoly p;
        p.var_ = std::move(var);
        p.root_order_ = check_root_order(root_order);
        for (auto& [e, c] : terms)
            if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
        return p;
    }

    const std::string& var() const { return var_; }
    int root_order() const { return root_order_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    std::size_t term_count() const { return terms_.size(); }

    int low_degree() const {
        if (is_zero()) throw InvalidArgument("degree of the zero polynomial");
        return terms_.begin()->first;
    }
    int high_degree() const {
        if (is_zero()) throw InvalidArgument("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }

    Cyclotomic coefficient(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Cyclotomic() : it->second;
    }

    /// True when every coefficient lies in Q.
    bool has_rational_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_rational()) return false;
        return true;
    }

    /// True when all exponents are multiples of the root order, so the value
    /// is a genuine Laurent polynomial in var.
    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (e % root_order_ != 0) return false;
        return true;
    }

    /// Multiplication by y^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        r.var_ = var_;
        r.root_order_ = root_order_;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    /// Same value expressed with a finer root order D (a multiple of the current one).
    LaurentPoly with_root_order(int d) const {
        if (d % root_order_ != 0)
            throw InvalidArgument("root order " + std::to_string(d) + " is not a multiple of " +
                                  std::to_string(root_order_));
        const int scale = d / root_order_;
        LaurentPoly r;
        r.var_ = var_;
        r.root_order_ = d;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * scale, c);
        return r;
    }

    /// Collapses to root order 1; every exponent must be divisible by D.
    LaurentPoly to_integral() const {
        if (!is_integral())
            throw InvalidArgument("polynomial has fractional powers of " + var_ + ": " + to_string());
        LaurentPoly r;
        r.var_ = var_;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e / root_order_, c);
        return r;
    }

    /// Value at var = 1.
    Cyclotomic value_at_one() const {
        Cyclotomic s;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Derivative with respect to y, evaluated at y = 1.
    Cyclotomic derivative_at_one() const {
        Cyclotomic s;
        for (const auto& [e, c] : terms_) s += c * Cyclotomic(e);
        return s;
    }

    /// Applies a field automorphism zeta_N -> zeta_N^p to every coefficient.
    LaurentPoly galois(long long p) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = c.galois(p);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.var_ = a.var_;
        r.root_order_ = a.root_order_;
        r.adopt(b, a);
        if (a.is_zero() || b.is_zero()) return r;
        if (a.terms_.size() == 1 && a.terms_.begin()->second == Cyclotomic(1)) {
            LaurentPoly s = b.shifted(a.terms_.begin()->first);
            s.var_ = r.var_;
            s.root_order_ = r.root_order_;
            return s;
        }
        const int lo = a.low_degree() + b.low_degree();
        const int hi = a.high_degree() + b.high_degree();
        std::vector<Cyclotomic> acc(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (!acc[k].is_zero()) r.terms_.emplace_hint(r.terms_.end(), static_cast<int>(k) + lo, std::move(acc[k]));
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.root_order_ != b.root_order_) {
            const int d = static_cast<int>(spetses::lcm(a.root_order_, b.root_order_));
            return a.with_root_order(d) == b.with_root_order(d);
        }
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "(E(3)+1)*q^2+q^-1"; fractional exponents
    /// print as q^(a/b).
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string coeff;
            bool negative = false;
            if (c.is_rational()) {
                Rational v = c.rational_value();
                negative = sgn(v) < 0;
                v = abs(v);
                coeff = v.get_str();
            } else {
                coeff = "(" + c.to_string() + ")";
            }
            if (negative)
                out += "-";
            else if (!out.empty())
                out += "+";
            const std::string power = power_string(e);
            if (power.empty()) {
                out += coeff;
            } else {
                if (coeff != "1") out += coeff + "*";
                out += power;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    static int check_root_order(int d) {
        if (d < 1) throw InvalidArgument("root order must be positive");
        return d;
    }

    // Constants (including zero) carry no variable information of their own.
    void adopt(const LaurentPoly& o) { adopt(o, *this); }

    // Sets var and root order from whichever of `o`, `self` is non-constant.
    void adopt(const LaurentPoly& o, const LaurentPoly& self) {
        if (o.is_constant()) {
            var_ = self.var_;
            root_order_ = self.root_order_;
            return;
        }
        if (self.is_constant()) {
            var_ = o.var_;
            root_order_ = o.root_order_;
            return;
        }
        var_ = self.var_;
        root_order_ = self.root_order_;
        if (var_ != o.var_ || root_order_ != o.root_order_)
            throw InvalidArgument("incompatible polynomials: variable " + var_ + "^(1/" +
                                  std::to_string(root_order_) + ") vs " + o.var_ + "^(1/" +
                                  std::to_string(o.root_order_) + ")");
    }

    std::string power_string(int e) const {
        if (e == 0) return "";
        const int g = std::gcd(std::abs(e), root_order_);
        const int num = e / g;
        const int den = root_order_ / g;
        if (den == 1) return num == 1 ? var_ : var_ + "^" + std::to_string(num);
        return var_ + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }

    std::string var_ = "q";
    int root_order_ = 1;
    Terms terms_;
};

/// Exact quotient num / den in the Laurent ring; throws InexactDivision when
/// den does not divide num.
inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return num;
    int root_order = num.root_order();
    std::string var = num.var();
    if (num.is_constant()) {
        root_order = den.root_order();
        var = den.var();
    } else if (!den.is_constant() && (num.root_order() != den.root_order() || num.var() != den.var())) {
        throw InvalidArgument("exact_div: incompatible polynomials");
    }

    const int d_lo = den.low_degree();
    const int d_hi = den.high_degree();
    const int n_lo = num.low_degree();
    const int n_hi = num.high_degree();
    if (n_hi - n_lo < d_hi - d_lo) throw InexactDivision(num.to_string() + " by " + den.to_string());

    std::vector<Cyclotomic> rem(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (const auto& [e, c] : num.terms()) rem[static_cast<std::size_t>(e - n_lo)] = c;
    std::vector<std::pair<int, Cyclotomic>> dterms(den.terms().begin(), den.terms().end());
    const Cyclotomic lead_inv = dterms.back().second.inverse();

    LaurentPoly::Terms quotient;
    for (int e = n_hi; e >= n_lo + (d_hi - d_lo); --e) {
        Cyclotomic& c = rem[static_cast<std::size_t>(e - n_lo)];
        if (c.is_zero()) continue;
        const Cyclotomic qc = c * lead_inv;
        const int shift = e - d_hi;
        for (const auto& [de, dc] : dterms) rem[static_cast<std::size_t>(de + shift - n_lo)] -= qc * dc;
        quotient.emplace(shift, qc);
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw InexactDivision(num.to_string() + " by " + den.to_string());
    return LaurentPoly::from_terms(std::move(quotient), root_order, var);
}

/// Value of f at y = zeta_N^k, where y is the polynomial's own variable
/// (y^D = var).
inline Cyclotomic eval_y_at_root(const LaurentPoly& f, int n, long long k) {
    if (n < 1) throw InvalidArgument("root of unity order must be positive");
    // group coefficients by the power of zeta they multiply
    std::map<long long, Cyclotomic> by_power;
    for (const auto& [e, c] : f.terms()) by_power[mod(k * e, n)] += c;
    Cyclotomic value;
    for (const auto& [j, c] : by_power) value += c * cyclo(n, j);
    return value;
}

/// Value of f at var = zeta_N^k. Rejects polynomials with fractional powers
/// of var; evaluate those in y with eval_y_at_root instead.
inline Cyclotomic eval_at_root(const LaurentPoly& f, int n, long long k) {
    if (!f.is_integral())
        throw InvalidArgument("cannot evaluate fractional powers of " + f.var() +
                              " at a root of unity without choosing a root for y");
    return eval_y_at_root(f.to_integral(), n, k);
}

/// [n]_q = (q^n - 1)/(q - 1) for n >= 0.
inline LaurentPoly q_integer(int n) {
    if (n < 0) throw InvalidArgument("q-integer of a negative number");
    LaurentPoly::Terms t;
    for (int i = 0; i < n; ++i) t.emplace(i, Cyclotomic(1));
    return LaurentPoly::from_terms(std::move(t));
}

/// c*q^a - d*q^b as a polynomial.
inline LaurentPoly binomial_term(const Cyclotomic& c, int a, const Cyclotomic& d, int b) {
    return LaurentPoly::monomial(c, a) - LaurentPoly::monomial(d, b);
}

inline LaurentPoly pow(const LaurentPoly& base, int k) {
    if (k < 0) throw InvalidArgument("negative power of a polynomial");
    LaurentPoly r(1);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace spetses
