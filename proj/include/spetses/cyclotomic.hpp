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
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace spetses {

namespace detail {

// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
inline const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::recursive_mutex mutex;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long long>& divisor = cyclotomic_polynomial(d);
        const int dd = static_cast<int>(divisor.size()) - 1;
        const int dp = static_cast<int>(poly.size()) - 1;
        std::vector<long long> quotient(static_cast<std::size_t>(dp - dd + 1), 0);
        for (int k = dp; k >= dd; --k) {
            const long long c = poly[static_cast<std::size_t>(k)];
            quotient[static_cast<std::size_t>(k - dd)] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) poly[static_cast<std::size_t>(k - dd + j)] -= c * divisor[static_cast<std::size_t>(j)];
        }
        poly = std::move(quotient);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta_N, ..., zeta_N^(phi(N)-1), i.e. as a polynomial reduced modulo
/// the N-th cyclotomic polynomial.
///
/// Elements of different conductors combine after lifting both to the lcm
/// of the conductors. Results are never demoted to a smaller conductor.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}
    Cyclotomic(long long value) : conductor_(1), coeffs_{Rational(static_cast<long>(value))} {}  // NOLINT
    Cyclotomic(int value) : Cyclotomic(static_cast<long long>(value)) {}       // NOLINT
    Cyclotomic(Rational value) : conductor_(1), coeffs_{std::move(value)} {}   // NOLINT

    /// Builds an element from power-basis coefficients of arbitrary length,
    /// reducing modulo Phi_N.
    static Cyclotomic from_coefficients(int conductor, std::vector<Rational> coeffs) {
        if (conductor < 1) throw InvalidArgument("conductor must be positive");
        Cyclotomic r;
        r.conductor_ = conductor;
        r.coeffs_ = reduce(std::move(coeffs), conductor);
        return r;
    }

    /// zeta_N^k.
    static Cyclotomic root_of_unity(int n, long long k) {
        if (n < 1) throw InvalidArgument("root of unity order must be positive");
        std::vector<Rational> c(static_cast<std::size_t>(n));
        c[static_cast<std::size_t>(mod(k, n))] = 1;
        return from_coefficients(n, std::move(c));
    }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational: " + to_string());
        return coeffs_[0];
    }

    /// The same element viewed in Q(zeta_M); M must be a multiple of the conductor.
    Cyclotomic lifted(int m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0)
            throw InvalidArgument("cannot lift conductor " + std::to_string(conductor_) + " to " +
                                  std::to_string(m));
        const int step = m / conductor_;
        std::vector<Rational> c(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (sgn(coeffs_[k]) != 0) c[k * static_cast<std::size_t>(step)] = coeffs_[k];
        return from_coefficients(m, std::move(c));
    }

    /// Image under the field automorphism zeta_N -> zeta_N^p (gcd(p, N) = 1).
    Cyclotomic galois(long long p) const {
        if (std::gcd(mod(p, conductor_), static_cast<long long>(conductor_)) != 1 && conductor_ > 1)
            throw InvalidArgument("Galois exponent must be coprime to the conductor");
        std::vector<Rational> c(static_cast<std::size_t>(conductor_));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (sgn(coeffs_[k]) != 0)
                c[static_cast<std::size_t>(mod(static_cast<long long>(k) * p, conductor_))] += coeffs_[k];
        return from_coefficients(conductor_, std::move(c));
    }

    Cyclotomic conj() const { return galois(-1); }

    /// Product of all Galois conjugates; always rational.
    Rational norm() const {
        Cyclotomic prod(1);
        for (int p = 1; p < std::max(conductor_, 2); ++p)
            if (std::gcd(p, conductor_) == 1) prod *= galois(p);
        return prod.rational_value();
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
        // a^{-1} = (prod of the other conjugates) / N(a)
        Cyclotomic others(1);
        for (int p = 2; p < conductor_; ++p)
            if (std::gcd(p, conductor_) == 1) others *= galois(p);
        const Rational n = (others * *this).rational_value();
        return others * Cyclotomic(Rational(1 / n));
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        if (o.conductor_ == 1) {
            coeffs_[0] += o.coeffs_[0];
            return *this;
        }
        align(o);
        if (o.conductor_ == conductor_) {
            for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        } else {
            const Cyclotomic l = o.lifted(conductor_);
            for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += l.coeffs_[k];
        }
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        if (o.conductor_ == 1) {
            for (auto& c : coeffs_) c *= o.coeffs_[0];
            return *this;
        }
        if (conductor_ == 1) {
            const Rational s = coeffs_[0];
            *this = o;
            for (auto& c : coeffs_) c *= s;
            return *this;
        }
        align(o);
        Cyclotomic lifted_rhs;
        const Cyclotomic& l = o.conductor_ == conductor_ ? o : (lifted_rhs = o.lifted(conductor_));
        const std::size_t d = coeffs_.size();
        std::vector<Rational> prod(2 * d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(l.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * l.coeffs_[j];
        }
        coeffs_ = reduce(std::move(prod), conductor_);
        return *this;
    }

    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        const int l = static_cast<int>(spetses::lcm(a.conductor_, b.conductor_));
        return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Text form with E(N)^k tokens for zeta_N^k, e.g. "E(12)^2+3/2*E(12)^3-1".
    std::string to_string() const {
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (sgn(c) == 0) continue;
            if (sgn(c) < 0)
                out += "-";
            else if (!out.empty())
                out += "+";
            const Rational a = abs(c);
            if (k == 0) {
                out += a.get_str();
                continue;
            }
            if (a != 1) out += a.get_str() + "*";
            out += "E(" + std::to_string(conductor_) + ")";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

private:
    void align(const Cyclotomic& o) {
        if (o.conductor_ == conductor_ || conductor_ % o.conductor_ == 0) return;
        *this = lifted(static_cast<int>(spetses::lcm(conductor_, o.conductor_)));
    }

    static std::vector<Rational> reduce(std::vector<Rational> poly, int n) {
        const auto& phi = detail::cyclotomic_polynomial(n);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = poly.size(); k-- > deg;) {
            if (sgn(poly[k]) == 0) continue;
            const Rational c = poly[k];
            for (std::size_t j = 0; j <= deg; ++j)
                if (phi[j] != 0) poly[k - deg + j] -= c * static_cast<long>(phi[j]);
        }
        poly.resize(deg);
        for (auto& c : poly) c.canonicalize();
        return poly;
    }

    int conductor_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^k in canonical form.
inline Cyclotomic cyclo(int n, long long k) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace spetses
