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

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace spetses {

using BigInt = mpz_class;
using Rational = mpq_class;

/// a/b in canonical form (b != 0).
inline Rational ratio(long long a, long long b) {
    if (b == 0) throw DivisionByZero();
    Rational r(static_cast<long>(a), static_cast<long>(b));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

/// Non-negative residue of a modulo n (n > 0).
inline long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long lcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// C(x, 2) for any integer x, i.e. x(x-1)/2; used by the q-power shifts,
/// whose arguments can be zero or negative.
inline long long choose2(long long x) { return x * (x - 1) / 2; }

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace spetses
