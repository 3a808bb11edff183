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
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace spetses {

enum class GroupKind { Gm1n, Gmmn, TypeA };

/// One of the supported irreducible reflection groups: G(m,1,n), G(m,m,n),
/// or the symmetric group S_n acting on its (n-1)-dimensional reflection
/// representation (type A_{n-1}, Catalan computations only).
class GroupSpec {
public:
    static GroupSpec gm1n(int m, int n) {
        if (m < 2 || n < 1)
            throw InvalidGroup("G(" + std::to_string(m) + ",1," + std::to_string(n) +
                               ") requires m >= 2 and n >= 1");
        return GroupSpec(GroupKind::Gm1n, m, n);
    }

    static GroupSpec gmmn(int m, int n) {
        if (m < 2 || n < 2)
            throw InvalidGroup("G(" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(n) +
                               ") requires m >= 2 and n >= 2");
        if (m == 2 && n == 2) throw InvalidGroup("G(2,2,2) is not irreducible");
        return GroupSpec(GroupKind::Gmmn, m, n);
    }

    /// S_n, i.e. type A_{n-1}.
    static GroupSpec type_a(int n) {
        if (n < 2) throw InvalidGroup("type A_" + std::to_string(n - 1) + " requires n >= 2");
        return GroupSpec(GroupKind::TypeA, 1, n);
    }

    /// Parses "G(m,1,n)", "G(m,m,n)" or "A<k>" (whitespace-insensitive).
    static GroupSpec parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        auto fail = [&](const std::string& why) -> InvalidGroup {
            return InvalidGroup("cannot parse '" + text + "': " + why);
        };
        if (s.empty()) throw fail("empty group string");
        if (s[0] == 'A' || s[0] == 'a') {
            const int k = parse_int(s.substr(1), text);
            return type_a(k + 1);
        }
        if ((s[0] != 'G' && s[0] != 'g') || s.size() < 3 || s[1] != '(' || s.back() != ')')
            throw fail("expected G(m,p,n) or A<k>");
        const std::string body = s.substr(2, s.size() - 3);
        std::vector<int> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            parts.push_back(parse_int(body.substr(start, comma - start), text));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts.size() != 3) throw fail("expected three parameters");
        const int m = parts[0], p = parts[1], n = parts[2];
        if (m < 1 || p < 1 || n < 1 || m % p != 0) throw fail("p must divide m and all parameters be positive");
        if (m == 1) throw InvalidGroup("G(1,1," + std::to_string(n) + ") is not irreducible; use A" + std::to_string(n - 1));
        if (p == 1) return gm1n(m, n);
        if (p == m) return gmmn(m, n);
        throw InvalidGroup("G(m,p,n) with 1 < p < m is not spetsial and is not supported");
    }

    GroupKind kind() const { return kind_; }
    int m() const { return m_; }
    /// The n of G(m,p,n), or of S_n for type A.
    int n() const { return n_; }
    /// Dimension of the reflection representation.
    int rank() const { return kind_ == GroupKind::TypeA ? n_ - 1 : n_; }

    bool is_imprimitive() const { return kind_ != GroupKind::TypeA; }

    std::string name() const {
        switch (kind_) {
            case GroupKind::Gm1n:
                return "G(" + std::to_string(m_) + ",1," + std::to_string(n_) + ")";
            case GroupKind::Gmmn:
                return "G(" + std::to_string(m_) + "," + std::to_string(m_) + "," + std::to_string(n_) + ")";
            case GroupKind::TypeA:
                return "A" + std::to_string(n_ - 1);
        }
        return {};
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_ && a.n_ == b.n_;
    }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

private:
    GroupSpec(GroupKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}

    static int parse_int(const std::string& s, const std::string& text) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InvalidGroup("cannot parse '" + text + "': '" + s + "' is not a positive integer");
        if (s.size() > 6) throw InvalidGroup("cannot parse '" + text + "': parameter too large");
        return std::stoi(s);
    }

    GroupKind kind_;
    int m_;
    int n_;
};

struct GroupInvariants {
    std::vector<int> degrees;    // ascending
    std::vector<int> codegrees;  // d_i* = h - d_i, descending
    std::vector<int> exponents;  // d_i - 1
    int coxeter_number = 0;
    long long num_reflections = 0;
    long long num_hyperplanes = 0;
    BigInt order;
    LaurentPoly poincare;  // prod [d_i]_q
};

inline GroupInvariants invariants(const GroupSpec& g) {
    GroupInvariants inv;
    const long long m = g.m();
    const long long n = g.n();
    switch (g.kind()) {
        case GroupKind::Gm1n:
            for (int i = 1; i <= n; ++i) inv.degrees.push_back(static_cast<int>(m) * i);
            inv.num_hyperplanes = n + m * n * (n - 1) / 2;
            break;
        case GroupKind::Gmmn:
            for (int i = 1; i < n; ++i) inv.degrees.push_back(static_cast<int>(m) * i);
            inv.degrees.push_back(static_cast<int>(n));
            inv.num_hyperplanes = m * n * (n - 1) / 2;
            break;
        case GroupKind::TypeA:
            for (int i = 2; i <= n; ++i) inv.degrees.push_back(i);
            inv.num_hyperplanes = n * (n - 1) / 2;
            break;
    }
    std::sort(inv.degrees.begin(), inv.degrees.end());
    inv.coxeter_number = inv.degrees.back();
    inv.order = 1;
    inv.poincare = LaurentPoly(1);
    for (int d : inv.degrees) {
        inv.exponents.push_back(d - 1);
        inv.num_reflections += d - 1;
        inv.order *= d;
        inv.poincare *= q_integer(d);
    }
    for (auto it = inv.degrees.rbegin(); it != inv.degrees.rend(); ++it)
        inv.codegrees.push_back(inv.coxeter_number - *it);
    std::sort(inv.codegrees.rbegin(), inv.codegrees.rend());
    if ((inv.num_reflections + inv.num_hyperplanes) != static_cast<long long>(inv.coxeter_number) * g.rank())
        throw ConsistencyFailure("Coxeter number of " + g.name() + " disagrees with (|R|+|A|)/n");
    return inv;
}

/// Monomial matrix over mu_m: column j maps e_j to zeta_m^{exps[j]} e_{perm[j]}.
struct MonomialMatrix {
    int m = 1;
    std::vector<int> perm;
    std::vector<int> exps;

    static MonomialMatrix identity(int m, int n) {
        MonomialMatrix r{m, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 0)};
        std::iota(r.perm.begin(), r.perm.end(), 0);
        return r;
    }

    int size() const { return static_cast<int>(perm.size()); }

    /// (*this) * o, i.e. apply o first.
    MonomialMatrix operator*(const MonomialMatrix& o) const {
        MonomialMatrix r{m, std::vector<int>(perm.size()), std::vector<int>(perm.size())};
        for (std::size_t j = 0; j < perm.size(); ++j) {
            const auto mid = static_cast<std::size_t>(o.perm[j]);
            r.perm[j] = perm[mid];
            r.exps[j] = static_cast<int>(mod(o.exps[j] + exps[mid], m));
        }
        return r;
    }

    MonomialMatrix inverse() const {
        MonomialMatrix r{m, std::vector<int>(perm.size()), std::vector<int>(perm.size())};
        for (std::size_t j = 0; j < perm.size(); ++j) {
            const auto i = static_cast<std::size_t>(perm[j]);
            r.perm[i] = static_cast<int>(j);
            r.exps[i] = static_cast<int>(mod(-exps[j], m));
        }
        return r;
    }

    /// Dimension of the fixed space: cycles of perm whose exponent sum is 0 mod m.
    int fixed_space_dimension() const {
        std::vector<bool> seen(perm.size(), false);
        int dim = 0;
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s]) continue;
            long long total = 0;
            for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = true;
                total += exps[j];
            }
            if (mod(total, m) == 0) ++dim;
        }
        return dim;
    }

    Cyclotomic trace() const {
        Cyclotomic t;
        for (std::size_t j = 0; j < perm.size(); ++j)
            if (perm[j] == static_cast<int>(j)) t += cyclo(m, exps[j]);
        return t;
    }

    std::vector<std::vector<Cyclotomic>> to_dense() const {
        std::vector<std::vector<Cyclotomic>> d(perm.size(), std::vector<Cyclotomic>(perm.size()));
        for (std::size_t j = 0; j < perm.size(); ++j)
            d[static_cast<std::size_t>(perm[j])][j] = cyclo(m, exps[j]);
        return d;
    }

    friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
        return a.m == b.m && a.perm == b.perm && a.exps == b.exps;
    }
    friend bool operator<(const MonomialMatrix& a, const MonomialMatrix& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.exps < b.exps;
    }
};

struct Reflection {
    MonomialMatrix matrix;
    int order = 2;
    /// "diagonal" (hyperplanes x_i = 0, e_C = m) or "transposition"
    /// (hyperplanes x_i = zeta^k x_j, e_C = 2).
    std::string hyperplane_class;
};

inline constexpr long long kDefaultReflectionBound = 100000;

inline void check_element_bound(const GroupSpec& g, long long bound) {
    long long size = factorial(g.n());
    for (int i = 0; i < g.n() && size <= bound; ++i) size *= g.m();
    if (size > bound)
        throw BoundExceeded(g.name() + ": m^n n! exceeds " + std::to_string(bound));
}

/// All reflections of G(m,1,n) or G(m,m,n) as monomial matrices.
inline std::vector<Reflection> enumerate_reflections(const GroupSpec& g, long long bound = kDefaultReflectionBound) {
    if (!g.is_imprimitive()) throw InvalidArgument("reflection enumeration supports G(m,1,n) and G(m,m,n) only");
    check_element_bound(g, bound);
    const int m = g.m();
    const int n = g.n();
    std::vector<Reflection> out;
    if (g.kind() == GroupKind::Gm1n) {
        for (int i = 0; i < n; ++i)
            for (int k = 1; k < m; ++k) {
                MonomialMatrix r = MonomialMatrix::identity(m, n);
                r.exps[static_cast<std::size_t>(i)] = k;
                out.push_back({r, m / std::gcd(k, m), "diagonal"});
            }
    }
    // e_i -> zeta^k e_j, e_j -> zeta^{-k} e_i
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < m; ++k) {
                MonomialMatrix r = MonomialMatrix::identity(m, n);
                r.perm[static_cast<std::size_t>(i)] = j;
                r.perm[static_cast<std::size_t>(j)] = i;
                r.exps[static_cast<std::size_t>(i)] = k;
                r.exps[static_cast<std::size_t>(j)] = static_cast<int>(mod(-k, m));
                out.push_back({r, 2, "transposition"});
            }
    return out;
}

/// Every element of G(m,1,n) or G(m,m,n) as a monomial matrix.
inline std::vector<MonomialMatrix> enumerate_elements(const GroupSpec& g, long long bound = kDefaultReflectionBound) {
    if (!g.is_imprimitive()) throw InvalidArgument("element enumeration supports G(m,1,n) and G(m,m,n) only");
    check_element_bound(g, bound);
    const int m = g.m();
    const int n = g.n();
    std::vector<MonomialMatrix> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        while (true) {
            const long long total = std::accumulate(exps.begin(), exps.end(), 0LL);
            if (g.kind() == GroupKind::Gm1n || mod(total, m) == 0) out.push_back({m, perm, exps});
            int pos = 0;
            while (pos < n && ++exps[static_cast<std::size_t>(pos)] == m) exps[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace spetses
