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
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace spetses {

inline constexpr int kDefaultFiniteGroupBound = 120;

/// A finite group given by its multiplication table; elements are 0..N-1.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table, int bound = kDefaultFiniteGroupBound) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw InvalidArgument("empty multiplication table");
        if (n > bound) throw BoundExceeded("group order " + std::to_string(n) + " exceeds " + std::to_string(bound));
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n) throw InvalidArgument("multiplication table is not square");
            for (int x : row)
                if (x < 0 || x >= n) throw InvalidArgument("multiplication table entry out of range");
        }
        FiniteGroup g;
        g.table_ = std::move(table);
        g.identity_ = -1;
        for (int e = 0; e < n && g.identity_ < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
            if (ok) g.identity_ = e;
        }
        if (g.identity_ < 0) throw InvalidArgument("multiplication table has no identity");
        g.inverse_.assign(static_cast<std::size_t>(n), -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.table_[a][b] == g.identity_) g.inverse_[a] = b;
        for (int a = 0; a < n; ++a)
            if (g.inverse_[a] < 0 || g.table_[g.inverse_[a]][a] != g.identity_) throw InvalidArgument("element without inverse");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InvalidArgument("multiplication is not associative");
        return g;
    }

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^{-1}

    int power(int a, long long k) const {
        int r = identity_;
        for (long long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    int order(int a) const {
        int k = 1;
        for (int x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }

    std::vector<int> centralizer(int x) const {
        std::vector<int> c;
        for (int g = 0; g < size(); ++g)
            if (mul(g, x) == mul(x, g)) c.push_back(g);
        return c;
    }

    /// Conjugacy classes of G, each sorted, classes ordered by smallest element.
    std::vector<std::vector<int>> classes() const { return classes_within(all_elements()); }

    /// Conjugacy classes of the subgroup H (given as a list of elements) under H-conjugation.
    std::vector<std::vector<int>> classes_within(const std::vector<int>& H) const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(static_cast<std::size_t>(size()), false);
        for (int x : H) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            std::vector<int> cls;
            for (int h : H) {
                const int y = conj(h, x);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    cls.push_back(y);
                }
            }
            std::sort(cls.begin(), cls.end());
            out.push_back(std::move(cls));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> all_elements() const {
        std::vector<int> v(static_cast<std::size_t>(size()));
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

inline FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t));
}

/// S_n with elements in lexicographic order of permutations; (a*b)(i) = a(b(i)).
inline FiniteGroup symmetric_group(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
            t[a][b] = index.at(c);
        }
    return FiniteGroup::from_table(std::move(t));
}

/// Irreducible characters of a subgroup H as functions on G-elements
/// (value per element of H; entries outside H are unused).
struct CharacterTable {
    std::vector<int> subgroup;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<Cyclotomic>> values;  // values[i][c] = chi_i on class c
    std::map<int, int> class_of;                  // element -> class index

    const Cyclotomic& value(std::size_t chi, int element) const { return values[chi][static_cast<std::size_t>(class_of.at(element))]; }
};

namespace detail {

inline long long powmod(long long b, long long e, long long p) {
    long long r = 1;
    b = mod(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline long long invmod(long long a, long long p) { return powmod(mod(a, p), p - 2, p); }

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Basis of the null space of an r x c matrix over F_p (columns of the result).
inline std::vector<std::vector<long long>> nullspace_mod(std::vector<std::vector<long long>> a, long long p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const long long iv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = x * iv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const long long f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<long long>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<long long> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = mod(-a[i][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Burnside-Dixon character table of the subgroup H of G, computed over F_p
/// and lifted to Q(zeta_e), e the exponent of H.
inline CharacterTable character_table(const FiniteGroup& G, const std::vector<int>& H) {
    using namespace detail;
    CharacterTable ct;
    ct.subgroup = H;
    ct.classes = G.classes_within(H);
    const std::size_t r = ct.classes.size();
    for (std::size_t c = 0; c < r; ++c)
        for (int x : ct.classes[c]) ct.class_of[x] = static_cast<int>(c);
    const long long order = static_cast<long long>(H.size());
    long long e = 1;
    for (int x : H) e = spetses::lcm(e, G.order(x));
    long long p = e + 1;
    while (!(is_prime(p) && p > order && p > 2 * static_cast<long long>(std::sqrt(static_cast<double>(order))) + 2)) p += e;

    // a[j][l][k] = #{x in C_j : x^{-1} z_k in C_l}
    std::vector<std::vector<std::vector<long long>>> a(r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            const int z = ct.classes[k][0];
            for (int x : ct.classes[j]) ++a[j][static_cast<std::size_t>(ct.class_of.at(G.mul(G.inv(x), z)))][k];
        }

    // split F_p^r into common eigenspaces of all A_j
    std::vector<std::vector<std::vector<long long>>> spaces;  // each: list of basis vectors
    {
        std::vector<std::vector<long long>> full;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<long long> v(r, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    for (std::size_t j = 0; j < r && spaces.size() < r; ++j) {
        std::vector<std::vector<std::vector<long long>>> next;
        for (const auto& W : spaces) {
            if (W.size() == 1) {
                next.push_back(W);
                continue;
            }
            std::size_t found = 0;
            for (long long lambda = 0; lambda < p && found < W.size(); ++lambda) {
                // (A_j - lambda) W c = 0
                std::vector<std::vector<long long>> m(r, std::vector<long long>(W.size(), 0));
                for (std::size_t l = 0; l < r; ++l)
                    for (std::size_t w = 0; w < W.size(); ++w) {
                        long long s = 0;
                        for (std::size_t k = 0; k < r; ++k) s += a[j][l][k] * W[w][k];
                        s -= lambda * W[w][l];
                        m[l][w] = mod(s, p);
                    }
                const auto ns = nullspace_mod(m, p);
                if (ns.empty()) continue;
                std::vector<std::vector<long long>> sub;
                for (const auto& c : ns) {
                    std::vector<long long> v(r, 0);
                    for (std::size_t w = 0; w < W.size(); ++w)
                        for (std::size_t k = 0; k < r; ++k) v[k] = mod(v[k] + c[w] * W[w][k], p);
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != W.size()) throw ConsistencyFailure("class matrices are not diagonalizable over F_" + std::to_string(p));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw ConsistencyFailure("Dixon splitting did not separate all characters");

    // primitive e-th root of unity mod p
    long long z = 0;
    for (long long cand = 2; cand < p && z == 0; ++cand) {
        const long long w = powmod(cand, (p - 1) / e, p);
        bool primitive = true;
        for (long long d = 1; d < e && primitive; ++d)
            if (e % d == 0 && powmod(w, d, p) == 1) primitive = false;
        if (primitive) z = w;
    }
    if (e == 1) z = 1;

    const int id_class = ct.class_of.at(G.identity());
    for (const auto& W : spaces) {
        std::vector<long long> v = W[0];
        const long long s = invmod(v[static_cast<std::size_t>(id_class)], p);
        for (auto& x : v) x = x * s % p;
        // |H| / chi(1)^2 = sum_k omega_k omega_{k*} / |C_k|
        long long t = 0;
        for (std::size_t k = 0; k < r; ++k) {
            const auto kstar = static_cast<std::size_t>(ct.class_of.at(G.inv(ct.classes[k][0])));
            t = mod(t + v[k] * v[kstar] % p * invmod(static_cast<long long>(ct.classes[k].size()), p), p);
        }
        const long long d2 = order % p * invmod(t, p) % p;
        long long deg = 0;
        for (long long d = 1; d * d <= order; ++d)
            if (d * d % p == d2) deg = d;
        if (deg == 0) throw ConsistencyFailure("character degree not recovered");
        std::vector<long long> chi_mod(r);
        for (std::size_t k = 0; k < r; ++k) chi_mod[k] = v[k] * deg % p * invmod(static_cast<long long>(ct.classes[k].size()), p) % p;
        std::vector<Cyclotomic> row;
        for (std::size_t k = 0; k < r; ++k) {
            const int g = ct.classes[k][0];
            std::vector<Rational> coeffs(static_cast<std::size_t>(e));
            const long long inv_e = invmod(e, p);
            for (long long s2 = 0; s2 < e; ++s2) {
                long long msum = 0;
                for (long long t2 = 0; t2 < e; ++t2) {
                    const int gt = G.power(g, t2);
                    msum = mod(msum + chi_mod[static_cast<std::size_t>(ct.class_of.at(gt))] * powmod(z, mod(-s2 * t2, e), p), p);
                }
                long long mult = msum * inv_e % p;
                if (mult > deg) throw ConsistencyFailure("eigenvalue multiplicity out of range");
                coeffs[static_cast<std::size_t>(s2)] = static_cast<long>(mult);
            }
            row.push_back(Cyclotomic::from_coefficients(static_cast<int>(e), std::move(coeffs)));
        }
        ct.values.push_back(std::move(row));
    }
    std::sort(ct.values.begin(), ct.values.end(), [&](const auto& x, const auto& y) {
        const Rational dx = x[static_cast<std::size_t>(id_class)].rational_value();
        const Rational dy = y[static_cast<std::size_t>(id_class)].rational_value();
        if (dx != dy) return dx < dy;
        return x[0].to_string() + x.back().to_string() < y[0].to_string() + y.back().to_string();
    });
    // first orthogonality as a self-check
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j2 = 0; j2 < r; ++j2) {
            Cyclotomic s;
            for (std::size_t k = 0; k < r; ++k)
                s += ct.values[i][k] * ct.values[j2][k].conj() * Cyclotomic(static_cast<long long>(ct.classes[k].size()));
            if (s != Cyclotomic(i == j2 ? order : 0)) throw ConsistencyFailure("character table fails orthogonality");
        }
    return ct;
}

/// Lusztig's non-abelian Fourier matrix of G, indexed by pairs (x, sigma):
/// x a conjugacy class representative, sigma in Irr(C_G(x)).
struct FourierMatrix {
    std::vector<std::pair<int, std::size_t>> labels;  // (x, index of sigma)
    std::vector<std::vector<Cyclotomic>> entries;
};

inline FourierMatrix nonabelian_fourier(const FiniteGroup& G, int bound = kDefaultFiniteGroupBound) {
    if (G.size() > bound) throw BoundExceeded("group order " + std::to_string(G.size()) + " exceeds " + std::to_string(bound));
    std::vector<int> reps;
    for (const auto& c : G.classes()) reps.push_back(c.front());
    std::vector<CharacterTable> tables;
    FourierMatrix fm;
    for (int x : reps) {
        tables.push_back(character_table(G, G.centralizer(x)));
        for (std::size_t s = 0; s < tables.back().values.size(); ++s) fm.labels.push_back({x, s});
    }
    auto table_of = [&](int x) -> const CharacterTable& {
        return tables[static_cast<std::size_t>(std::find(reps.begin(), reps.end(), x) - reps.begin())];
    };
    for (const auto& [x, si] : fm.labels) {
        std::vector<Cyclotomic> row;
        const CharacterTable& cx = table_of(x);
        for (const auto& [y, ti] : fm.labels) {
            const CharacterTable& cy = table_of(y);
            Cyclotomic s;
            for (int g = 0; g < G.size(); ++g) {
                const int gyg = G.conj(g, y);
                if (G.mul(x, gyg) != G.mul(gyg, x)) continue;
                const int w = G.mul(G.mul(G.inv(g), G.inv(x)), g);
                s += cx.value(si, gyg) * cy.value(ti, w);
            }
            const long long denom = static_cast<long long>(cx.subgroup.size()) * static_cast<long long>(cy.subgroup.size());
            row.push_back(s * Cyclotomic(ratio(1, denom)));
        }
        fm.entries.push_back(std::move(row));
    }
    return fm;
}

}  // namespace spetses
