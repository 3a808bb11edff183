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

#include "errors.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace spetses {

/// Integer partition, parts weakly decreasing and positive.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p.front(); ++j) {
        int len = 0;
        for (int x : p)
            if (x >= j) ++len;
        c.push_back(len);
    }
    return c;
}

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of standard Young tableaux (hook length formula).
inline BigInt standard_tableaux_count(const Partition& p) {
    const int n = partition_size(p);
    const Partition c = conjugate(p);
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt den = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) den *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return num / den;
}

inline std::string partition_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

/// A tuple of m partitions.
struct MPartition {
    std::vector<Partition> comps;

    int m() const { return static_cast<int>(comps.size()); }
    int size() const {
        int s = 0;
        for (const auto& c : comps) s += partition_size(c);
        return s;
    }
    const Partition& operator[](int i) const { return comps[static_cast<std::size_t>(i)]; }

    /// (lambda^(m-1), lambda^(0), ..., lambda^(m-2))
    MPartition rotated(int times = 1) const {
        MPartition r{std::vector<Partition>(comps.size())};
        for (int i = 0; i < m(); ++i) r.comps[static_cast<std::size_t>(mod(i + times, m()))] = comps[static_cast<std::size_t>(i)];
        return r;
    }

    /// s(lambda): number of rotations fixing lambda.
    int rotation_stabilizer() const {
        int s = 0;
        for (int i = 0; i < m(); ++i)
            if (rotated(i) == *this) ++s;
        return s;
    }

    MPartition canonical_rotation() const {
        MPartition best = *this;
        for (int i = 1; i < m(); ++i) best = std::min(best, rotated(i));
        return best;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? "," : "") + partition_string(comps[i]);
        return s + "]";
    }

    friend bool operator==(const MPartition& a, const MPartition& b) { return a.comps == b.comps; }
    friend bool operator!=(const MPartition& a, const MPartition& b) { return a.comps != b.comps; }
    friend bool operator<(const MPartition& a, const MPartition& b) { return a.comps < b.comps; }
};

/// Parses "[(2),(1,1),()]".
inline MPartition parse_mpartition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&] { return InvalidArgument("malformed m-partition '" + text + "'"); };
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail();
    MPartition lam;
    std::size_t i = 1;
    while (i + 1 < s.size()) {
        if (s[i] != '(') throw fail();
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw fail();
        Partition p;
        std::string body = s.substr(i + 1, close - i - 1);
        std::size_t start = 0;
        while (!body.empty()) {
            const std::size_t comma = body.find(',', start);
            const std::string tok = body.substr(start, comma - start);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || tok.size() > 6)
                throw fail();
            p.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!std::is_sorted(p.rbegin(), p.rend()) || std::find(p.begin(), p.end(), 0) != p.end()) throw fail();
        lam.comps.push_back(p);
        i = close + 1;
        if (i < s.size() - 1) {
            if (s[i] != ',') throw fail();
            ++i;
        }
    }
    return lam;
}

/// All m-partitions of n.
inline std::vector<MPartition> m_partitions(int m, int n) {
    std::vector<MPartition> out;
    MPartition cur{std::vector<Partition>(static_cast<std::size_t>(m))};
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == m - 1) {
            for (const auto& p : partitions(remaining)) {
                cur.comps[static_cast<std::size_t>(slot)] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int k = remaining; k >= 0; --k)
            for (const auto& p : partitions(k)) {
                cur.comps[static_cast<std::size_t>(slot)] = p;
                self(self, slot + 1, remaining - k);
            }
    };
    rec(rec, 0, n);
    return out;
}

/// Irreducible character label. For G(m,m,n), `lambda` is the lex-least
/// rotation and `component` ranges over 0..s(lambda)-1.
struct CharLabel {
    GroupSpec group;
    MPartition lambda;
    int component = 0;

    int stabilizer() const { return group.kind() == GroupKind::Gmmn ? lambda.rotation_stabilizer() : 1; }

    /// "[(2),(1,1),()]"; G(m,m,n) labels with s > 1 get a ":j" suffix.
    std::string to_string() const {
        std::string s = lambda.to_string();
        if (stabilizer() > 1) s += ":" + std::to_string(component);
        return s;
    }

    friend bool operator==(const CharLabel& a, const CharLabel& b) {
        return a.group == b.group && a.lambda == b.lambda && a.component == b.component;
    }
    friend bool operator!=(const CharLabel& a, const CharLabel& b) { return !(a == b); }
    friend bool operator<(const CharLabel& a, const CharLabel& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.component < b.component;
    }
};

inline void require_imprimitive(const GroupSpec& g) {
    if (!g.is_imprimitive()) throw InvalidArgument(g.name() + ": characters are available for G(m,1,n) and G(m,m,n) only");
}

/// Builds a label from an arbitrary m-partition (rotated to canonical form for G(m,m,n)).
inline CharLabel make_label(const GroupSpec& g, const MPartition& lam, int component = 0) {
    require_imprimitive(g);
    if (lam.m() != g.m() || lam.size() != g.n())
        throw InvalidArgument("label " + lam.to_string() + " is not an m-partition of n for " + g.name());
    CharLabel lab{g, g.kind() == GroupKind::Gmmn ? lam.canonical_rotation() : lam, component};
    if (component < 0 || component >= lab.stabilizer())
        throw InvalidArgument("component index " + std::to_string(component) + " out of range for " + lam.to_string());
    return lab;
}

/// Parses the text form produced by CharLabel::to_string.
inline CharLabel parse_label(const GroupSpec& g, const std::string& text) {
    const std::size_t colon = text.find(':');
    int component = 0;
    if (colon != std::string::npos) {
        const std::string tok = text.substr(colon + 1);
        if (tok.empty() || tok.size() > 4 || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InvalidArgument("malformed component index in '" + text + "'");
        component = std::stoi(tok);
    }
    return make_label(g, parse_mpartition(text.substr(0, colon)), component);
}

inline std::vector<CharLabel> all_labels(const GroupSpec& g) {
    require_imprimitive(g);
    std::vector<CharLabel> out;
    for (const auto& lam : m_partitions(g.m(), g.n())) {
        if (g.kind() == GroupKind::Gm1n) {
            out.push_back({g, lam, 0});
            continue;
        }
        if (lam.canonical_rotation() != lam) continue;
        const int s = lam.rotation_stabilizer();
        for (int j = 0; j < s; ++j) out.push_back({g, lam, j});
    }
    return out;
}

inline CharLabel trivial_label(const GroupSpec& g) {
    require_imprimitive(g);
    MPartition lam{std::vector<Partition>(static_cast<std::size_t>(g.m()))};
    lam.comps[0] = {g.n()};
    return make_label(g, lam);
}

/// Label of Lambda^k V^{sigma_p}: (n-k) in slot 0 and 1^k in slot p mod m.
inline CharLabel exterior_twist_label(const GroupSpec& g, int k, long long p) {
    require_imprimitive(g);
    if (k < 0 || k > g.n()) throw InvalidArgument("exterior power index out of range");
    const int h = invariants(g).coxeter_number;
    if (std::gcd(mod(p, h), static_cast<long long>(h)) != 1)
        throw InvalidArgument("p = " + std::to_string(p) + " is not coprime to h = " + std::to_string(h));
    MPartition lam{std::vector<Partition>(static_cast<std::size_t>(g.m()))};
    if (g.n() > k) lam.comps[0] = {g.n() - k};
    if (k > 0) {
        auto& slot = lam.comps[static_cast<std::size_t>(mod(p, g.m()))];
        slot.insert(slot.end(), static_cast<std::size_t>(k), 1);
        std::sort(slot.rbegin(), slot.rend());
    }
    return make_label(g, lam);
}

/// [sigma_p(lambda)]^(p k mod m) = lambda^(k).
inline CharLabel galois_twist(const CharLabel& lab, long long p) {
    const int m = lab.group.m();
    if (std::gcd(mod(p, m), static_cast<long long>(m)) != 1)
        throw InvalidArgument("Galois twist exponent must be coprime to m");
    MPartition r{std::vector<Partition>(static_cast<std::size_t>(m))};
    for (int k = 0; k < m; ++k) r.comps[static_cast<std::size_t>(mod(p * k, m))] = lab.lambda[k];
    return make_label(lab.group, r, lab.component);
}

/// Label of the complex-conjugate character: (lambda*)^(i) = lambda^(-i mod m).
inline CharLabel dual_label(const CharLabel& lab) { return galois_twist(lab, -1); }

/// chi(1): multinomial times the standard tableau counts, divided by s(lambda) for G(m,m,n).
inline BigInt dimension(const CharLabel& lab) {
    BigInt d = 1;
    for (int i = 2; i <= lab.group.n(); ++i) d *= i;
    for (const auto& p : lab.lambda.comps) {
        for (int i = 2; i <= partition_size(p); ++i) d /= i;
        d *= standard_tableaux_count(p);
    }
    return d / lab.stabilizer();
}

}  // namespace spetses
