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
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "mpartition.hpp"
#include "rational.hpp"

namespace spetses {

/// An m-symbol: m strictly increasing rows of non-negative integers.
struct MSymbol {
    std::vector<std::vector<int>> rows;

    int m() const { return static_cast<int>(rows.size()); }
    const std::vector<int>& operator[](int i) const { return rows[static_cast<std::size_t>(i)]; }

    /// I(S), total number of entries.
    int content() const {
        int c = 0;
        for (const auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }

    long long entry_sum() const {
        long long s = 0;
        for (const auto& r : rows)
            for (int x : r) s += x;
        return s;
    }

    /// Sorted multiset of all entries.
    std::vector<int> entries() const {
        std::vector<int> e;
        for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
        std::sort(e.begin(), e.end());
        return e;
    }

    /// Simultaneous shift: every row (x_1, ...) -> (0, x_1 + 1, ...).
    MSymbol shifted(int times = 1) const {
        MSymbol s = *this;
        for (int t = 0; t < times; ++t)
            for (auto& r : s.rows) {
                for (auto& x : r) ++x;
                r.insert(r.begin(), 0);
            }
        return s;
    }

    /// pi(S) = (S_{m-1}, S_0, ..., S_{m-2}), applied `times` times.
    MSymbol rotated(int times = 1) const {
        MSymbol r{std::vector<std::vector<int>>(rows.size())};
        for (int i = 0; i < m(); ++i) r.rows[static_cast<std::size_t>(mod(i + times, m()))] = rows[static_cast<std::size_t>(i)];
        return r;
    }

    /// "0,3;1"
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) s += ";";
            for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
        }
        return s;
    }

    friend bool operator==(const MSymbol& a, const MSymbol& b) { return a.rows == b.rows; }
    friend bool operator!=(const MSymbol& a, const MSymbol& b) { return a.rows != b.rows; }
    friend bool operator<(const MSymbol& a, const MSymbol& b) { return a.rows < b.rows; }
};

enum class SymbolKind { content1, content0 };

struct SymbolStats {
    long long rank = 0;
    long long content = 0;
    long long defect = 0;
};

/// Rank, content and defect. content1: I = 1 mod m (G(m,1,n)); content0: I = 0 mod m (G(m,m,n)).
inline SymbolStats symbol_stats(const MSymbol& s, SymbolKind kind) {
    const long long m = s.m();
    const long long I = s.content();
    long long weighted = 0;
    for (int i = 0; i < s.m(); ++i) weighted += static_cast<long long>(i) * static_cast<long long>(s[i].size());
    SymbolStats st;
    st.content = I;
    if (kind == SymbolKind::content1) {
        if (mod(I, m) != 1 % m) throw InvalidArgument("symbol " + s.to_string() + " does not have content 1 mod m");
        st.rank = s.entry_sum() - floor_div((I - 1) * (I - m + 1), 2 * m);
        st.defect = mod((m - 1) * (I - 1) / 2 - weighted, m);
    } else {
        if (mod(I, m) != 0) throw InvalidArgument("symbol " + s.to_string() + " does not have content 0 mod m");
        const long long k = I / m;
        st.rank = s.entry_sum() - m * choose2(k);
        // (m-1) I / 2 may be a half-integer only when it cannot be reduced mod m; keep it exact
        const long long twice = (m - 1) * I - 2 * weighted;
        if (twice % 2 != 0) throw InvalidArgument("defect of " + s.to_string() + " is not an integer");
        st.defect = mod(twice / 2, m);
    }
    return st;
}

inline SymbolKind symbol_kind(const GroupSpec& g) {
    return g.kind() == GroupKind::Gm1n ? SymbolKind::content1 : SymbolKind::content0;
}

/// S_{i,j} = alpha_{i,j} + j - 1 with alpha the parts in increasing order, zero padded.
inline MSymbol symbol_of(const CharLabel& lab) {
    const GroupSpec& g = lab.group;
    const int m = g.m();
    const bool first_longer = g.kind() == GroupKind::Gm1n;
    int M = 0;
    for (int i = 0; i < m; ++i) {
        const int parts = static_cast<int>(lab.lambda[i].size());
        M = std::max(M, (i == 0 && first_longer) ? parts - 1 : parts);
    }
    MSymbol s{std::vector<std::vector<int>>(static_cast<std::size_t>(m))};
    for (int i = 0; i < m; ++i) {
        const int len = (i == 0 && first_longer) ? M + 1 : M;
        std::vector<int> alpha(static_cast<std::size_t>(len), 0);
        const Partition& p = lab.lambda[i];
        for (std::size_t k = 0; k < p.size(); ++k) alpha[static_cast<std::size_t>(len) - 1 - k] = p[k];
        auto& row = s.rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < len; ++j) row.push_back(alpha[static_cast<std::size_t>(j)] + j);
    }
    return s;
}

/// s(S): number of rotations fixing S.
inline int rotation_stabilizer(const MSymbol& s) {
    int c = 0;
    for (int i = 0; i < s.m(); ++i)
        if (s.rotated(i) == s) ++c;
    return c;
}

/// Shifts S so that its content equals `target` (target - I(S) must be a non-negative multiple of m).
inline MSymbol shifted_to_content(const MSymbol& s, int target) {
    const int diff = target - s.content();
    if (diff < 0 || diff % s.m() != 0)
        throw InvalidArgument("cannot shift " + s.to_string() + " to content " + std::to_string(target));
    return s.shifted(diff / s.m());
}

/// Largest content among the label symbols of g; every family key uses it.
inline int family_content(const GroupSpec& g) {
    int c = 0;
    for (const auto& lab : all_labels(g)) c = std::max(c, symbol_of(lab).content());
    return c;
}

struct Family {
    /// Sorted entry multiset of the members' symbols at the common content.
    std::vector<int> entries;
    std::vector<CharLabel> members;
};

/// Partition of Irr(g) into families by entry multiset of content-normalized symbols;
/// for G(m,m,n) every copy of a symbol with s(S) = m is a singleton family.
inline std::vector<Family> families(const GroupSpec& g) {
    const int target = family_content(g);
    std::map<std::vector<int>, std::vector<CharLabel>> grouped;
    std::vector<Family> singletons;
    for (const auto& lab : all_labels(g)) {
        const MSymbol s = symbol_of(lab);
        const std::vector<int> key = shifted_to_content(s, target).entries();
        if (g.kind() == GroupKind::Gmmn && rotation_stabilizer(s) == g.m())
            singletons.push_back({key, {lab}});
        else
            grouped[key].push_back(lab);
    }
    std::vector<Family> out;
    for (auto& [key, members] : grouped) out.push_back({key, std::move(members)});
    out.insert(out.end(), singletons.begin(), singletons.end());
    std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) { return a.members.front() < b.members.front(); });
    return out;
}

inline const Family& family_of(const std::vector<Family>& fams, const CharLabel& lab) {
    for (const auto& f : fams)
        if (std::find(f.members.begin(), f.members.end(), lab) != f.members.end()) return f;
    throw InvalidArgument("label " + lab.to_string() + " belongs to no family");
}

/// Every symbol with the given sorted entry multiset, defect 0 and rank n
/// (unipotent symbols of g, including those not coming from labels). For
/// G(m,m,n) one representative per rotation class is returned.
inline std::vector<MSymbol> unipotent_symbols_with_entries(const GroupSpec& g, const std::vector<int>& entries) {
    require_imprimitive(g);
    const int m = g.m();
    const SymbolKind kind = symbol_kind(g);
    std::vector<std::pair<int, int>> values;  // (value, multiplicity)
    for (int x : entries) {
        if (!values.empty() && values.back().first == x)
            ++values.back().second;
        else
            values.push_back({x, 1});
    }
    for (const auto& [v, c] : values)
        if (c > m) return {};
    std::vector<MSymbol> out;
    MSymbol cur{std::vector<std::vector<int>>(static_cast<std::size_t>(m))};
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == values.size()) {
            const SymbolStats st = symbol_stats(cur, kind);
            if (st.defect != 0 || st.rank != g.n()) return;
            if (kind == SymbolKind::content0) {
                MSymbol best = cur;
                for (int i = 1; i < m; ++i) best = std::min(best, cur.rotated(i));
                if (best != cur) return;
            }
            out.push_back(cur);
            return;
        }
        const auto [v, c] = values[idx];
        // choose c distinct rows for value v
        std::vector<int> pick(static_cast<std::size_t>(m), 0);
        std::fill(pick.end() - c, pick.end(), 1);
        do {
            for (int i = 0; i < m; ++i)
                if (pick[static_cast<std::size_t>(i)]) cur.rows[static_cast<std::size_t>(i)].push_back(v);
            self(self, idx + 1);
            for (int i = 0; i < m; ++i)
                if (pick[static_cast<std::size_t>(i)]) cur.rows[static_cast<std::size_t>(i)].pop_back();
        } while (std::next_permutation(pick.begin(), pick.end()));
    };
    if (mod(static_cast<long long>(entries.size()), m) != (kind == SymbolKind::content1 ? 1 % m : 0)) return {};
    rec(rec, 0);
    return out;
}

}  // namespace spetses
