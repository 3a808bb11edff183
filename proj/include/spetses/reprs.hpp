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

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "mpartition.hpp"

namespace spetses {

/// Dense square matrix over Q(zeta_N).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    static Matrix identity(int n) {
        Matrix r(n);
        for (int i = 0; i < n; ++i) r(i, i) = Cyclotomic(1);
        return r;
    }

    int size() const { return n_; }
    Cyclotomic& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const Cyclotomic& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    Cyclotomic trace() const {
        Cyclotomic t;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix galois(long long p) const {
        Matrix r = *this;
        for (auto& c : r.a_) c = c.galois(p);
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const Cyclotomic& c = x(i, k);
                if (c.is_zero()) continue;
                for (int j = 0; j < x.n_; ++j)
                    if (!y(k, j).is_zero()) r(i, j) += c * y(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (x.a_[i] != y.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    int n_ = 0;
    std::vector<Cyclotomic> a_;
};

/// Position of one number in a standard m-tableau.
struct Cell {
    int component = 0;
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.component == b.component && a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.component != b.component) return a.component < b.component;
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

/// A standard m-tableau, stored as cell[k-1] = position of k.
using Tableau = std::vector<Cell>;

/// Standard m-tableaux of the given shape.
inline std::vector<Tableau> standard_tableaux(const MPartition& shape) {
    const int n = shape.size();
    std::vector<Tableau> out;
    std::vector<Partition> filled(shape.comps.size());
    for (std::size_t c = 0; c < shape.comps.size(); ++c) filled[c] = Partition(shape.comps[c].size(), 0);
    Tableau cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t c = 0; c < shape.comps.size(); ++c)
            for (std::size_t r = 0; r < shape.comps[c].size(); ++r) {
                const int col = filled[c][r];
                if (col >= shape.comps[c][r]) continue;
                if (r > 0 && filled[c][r - 1] <= col) continue;
                ++filled[c][r];
                cur.push_back({static_cast<int>(c), static_cast<int>(r), col});
                self(self);
                cur.pop_back();
                --filled[c][r];
            }
    };
    rec(rec);
    return out;
}

inline constexpr int kDefaultModelBound = 200;

/// Ariki's seminormal model of the irreducible representation of G(m,1,n)
/// labelled by an m-partition: t T = zeta^{T(1)} T and
/// s_i T = (1/a) T + (1 + 1/a) T_{i<->i+1}, a the axial distance.
struct Model {
    GroupSpec group;
    MPartition shape;
    std::vector<Tableau> basis;
    Matrix t;
    std::vector<Matrix> s;  // s[i-1] is s_i

    int dimension() const { return static_cast<int>(basis.size()); }

    /// Image of generator id: 0 is t, i >= 1 is s_i.
    const Matrix& generator(int id) const { return id == 0 ? t : s[static_cast<std::size_t>(id - 1)]; }

    /// Image of a word, product left to right.
    Matrix evaluate(const std::vector<int>& word) const {
        Matrix r = Matrix::identity(dimension());
        for (int id : word) r = r * generator(id);
        return r;
    }
};

namespace detail {
inline Matrix matrix_power(const Matrix& x, int k) {
    Matrix r = Matrix::identity(x.size());
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}
}  // namespace detail

/// Throws ConsistencyFailure unless every defining relation of G(m,1,n) holds.
inline void check_relations(const Model& md) {
    const int m = md.group.m();
    const int d = md.dimension();
    const Matrix id = Matrix::identity(d);
    auto fail = [&](const std::string& what) {
        return ConsistencyFailure("model of " + md.shape.to_string() + ": " + what);
    };
    if (detail::matrix_power(md.t, m) != id) throw fail("t^m != 1");
    for (std::size_t i = 0; i < md.s.size(); ++i) {
        if (md.s[i] * md.s[i] != id) throw fail("s_i^2 != 1");
        if (i + 1 < md.s.size() && md.s[i] * md.s[i + 1] * md.s[i] != md.s[i + 1] * md.s[i] * md.s[i + 1])
            throw fail("braid relation s_i s_{i+1} s_i");
        for (std::size_t j = i + 2; j < md.s.size(); ++j)
            if (md.s[i] * md.s[j] != md.s[j] * md.s[i]) throw fail("distant s_i, s_j do not commute");
        if (i >= 1 && md.t * md.s[i] != md.s[i] * md.t) throw fail("t and s_i (i > 1) do not commute");
    }
    if (!md.s.empty()) {
        const Matrix& s1 = md.s[0];
        if (md.t * s1 * md.t * s1 != s1 * md.t * s1 * md.t) throw fail("t s1 t s1 != s1 t s1 t");
    }
}

inline Model build_model(const CharLabel& lab, int bound = kDefaultModelBound) {
    if (lab.group.kind() != GroupKind::Gm1n) throw InvalidArgument("matrix models are built for G(m,1,n) only");
    const BigInt dim = dimension(lab);
    if (dim > bound) throw BoundExceeded("dimension " + dim.get_str() + " exceeds " + std::to_string(bound));
    const int m = lab.group.m();
    const int n = lab.group.n();
    Model md{lab.group, lab.lambda, standard_tableaux(lab.lambda), Matrix(), {}};
    const int d = md.dimension();
    std::map<Tableau, int> index;
    for (int i = 0; i < d; ++i) index[md.basis[static_cast<std::size_t>(i)]] = i;
    md.t = Matrix(d);
    for (int i = 0; i < d; ++i) md.t(i, i) = cyclo(m, md.basis[static_cast<std::size_t>(i)][0].component);
    for (int k = 1; k < n; ++k) {
        Matrix sk(d);
        for (int col = 0; col < d; ++col) {
            const Tableau& T = md.basis[static_cast<std::size_t>(col)];
            const Cell& a = T[static_cast<std::size_t>(k - 1)];
            const Cell& b = T[static_cast<std::size_t>(k)];
            Rational inv_a = 0;
            if (a.component == b.component) inv_a = ratio(1, b.content() - a.content());
            sk(col, col) = Cyclotomic(inv_a);
            Tableau swapped = T;
            std::swap(swapped[static_cast<std::size_t>(k - 1)], swapped[static_cast<std::size_t>(k)]);
            auto it = index.find(swapped);
            if (it != index.end()) sk(it->second, col) = Cyclotomic(Rational(1 + inv_a));
        }
        md.s.push_back(std::move(sk));
    }
    check_relations(md);
    return md;
}

/// Generator images in the group of monomial matrices: t = diag(zeta, 1, ...), s_i = (i i+1).
inline MonomialMatrix generator_matrix(const GroupSpec& g, int id) {
    MonomialMatrix r = MonomialMatrix::identity(g.m(), g.n());
    if (id == 0) {
        r.exps[0] = 1;
    } else {
        std::swap(r.perm[static_cast<std::size_t>(id - 1)], r.perm[static_cast<std::size_t>(id)]);
    }
    return r;
}

inline MonomialMatrix evaluate_word(const GroupSpec& g, const std::vector<int>& word) {
    MonomialMatrix r = MonomialMatrix::identity(g.m(), g.n());
    for (int id : word) r = r * generator_matrix(g, id);
    return r;
}

namespace detail {
/// t_j = s_{j-1} ... s_1 t s_1 ... s_{j-1}, coordinates 1-based.
inline std::vector<int> diagonal_word(int j, int power) {
    std::vector<int> w;
    for (int i = j - 1; i >= 1; --i) w.push_back(i);
    for (int k = 0; k < power; ++k) w.push_back(0);
    for (int i = 1; i <= j - 1; ++i) w.push_back(i);
    return w;
}
/// (i j) = s_{j-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}, i < j, 1-based.
inline std::vector<int> transposition_word(int i, int j) {
    std::vector<int> w;
    for (int k = j - 1; k > i; --k) w.push_back(k);
    w.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) w.push_back(k);
    return w;
}
}  // namespace detail

/// A word in {t, s_1, ..., s_{n-1}} whose image is the given reflection:
/// diagonal zeta^k at j is t_j^k; e_i -> zeta^k e_j is t_j^k (i j) t_j^{-k}.
inline std::vector<int> reflection_word(const GroupSpec& g, const Reflection& r) {
    const int m = g.m();
    const MonomialMatrix& x = r.matrix;
    for (int j = 0; j < x.size(); ++j) {
        if (r.hyperplane_class == "diagonal" && x.exps[static_cast<std::size_t>(j)] != 0)
            return detail::diagonal_word(j + 1, x.exps[static_cast<std::size_t>(j)]);
    }
    int i = -1;
    int j = -1;
    for (int c = 0; c < x.size(); ++c)
        if (x.perm[static_cast<std::size_t>(c)] != c) {
            if (i < 0)
                i = c;
            else
                j = c;
        }
    if (i < 0 || j < 0) throw InvalidArgument("not a reflection");
    const int k = x.exps[static_cast<std::size_t>(i)];  // e_i -> zeta^k e_j
    std::vector<int> w = detail::diagonal_word(j + 1, k);
    const auto mid = detail::transposition_word(i + 1, j + 1);
    w.insert(w.end(), mid.begin(), mid.end());
    const auto back = detail::diagonal_word(j + 1, static_cast<int>(mod(-k, m)));
    w.insert(w.end(), back.begin(), back.end());
    return w;
}

/// c(chi) = (1/chi(1)) sum_r chi(r), reflections mapped through the model by words.
inline Cyclotomic reflection_character_sum(const CharLabel& lab, int model_bound = kDefaultModelBound,
                                           long long reflection_bound = kDefaultReflectionBound) {
    const Model md = build_model(lab, model_bound);
    Cyclotomic total;
    for (const auto& r : enumerate_reflections(lab.group, reflection_bound)) total += md.evaluate(reflection_word(lab.group, r)).trace();
    return total / Cyclotomic(md.dimension());
}

/// chi(g) for every element g of G(m,1,n), by breadth-first search over words.
inline std::map<MonomialMatrix, Cyclotomic> model_character(const CharLabel& lab, long long bound = kDefaultReflectionBound) {
    const Model md = build_model(lab);
    const GroupSpec& g = lab.group;
    check_element_bound(g, bound);
    std::map<MonomialMatrix, Matrix> images;
    std::deque<MonomialMatrix> queue;
    const MonomialMatrix e = MonomialMatrix::identity(g.m(), g.n());
    images.emplace(e, Matrix::identity(md.dimension()));
    queue.push_back(e);
    while (!queue.empty()) {
        const MonomialMatrix x = queue.front();
        queue.pop_front();
        const Matrix img = images.at(x);
        for (int id = 0; id < g.n(); ++id) {
            MonomialMatrix y = generator_matrix(g, id) * x;
            if (images.count(y)) continue;
            images.emplace(y, md.generator(id) * img);
            queue.push_back(std::move(y));
        }
    }
    std::map<MonomialMatrix, Cyclotomic> chi;
    for (const auto& [x, img] : images) chi.emplace(x, img.trace());
    return chi;
}

}  // namespace spetses
