#pragma once

#include "uqmn/qrat.hpp"

#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqmn {

/// Integer weight in the lattice spanned by eps_1..eps_mn; coordinates[t-1]
/// is the coefficient of eps_t.
struct EWeight {
    std::vector<int> coordinates;

    explicit EWeight(int mn) : coordinates(static_cast<size_t>(mn), 0) {}

    static EWeight eps(int t, int mn) {
        EWeight w(mn);
        w.coordinates[static_cast<size_t>(t - 1)] = 1;
        return w;
    }
    /// kappa_{i,j} = eps_i - eps_j.
    static EWeight kappa(int i, int j, int mn) {
        EWeight w(mn);
        w.coordinates[static_cast<size_t>(i - 1)] += 1;
        w.coordinates[static_cast<size_t>(j - 1)] -= 1;
        return w;
    }
    /// h_t = eps_t - eps_{t+1}.
    static EWeight h(int t, int mn) { return kappa(t, t + 1, mn); }

    EWeight& operator+=(const EWeight& o) {
        for (size_t i = 0; i < coordinates.size(); ++i) coordinates[i] += o.coordinates[i];
        return *this;
    }
    EWeight operator-() const {
        EWeight w = *this;
        for (auto& c : w.coordinates) c = -c;
        return w;
    }
};

/// A p-subset of [mn]: strictly increasing 1-based entries.  Serves both as
/// the basis index of the exterior power and as a strict column tableau.
struct ColumnSet {
    std::vector<int> elems;

    ColumnSet() = default;
    explicit ColumnSet(std::vector<int> e) : elems(std::move(e)) {
        for (size_t i = 0; i + 1 < elems.size(); ++i)
            if (elems[i] >= elems[i + 1]) throw std::invalid_argument("ColumnSet not strictly increasing");
    }

    [[nodiscard]] int size() const { return static_cast<int>(elems.size()); }

    [[nodiscard]] bool contains(int t) const {
        return std::binary_search(elems.begin(), elems.end(), t);
    }

    /// Replace element `from` (present) by `to` (absent); keeps sortedness.
    [[nodiscard]] ColumnSet replaced(int from, int to) const {
        ColumnSet r = *this;
        auto it = std::lower_bound(r.elems.begin(), r.elems.end(), from);
        r.elems.erase(it);
        r.elems.insert(std::lower_bound(r.elems.begin(), r.elems.end(), to), to);
        return r;
    }

    [[nodiscard]] int count_in_range(int lo, int hi) const {
        if (lo > hi) return 0;
        auto l = std::lower_bound(elems.begin(), elems.end(), lo);
        auto h = std::upper_bound(elems.begin(), elems.end(), hi);
        return static_cast<int>(h - l);
    }

    [[nodiscard]] EWeight weight(int mn) const {
        EWeight w(mn);
        for (int t : elems) w.coordinates[static_cast<size_t>(t - 1)] = 1;
        return w;
    }

    auto operator<=>(const ColumnSet&) const = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elems[i]);
        }
        return s + "}";
    }
};

/// <alpha, wt(c)> with wt(c) = sum of eps_t over t in c.
inline int pair_weight(const EWeight& alpha, const ColumnSet& c) {
    int v = 0;
    for (int t : c.elems) v += alpha.coordinates[static_cast<size_t>(t - 1)];
    return v;
}

/// Identifies the ambient module: a tensor product of exterior powers of
/// C^(m x n), one factor per listed degree.
struct ModuleShape {
    int m = 0;
    int n = 0;
    std::vector<int> degrees;  // one entry per tensor factor, each in [0, mn]

    ModuleShape() = default;
    ModuleShape(int m_, int n_, std::vector<int> degs) : m(m_), n(n_), degrees(std::move(degs)) {
        if (m < 1 || n < 1) throw std::invalid_argument("ModuleShape requires m, n >= 1");
        for (int d : degrees)
            if (d < 0 || d > mn()) throw std::invalid_argument("factor degree out of [0, mn]");
    }

    [[nodiscard]] int mn() const { return m * n; }
    [[nodiscard]] int factors() const { return static_cast<int>(degrees.size()); }

    auto operator<=>(const ModuleShape&) const = default;
};

using BasisIndex = std::vector<ColumnSet>;  // one ColumnSet per tensor factor

inline std::string basis_to_string(const BasisIndex& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += "\xE2\x8A\x97";  // tensor sign
        s += b[i].to_string();
    }
    return s;
}

/// Finite Q(q)-linear combination of basis indices of a fixed module shape.
/// No zero coefficients are stored; term order is the lexicographic order on
/// the element lists.
struct ModuleElement {
    ModuleShape shape;
    std::map<BasisIndex, QRat> terms;

    ModuleElement() = default;
    explicit ModuleElement(ModuleShape s) : shape(std::move(s)) {}

    static ModuleElement basis_vector(ModuleShape s, BasisIndex b, QRat coeff = QRat(1)) {
        ModuleElement e(std::move(s));
        e.add_term(std::move(b), std::move(coeff));
        return e;
    }

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    void add_term(BasisIndex b, QRat coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(b);
        if (it == terms.end()) {
            terms.emplace(std::move(b), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    [[nodiscard]] QRat coeff_of(const BasisIndex& b) const {
        auto it = terms.find(b);
        return it == terms.end() ? QRat() : it->second;
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (const auto& [b, c] : o.terms) add_term(b, c);
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
        return a + (b * QRat(-1));
    }
    friend ModuleElement operator*(ModuleElement a, const QRat& s) {
        if (s.is_zero()) return ModuleElement(a.shape);
        for (auto& [b, c] : a.terms) c *= s;
        return a;
    }

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.shape == b.shape && a.terms == b.terms;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [b, c] : terms) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "\xC2\xB7" + basis_to_string(b);
        }
        return s;
    }
};

namespace detail {
inline const ColumnSet& single_factor(const ModuleElement& x, const BasisIndex& b) {
    if (x.shape.factors() != 1) throw std::invalid_argument("operation requires a single-factor element");
    return b[0];
}
} // namespace detail

/// e_t on a single exterior power: v_c -> v_{c - {t+1} + {t}} when t+1 in c
/// and t not in c, else 0.
inline ModuleElement apply_e(int t, const ModuleElement& x) {
    if (t < 1 || t >= x.shape.mn()) throw std::out_of_range("generator index out of range");
    ModuleElement r(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        const ColumnSet& c = detail::single_factor(x, b);
        if (!c.contains(t + 1) || c.contains(t)) continue;
        r.add_term({c.replaced(t + 1, t)}, coeff);
    }
    return r;
}

/// f_t on a single exterior power: v_c -> v_{c - {t} + {t+1}} when t in c and
/// t+1 not in c, else 0.
inline ModuleElement apply_f(int t, const ModuleElement& x) {
    if (t < 1 || t >= x.shape.mn()) throw std::out_of_range("generator index out of range");
    ModuleElement r(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        const ColumnSet& c = detail::single_factor(x, b);
        if (!c.contains(t) || c.contains(t + 1)) continue;
        r.add_term({c.replaced(t, t + 1)}, coeff);
    }
    return r;
}

/// q^alpha acting diagonally by q^<alpha, wt(c)>.
inline ModuleElement apply_qweight(const EWeight& alpha, const ModuleElement& x) {
    ModuleElement r(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        const ColumnSet& c = detail::single_factor(x, b);
        r.add_term(b, coeff * QRat::qpow(pair_weight(alpha, c)));
    }
    return r;
}

/// Closed form of the iterated bracket [e_i,[e_{i+1},[...,e_j]]]:
/// E_{i,j}(v_c) = (-1)^{|c cap [i+1,j]|} v_{c-{j+1}+{i}} when j+1 in c and
/// i not in c, else 0.
inline ModuleElement bracket_E(int i, int j, const ModuleElement& x) {
    if (i > j || i < 1 || j >= x.shape.mn()) throw std::out_of_range("bracket indices out of range");
    ModuleElement r(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        const ColumnSet& c = detail::single_factor(x, b);
        if (!c.contains(j + 1) || c.contains(i)) continue;
        int sign = c.count_in_range(i + 1, j) % 2 ? -1 : 1;
        r.add_term({c.replaced(j + 1, i)}, coeff * QRat(sign));
    }
    return r;
}

/// Mirror of bracket_E: F_{i,j}(v_c) = (-1)^{|c cap [i+1,j]|} v_{c-{i}+{j+1}}
/// when j+1 not in c and i in c, else 0.
inline ModuleElement bracket_F(int i, int j, const ModuleElement& x) {
    if (i > j || i < 1 || j >= x.shape.mn()) throw std::out_of_range("bracket indices out of range");
    ModuleElement r(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        const ColumnSet& c = detail::single_factor(x, b);
        if (c.contains(j + 1) || !c.contains(i)) continue;
        int sign = c.count_in_range(i + 1, j) % 2 ? -1 : 1;
        r.add_term({c.replaced(i, j + 1)}, coeff * QRat(sign));
    }
    return r;
}

/// All p-subsets of [mn] in lexicographic order of their element lists.
inline std::vector<ColumnSet> subsets_lex(int mn, int p) {
    std::vector<ColumnSet> out;
    if (p < 0 || p > mn) return out;
    std::vector<int> cur(static_cast<size_t>(p));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(ColumnSet(cur));
        int i = p - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == mn - (p - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int k = i + 1; k < p; ++k) cur[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)] + 1;
    }
    return out;
}

/// Full tensor basis of a shape, factors enumerated lexicographically and
/// combined in odometer order (last factor fastest).
inline std::vector<BasisIndex> module_basis(const ModuleShape& shape) {
    std::vector<std::vector<ColumnSet>> factor_bases;
    factor_bases.reserve(shape.degrees.size());
    for (int d : shape.degrees) factor_bases.push_back(subsets_lex(shape.mn(), d));
    std::vector<BasisIndex> out;
    BasisIndex cur(shape.degrees.size());
    size_t total = 1;
    for (const auto& fb : factor_bases) total *= fb.size();
    if (total == 0) return out;
    out.reserve(total);
    std::vector<size_t> idx(shape.degrees.size(), 0);
    while (true) {
        for (size_t f = 0; f < idx.size(); ++f) cur[f] = factor_bases[f][idx[f]];
        out.push_back(cur);
        size_t f = idx.size();
        while (f > 0) {
            --f;
            if (++idx[f] < factor_bases[f].size()) break;
            idx[f] = 0;
            if (f == 0) return out;
        }
        if (idx.empty()) return out;
    }
}

} // namespace uqmn
