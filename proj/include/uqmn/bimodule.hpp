#pragma once

#include "uqmn/exterior.hpp"

#include <string>
#include <vector>

namespace uqmn {

/// Left/right bi-weight of a basis element: row counts under gl_m and column
/// counts under gl_n, taken through the column-major (i,j) <-> (j-1)m+i
/// identification of [mn] with [m] x [n].
struct BiWeight {
    std::vector<int> left;
    std::vector<int> right;

    auto operator<=>(const BiWeight&) const = default;

    BiWeight& operator+=(const BiWeight& o) {
        for (size_t i = 0; i < left.size(); ++i) left[i] += o.left[i];
        for (size_t i = 0; i < right.size(); ++i) right[i] += o.right[i];
        return *this;
    }

    [[nodiscard]] std::string to_string() const {
        auto part = [](const std::vector<int>& v) {
            std::string s = "(";
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(v[i]);
            }
            return s + ")";
        };
        return "L:" + part(left) + "|R:" + part(right);
    }
};

enum class Side { left, right };
enum class GenKind { E, F, Qeps };

struct GeneratorId {
    Side side;
    GenKind kind;
    int index;  // E/F: 1..m-1 (left) or 1..n-1 (right); Qeps: 1..m or 1..n

    [[nodiscard]] std::string to_string() const {
        std::string k = kind == GenKind::E ? "E" : kind == GenKind::F ? "F" : "qeps";
        return k + (side == Side::left ? "L" : "R") + std::to_string(index);
    }
};

/// Row index of element t of [mn] (column-major).
inline int row_of(int t, int m) { return (t - 1) % m + 1; }
/// Column index of element t of [mn] (column-major).
inline int col_of(int t, int m) { return (t - 1) / m + 1; }
/// Element of [mn] at row i, column j (column-major).
inline int cell(int i, int j, int m) { return (j - 1) * m + i; }

inline BiWeight biweight_of(const ColumnSet& c, int m, int n) {
    BiWeight w{std::vector<int>(static_cast<size_t>(m), 0), std::vector<int>(static_cast<size_t>(n), 0)};
    for (int t : c.elems) {
        w.left[static_cast<size_t>(row_of(t, m) - 1)] += 1;
        w.right[static_cast<size_t>(col_of(t, m) - 1)] += 1;
    }
    return w;
}

inline BiWeight biweight_of(const BasisIndex& b, int m, int n) {
    BiWeight w{std::vector<int>(static_cast<size_t>(m), 0), std::vector<int>(static_cast<size_t>(n), 0)};
    for (const auto& c : b) w += biweight_of(c, m, n);
    return w;
}

namespace detail {

/// B_i^k = sum_{j=0}^{k-2} -h_{jm+i}.
inline EWeight left_E_weight(int i, int k, int m, int mn) {
    EWeight w(mn);
    for (int j = 0; j <= k - 2; ++j) {
        w += -EWeight::h(j * m + i, mn);
    }
    return w;
}

/// A_i^k = sum_{j=k}^{n-1} h_{jm+i}.
inline EWeight left_F_weight(int i, int k, int m, int n, int mn) {
    EWeight w(mn);
    for (int j = k; j <= n - 1; ++j) w += EWeight::h(j * m + i, mn);
    return w;
}

/// beta_i^k = sum_{j>i} eps_{km+j} - sum_{j>i} eps_{(k-1)m+j}.
inline EWeight right_E_weight(int i, int k, int m, int mn) {
    EWeight w(mn);
    for (int j = i + 1; j <= m; ++j) w += EWeight::kappa(k * m + j, (k - 1) * m + j, mn);
    return w;
}

/// alpha_i^k = sum_{j<i} eps_{(k-1)m+j} - sum_{j<i} eps_{km+j}.
inline EWeight right_F_weight(int i, int k, int m, int mn) {
    EWeight w(mn);
    for (int j = 1; j <= i - 1; ++j) w += EWeight::kappa((k - 1) * m + j, k * m + j, mn);
    return w;
}

} // namespace detail

/// E_i^L = sum_k q^{B_i^k} e_{(k-1)m+i}; the q-weight factor written to the
/// left of the elementary operator is evaluated on the image.
inline ModuleElement left_action(const GeneratorId& g, const ModuleElement& x) {
    const int m = x.shape.m, n = x.shape.n, mn = x.shape.mn();
    if (g.side != Side::left) throw std::invalid_argument("left_action requires a left generator");
    ModuleElement r(x.shape);
    if (g.kind == GenKind::Qeps) {
        if (g.index < 1 || g.index > m) throw std::out_of_range("qeps index out of range");
        EWeight w(mn);
        for (int j = 0; j <= n - 1; ++j) w += EWeight::eps(j * m + g.index, mn);
        return apply_qweight(w, x);
    }
    if (g.index < 1 || g.index >= m) throw std::out_of_range("generator index out of range");
    for (int k = 1; k <= n; ++k) {
        int t = (k - 1) * m + g.index;
        if (g.kind == GenKind::E)
            r += apply_qweight(detail::left_E_weight(g.index, k, m, mn), apply_e(t, x));
        else
            r += apply_qweight(detail::left_F_weight(g.index, k, m, n, mn), apply_f(t, x));
    }
    return r;
}

/// E_k^R = sum_i q^{beta_i^k} E_{(k-1)m+i, km+i-1}; q-weight factors are
/// evaluated on the post-bracket image.
inline ModuleElement right_action(const GeneratorId& g, const ModuleElement& x) {
    const int m = x.shape.m, n = x.shape.n, mn = x.shape.mn();
    if (g.side != Side::right) throw std::invalid_argument("right_action requires a right generator");
    ModuleElement r(x.shape);
    if (g.kind == GenKind::Qeps) {
        if (g.index < 1 || g.index > n) throw std::out_of_range("qeps index out of range");
        EWeight w(mn);
        for (int i = 1; i <= m; ++i) w += EWeight::eps((g.index - 1) * m + i, mn);
        return apply_qweight(w, x);
    }
    if (g.index < 1 || g.index >= n) throw std::out_of_range("generator index out of range");
    const int k = g.index;
    for (int i = 1; i <= m; ++i) {
        int lo = (k - 1) * m + i, hi = k * m + i - 1;
        if (g.kind == GenKind::E)
            r += apply_qweight(detail::right_E_weight(i, k, m, mn), bracket_E(lo, hi, x));
        else
            r += apply_qweight(detail::right_F_weight(i, k, m, mn), bracket_F(lo, hi, x));
    }
    return r;
}

/// Single-factor dispatch over both families.
inline ModuleElement apply_generator(const GeneratorId& g, const ModuleElement& x) {
    return g.side == Side::left ? left_action(g, x) : right_action(g, x);
}

/// <h_i^side, biweight>; the Cartan value seen by generator index i.
inline int h_value(Side side, int i, const BiWeight& w) {
    const auto& v = side == Side::left ? w.left : w.right;
    return v[static_cast<size_t>(i - 1)] - v[static_cast<size_t>(i)];
}

inline int eps_value(Side side, int i, const BiWeight& w) {
    const auto& v = side == Side::left ? w.left : w.right;
    return v[static_cast<size_t>(i - 1)];
}

/// All E/F generators of one side for the given m, n.
inline std::vector<GeneratorId> ef_generators(Side side, int m, int n) {
    std::vector<GeneratorId> gens;
    int r = side == Side::left ? m : n;
    for (int i = 1; i < r; ++i) {
        gens.push_back({side, GenKind::E, i});
        gens.push_back({side, GenKind::F, i});
    }
    return gens;
}

inline std::vector<GeneratorId> raising_generators(int m, int n) {
    std::vector<GeneratorId> gens;
    for (int i = 1; i < m; ++i) gens.push_back({Side::left, GenKind::E, i});
    for (int k = 1; k < n; ++k) gens.push_back({Side::right, GenKind::E, k});
    return gens;
}

inline std::vector<GeneratorId> lowering_generators(int m, int n) {
    std::vector<GeneratorId> gens;
    for (int i = 1; i < m; ++i) gens.push_back({Side::left, GenKind::F, i});
    for (int k = 1; k < n; ++k) gens.push_back({Side::right, GenKind::F, k});
    return gens;
}

} // namespace uqmn
