#pragma once

#include "uqmn/hw_maps.hpp"
#include "uqmn/tableaux.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uqmn {

/// dim V_lambda(C^N) = #SSYT(lambda, [N]) by the hook content product.
inline Int classical_dim(const Partition& lambda, int N) { return hook_content_count(lambda, N); }

/// Number of SSYT(lambda, [mn]) whose letter multiset, pushed through the
/// column-major (i,j) <-> (j-1)m+i identification, has the given row and
/// column contents.  Exact count by enumeration.
inline Int weight_multiplicity(const Partition& lambda, const BiWeight& w, int m, int n) {
    Int count = 0;
    for (const auto& t : enumerate_ssyt(lambda, m * n)) {
        std::vector<int> content = t.content(m * n);
        std::vector<int> left(static_cast<size_t>(m), 0), right(static_cast<size_t>(n), 0);
        for (int v = 1; v <= m * n; ++v) {
            left[static_cast<size_t>(row_of(v, m) - 1)] += content[static_cast<size_t>(v - 1)];
            right[static_cast<size_t>(col_of(v, m) - 1)] += content[static_cast<size_t>(v - 1)];
        }
        if (left == w.left && right == w.right) ++count;
    }
    return count;
}

/// The paper-style central bi-weight: total boxes distributed as evenly as
/// possible, larger parts first (so for two rows: (t,t) for even totals and
/// (t+1,t) for odd ones).
inline BiWeight central_weight(int boxes, int m, int n) {
    auto balanced = [&](int parts) {
        std::vector<int> w(static_cast<size_t>(parts), boxes / parts);
        for (int r = 0; r < boxes % parts; ++r) w[static_cast<size_t>(r)] += 1;
        return w;
    };
    return BiWeight{balanced(m), balanced(n)};
}

/// Per-bi-weight bases of the image of psi_{a,b} inside
/// wedge^a (x) wedge^b: independent columns of each weight block.
inline std::map<BiWeight, Matrix> image_subspace(int a, int b, int m, int n, PsiVariant variant) {
    std::map<BiWeight, Matrix> out;
    if (a + 1 > m * n) return out;  // the source is zero
    EquivariantMap psi = compose_psi_ab(a, b, m, n, variant);
    for (const auto& [w, blk] : psi.blocks) {
        if (blk.mat.rows == 0 || blk.mat.cols == 0) continue;
        RankResult rr = bareiss_rank(blk.mat);
        if (rr.rank == 0) continue;
        Matrix basis(blk.mat.rows, rr.rank);
        for (size_t c = 0; c < rr.rank; ++c)
            for (size_t r = 0; r < blk.mat.rows; ++r) basis.at(r, c) = blk.mat.at(r, rr.pivot_cols[c]);
        out.emplace(w, std::move(basis));
    }
    return out;
}

struct QuotientReport {
    int a = 0, b = 0, c = 0;
    std::string weight_label;  // "all" or the bi-weight rendering
    size_t ambient = 0;
    size_t rank = 0;
    size_t quotient = 0;
    Int oracle;
    bool pass = false;

    [[nodiscard]] std::string tuple_label() const {
        return std::to_string(a) + std::to_string(b) + std::to_string(c);
    }

    [[nodiscard]] std::string csv_row() const {
        return tuple_label() + "," + weight_label + "," + std::to_string(ambient) + "," +
               std::to_string(rank) + "," + std::to_string(quotient) + "," + oracle.str() + "," +
               (pass ? "pass" : "fail");
    }

    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tuple"] = tuple_label();
        j["weight"] = weight_label;
        j["ambient"] = ambient;
        j["rank"] = rank;
        j["quotient"] = quotient;
        j["oracle"] = oracle.str();
        j["pass"] = pass;
        return j;
    }
};

namespace detail {

/// Columns of span (x) basis and basis (x) span inside a weight block of the
/// triple tensor product, expressed in its canonical basis.
inline Matrix three_col_span(const std::map<BiWeight, Matrix>& im_left,   // in wedge^a (x) wedge^b
                             const std::map<BiWeight, Matrix>& im_right,  // in wedge^b (x) wedge^c
                             int a, int b, int c, int m, int n, const BiWeight& w,
                             const std::vector<BasisIndex>& block_basis) {
    std::vector<std::vector<QRat>> cols;
    auto locate = [&](const BasisIndex& t) {
        auto it = std::lower_bound(block_basis.begin(), block_basis.end(), t);
        if (it == block_basis.end() || *it != t) throw std::logic_error("triple index missing from block");
        return static_cast<size_t>(it - block_basis.begin());
    };
    // Im_{a,b} (x) wedge^c
    ModuleShape ab(m, n, {a, b});
    auto ab_groups = basis_by_weight(ab);
    for (const auto& [wu, cols_u] : im_left) {
        const auto& pair_basis = ab_groups.at(wu);
        for (const auto& s : subsets_lex(m * n, c)) {
            BiWeight ws = biweight_of(s, m, n);
            BiWeight total = wu;
            total += ws;
            if (!(total == w)) continue;
            for (size_t uc = 0; uc < cols_u.cols; ++uc) {
                std::vector<QRat> col(block_basis.size());
                for (size_t ur = 0; ur < cols_u.rows; ++ur) {
                    if (cols_u.at(ur, uc).is_zero()) continue;
                    BasisIndex triple = pair_basis[ur];
                    triple.push_back(s);
                    col[locate(triple)] = cols_u.at(ur, uc);
                }
                cols.push_back(std::move(col));
            }
        }
    }
    // wedge^a (x) Im_{b,c}
    ModuleShape bc(m, n, {b, c});
    auto bc_groups = basis_by_weight(bc);
    for (const auto& [wu, cols_u] : im_right) {
        const auto& pair_basis = bc_groups.at(wu);
        for (const auto& s : subsets_lex(m * n, a)) {
            BiWeight ws = biweight_of(s, m, n);
            BiWeight total = ws;
            total += wu;
            if (!(total == w)) continue;
            for (size_t uc = 0; uc < cols_u.cols; ++uc) {
                std::vector<QRat> col(block_basis.size());
                for (size_t ur = 0; ur < cols_u.rows; ++ur) {
                    if (cols_u.at(ur, uc).is_zero()) continue;
                    BasisIndex triple{s};
                    triple.insert(triple.end(), pair_basis[ur].begin(), pair_basis[ur].end());
                    col[locate(triple)] = cols_u.at(ur, uc);
                }
                cols.push_back(std::move(col));
            }
        }
    }
    Matrix span(block_basis.size(), cols.size());
    for (size_t cc = 0; cc < cols.size(); ++cc)
        for (size_t r = 0; r < block_basis.size(); ++r) span.at(r, cc) = cols[cc][r];
    return span;
}

} // namespace detail

/// Rank of Im_{a,b} (x) wedge^c + wedge^a (x) Im_{b,c} inside the stated
/// bi-weight block (or over all blocks when absent), with the quotient
/// dimension compared against the tableau bi-content oracle for the
/// three-column shape.
inline QuotientReport three_col_quotient(int a, int b, int c, int m, int n,
                                         const std::optional<BiWeight>& weight, PsiVariant variant) {
    if (!(a >= b && b >= c && c >= 1)) throw std::invalid_argument("tuple must satisfy a >= b >= c >= 1");
    QuotientReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    auto im_left = image_subspace(a, b, m, n, variant);
    auto im_right = image_subspace(b, c, m, n, variant);
    std::vector<int> cols = {a, b, c};
    Partition shape = Partition(cols).conjugate();  // column lengths a, b, c
    ModuleShape triple(m, n, {a, b, c});
    auto groups = basis_by_weight(triple);
    rep.oracle = 0;
    if (weight) {
        rep.weight_label = weight->to_string();
        auto it = groups.find(*weight);
        if (it != groups.end()) {
            rep.ambient = it->second.size();
            Matrix span = detail::three_col_span(im_left, im_right, a, b, c, m, n, *weight, it->second);
            rep.rank = bareiss_rank(span).rank;
        }
        rep.quotient = rep.ambient - rep.rank;
        rep.oracle = weight_multiplicity(shape, *weight, m, n);
    } else {
        rep.weight_label = "all";
        for (const auto& [w, block_basis] : groups) {
            rep.ambient += block_basis.size();
            Matrix span = detail::three_col_span(im_left, im_right, a, b, c, m, n, w, block_basis);
            rep.rank += bareiss_rank(span).rank;
        }
        rep.quotient = rep.ambient - rep.rank;
        rep.oracle = classical_dim(shape, m * n);
    }
    rep.pass = Int(rep.quotient) == rep.oracle;
    return rep;
}

/// The ten tuples with columns between 1 and 3 checked at the paper's central
/// weights (all weights when `all_weights` is set and the box count is small).
inline std::vector<QuotientReport> three_col_suite(int m, int n, PsiVariant variant,
                                                   bool all_weights = false) {
    std::vector<QuotientReport> out;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b; ++c) {
                if (all_weights && a + b + c <= 6) {
                    out.push_back(three_col_quotient(a, b, c, m, n, std::nullopt, variant));
                } else {
                    BiWeight w = central_weight(a + b + c, m, n);
                    out.push_back(three_col_quotient(a, b, c, m, n, w, variant));
                }
            }
    return out;
}

/// dim wedge^k = sum over shapes of dim V_lambda(C^m) dim V_lambda'(C^n), and
/// the joint kernel of the raising operators is one line per shape.
inline CheckReport decomposition_check(int k, int m, int n) {
    CheckReport rep;
    rep.suite = "decomposition";
    rep.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    auto shapes = partitions_in_rectangle(k, m, n);

    Int total = 0;
    for (const auto& lambda : shapes)
        total += classical_dim(lambda, m) * classical_dim(lambda.conjugate(), n);
    Int dim = binomial(m * n, k);
    rep.add("dim.sum", total == dim, total.str() + " vs " + dim.str());

    ModuleShape shape(m, n, {k});
    auto groups = basis_by_weight(shape);
    auto raising = raising_generators(m, n);
    size_t hw_total = 0;
    bool one_line_each = true;
    std::string witness;
    std::map<BiWeight, size_t> nullity;
    for (const auto& [w, basis] : groups) {
        // stack the raising operators restricted to this weight block
        std::vector<std::vector<QRat>> rows;
        for (const auto& g : raising) {
            std::map<BasisIndex, size_t> target_index;
            std::vector<std::vector<QRat>> grows;
            for (size_t col = 0; col < basis.size(); ++col) {
                ModuleElement img = tensor_apply(g, ModuleElement::basis_vector(shape, basis[col]));
                for (const auto& [tb, tc] : img.terms) {
                    auto [it, fresh] = target_index.emplace(tb, grows.size());
                    if (fresh) grows.push_back(std::vector<QRat>(basis.size()));
                    grows[it->second][col] = tc;
                }
            }
            for (auto& r : grows) rows.push_back(std::move(r));
        }
        Matrix stacked(rows.size(), basis.size());
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t cc = 0; cc < basis.size(); ++cc) stacked.at(r, cc) = rows[r][cc];
        size_t nl = basis.size() - bareiss_rank(stacked).rank;
        nullity[w] = nl;
        hw_total += nl;
    }
    for (const auto& lambda : shapes) {
        BiWeight expected{std::vector<int>(static_cast<size_t>(m), 0),
                          std::vector<int>(static_cast<size_t>(n), 0)};
        for (int i = 1; i <= m; ++i) expected.left[static_cast<size_t>(i - 1)] = lambda.part(i);
        Partition conj = lambda.conjugate();
        for (int j = 1; j <= n; ++j) expected.right[static_cast<size_t>(j - 1)] = conj.part(j);
        auto it = nullity.find(expected);
        if (it == nullity.end() || it->second != 1) {
            one_line_each = false;
            witness = lambda.to_string();
            break;
        }
    }
    rep.add("hw.one_line_per_shape", one_line_each, witness);
    rep.add("hw.count", hw_total == shapes.size(),
            std::to_string(hw_total) + " vs " + std::to_string(shapes.size()));
    return rep;
}

} // namespace uqmn
