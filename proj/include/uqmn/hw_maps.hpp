#pragma once

#include "uqmn/tableaux.hpp"
#include "uqmn/tensor.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace uqmn {

/// The column-major subset c_lambda = {(i,j) : i <= lambda'_j, j <= lambda_i};
/// its basis vector is the highest weight vector of bi-weight
/// (lambda, lambda').
inline ColumnSet hw_subset(const Partition& lambda, int m, int n) {
    if (!lambda.fits(m, n)) throw std::invalid_argument("shape does not fit the m x n rectangle");
    Partition conj = lambda.conjugate();
    std::vector<int> elems;
    for (int j = 1; j <= lambda.part(1); ++j)
        for (int i = 1; i <= conj.part(j); ++i) elems.push_back(cell(i, j, m));
    std::sort(elems.begin(), elems.end());
    return ColumnSet(std::move(elems));
}

struct HWImage {
    Partition lambda;
    ModuleElement image;
};

/// The two one-box-split highest weight vectors of weight (lambda, lambda'),
/// normalized so the (1,1)-cell coefficient is +1:
///   v  in wedge^{|lambda|-1} (x) wedge^1  with coefficients
///       (-1)^{lambda'_1+..+lambda'_{l-1}+k} q^{k+l-lambda_k}, and
///   v' in wedge^1 (x) wedge^{|lambda|-1}  with
///       (-1)^{lambda'_1+..+lambda'_{l-1}+k} q^{lambda'_l-k-l}.
inline std::pair<ModuleElement, ModuleElement> hw_split_vectors(const Partition& lambda, int m, int n) {
    if (lambda.size() < 1) throw std::invalid_argument("shape must have at least one box");
    const int a = lambda.size() - 1;
    Partition conj = lambda.conjugate();
    ColumnSet clam = hw_subset(lambda, m, n);
    ModuleShape right_split(m, n, {a, 1}), left_split(m, n, {1, a});
    ModuleElement v(right_split), vp(left_split);
    QRat alpha11, beta11;
    for (int k = 1; k <= lambda.rows(); ++k)
        for (int l = 1; l <= lambda.part(k); ++l) {
            int sgn_exp = k;
            for (int lp = 1; lp < l; ++lp) sgn_exp += conj.part(lp);
            QRat sgn(sgn_exp % 2 ? -1 : 1);
            QRat alpha = sgn * QRat::qpow(k + l - lambda.part(k));
            QRat beta = sgn * QRat::qpow(conj.part(l) - k - l);
            ColumnSet t = clam;
            t.elems.erase(std::find(t.elems.begin(), t.elems.end(), cell(k, l, m)));
            ColumnSet chi({cell(k, l, m)});
            v.add_term({t, chi}, alpha);
            vp.add_term({chi, t}, beta);
            if (k == 1 && l == 1) {
                alpha11 = alpha;
                beta11 = beta;
            }
        }
    return {v * (QRat(1) / alpha11), vp * (QRat(1) / beta11)};
}

namespace detail {

/// Depth below the highest weights; every lowering generator raises it by 1.
inline int weight_depth(const BiWeight& w) {
    int d = 0;
    for (size_t i = 0; i < w.left.size(); ++i) d += static_cast<int>(i) * w.left[i];
    for (size_t k = 0; k < w.right.size(); ++k) d += static_cast<int>(k) * w.right[k];
    return d;
}

/// Coordinates of an element in a fixed ordered basis; throws when a term
/// falls outside the listed basis.
inline std::vector<QRat> coords_in(const ModuleElement& x, const std::vector<BasisIndex>& basis) {
    std::vector<QRat> v(basis.size());
    for (const auto& [b, c] : x.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), b);
        if (it == basis.end() || *it != b)
            throw std::logic_error("element leaves the expected weight space");
        v[static_cast<size_t>(it - basis.begin())] = c;
    }
    return v;
}

/// Incremental echelon basis over Q(q) used to keep only pairs whose source
/// side adds rank.
struct Echelon {
    std::vector<std::vector<QRat>> rows;  // reduced rows with leading 1

    bool absorb(std::vector<QRat> v) {
        for (const auto& r : rows) {
            size_t p = 0;
            while (p < r.size() && r[p].is_zero()) ++p;
            if (p < v.size() && !v[p].is_zero()) {
                QRat f = v[p];
                for (size_t c = p; c < v.size(); ++c) v[c] -= f * r[c];
            }
        }
        size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        QRat inv = QRat(1) / v[p];
        for (size_t c = p; c < v.size(); ++c) v[c] *= inv;
        rows.push_back(std::move(v));
        return true;
    }
};

} // namespace detail

/// The unique equivariant extension of the prescribed highest-weight images:
/// each isotypic component of the (multiplicity-free) source is generated by
/// lowering monomials and the map is solved weight space by weight space.
/// Images that are not annihilated by every raising generator are rejected.
inline EquivariantMap extend_equivariantly(const std::vector<HWImage>& images,
                                           const ModuleShape& source) {
    if (images.empty()) throw std::invalid_argument("no highest-weight images supplied");
    const int m = source.m, n = source.n;
    ModuleShape target = images.front().image.shape;
    for (const auto& hw : images) {
        if (hw.image.shape != target)
            throw std::invalid_argument("highest-weight images live in different modules");
        for (const auto& g : raising_generators(m, n))
            if (!tensor_apply(g, hw.image).is_zero())
                throw std::invalid_argument("image of " + hw.lambda.to_string() +
                                            " is not a highest-weight vector");
    }

    auto src_groups = basis_by_weight(source);
    auto tgt_groups = basis_by_weight(target);
    auto lowering = lowering_generators(m, n);

    struct Collected {
        std::vector<std::vector<QRat>> xs, ys;
        detail::Echelon echelon;
    };
    std::map<BiWeight, Collected> collected;

    using Pair = std::pair<ModuleElement, ModuleElement>;
    std::map<int, std::deque<Pair>> frontier;
    for (const auto& hw : images) {
        ColumnSet clam = hw_subset(hw.lambda, m, n);
        ModuleElement x = ModuleElement::basis_vector(source, {clam});
        BiWeight w = biweight_of(BasisIndex{clam}, m, n);
        BiWeight wimg{std::vector<int>(static_cast<size_t>(m), 0),
                      std::vector<int>(static_cast<size_t>(n), 0)};
        if (!hw.image.is_zero()) wimg = biweight_of(hw.image.terms.begin()->first, m, n);
        if (!hw.image.is_zero() && !(wimg == w))
            throw std::invalid_argument("image of " + hw.lambda.to_string() + " has the wrong bi-weight");
        frontier[detail::weight_depth(w)].push_back({std::move(x), hw.image});
    }

    while (!frontier.empty()) {
        auto level = frontier.begin();
        auto pairs = std::move(level->second);
        frontier.erase(level);
        for (auto& [x, y] : pairs) {
            BiWeight w = biweight_of(x.terms.begin()->first, m, n);
            auto& slot = collected[w];
            std::vector<QRat> xv = detail::coords_in(x, src_groups.at(w));
            if (!slot.echelon.absorb(xv)) continue;  // dependent source vector
            auto tg = tgt_groups.find(w);
            std::vector<QRat> yv =
                tg == tgt_groups.end() ? std::vector<QRat>{} : detail::coords_in(y, tg->second);
            if (tg == tgt_groups.end() && !y.is_zero())
                throw std::logic_error("image occupies a weight absent from the target");
            slot.xs.push_back(std::move(xv));
            slot.ys.push_back(std::move(yv));
            for (const auto& g : lowering) {
                ModuleElement gx = tensor_apply(g, x);
                if (gx.is_zero()) continue;
                ModuleElement gy = tensor_apply(g, y);
                BiWeight gw = biweight_of(gx.terms.begin()->first, m, n);
                frontier[detail::weight_depth(gw)].push_back({std::move(gx), std::move(gy)});
            }
        }
    }

    EquivariantMap map;
    map.source = source;
    map.target = target;
    for (const auto& [w, src_basis] : src_groups) {
        auto it = collected.find(w);
        if (it == collected.end() || it->second.xs.size() != src_basis.size())
            throw std::logic_error("lowering monomials failed to span the weight space " + w.to_string());
        const auto& slot = it->second;
        size_t ds = src_basis.size();
        auto tg = tgt_groups.find(w);
        size_t dt = tg == tgt_groups.end() ? 0 : tg->second.size();
        Matrix X(ds, ds), Y(ds, dt);
        for (size_t t = 0; t < ds; ++t)
            for (size_t c = 0; c < ds; ++c) X.at(t, c) = slot.xs[t][c];
        for (size_t t = 0; t < ds; ++t)
            for (size_t c = 0; c < dt; ++c) Y.at(t, c) = slot.ys[t][c];
        EquivariantMap::Block blk;
        blk.src = src_basis;
        if (tg != tgt_groups.end()) blk.tgt = tg->second;
        blk.mat = solve_exact(X, Y).transposed();
        map.blocks.emplace(w, std::move(blk));
    }
    return map;
}

/// wedge^{a+1} -> wedge^a (x) wedge^1 built from the alpha-coefficient
/// highest-weight vectors of every shape with a+1 boxes.
inline EquivariantMap psi_map(int a, int m, int n) {
    std::vector<HWImage> images;
    for (const auto& lambda : partitions_in_rectangle(a + 1, m, n))
        images.push_back({lambda, hw_split_vectors(lambda, m, n).first});
    EquivariantMap map = extend_equivariantly(images, ModuleShape(m, n, {a + 1}));
    map.meta["normalization"] = "coefficient of the (1,1) cell is 1 in every component";
    return map;
}

/// wedge^{a+1} -> wedge^1 (x) wedge^a, beta-coefficient side.
inline EquivariantMap psi_prime_map(int a, int m, int n) {
    std::vector<HWImage> images;
    for (const auto& lambda : partitions_in_rectangle(a + 1, m, n))
        images.push_back({lambda, hw_split_vectors(lambda, m, n).second});
    EquivariantMap map = extend_equivariantly(images, ModuleShape(m, n, {a + 1}));
    map.meta["normalization"] = "coefficient of the (1,1) cell is 1 in every component";
    return map;
}

// ---------------------------------------------------------------------------
// The hand-tuned 2x2 maps, indexed by source degree: psi_k and psi'_k map
// wedge^k to wedge^{k-1} (x) wedge^1 and wedge^1 (x) wedge^{k-1}.
// ---------------------------------------------------------------------------

namespace detail {

inline ModuleElement pair22(int deg_a, int deg_b, std::vector<std::vector<int>> a,
                            std::vector<std::vector<int>> b, std::vector<QRat> coeffs) {
    ModuleShape shape(2, 2, {deg_a, deg_b});
    ModuleElement e(shape);
    for (size_t t = 0; t < coeffs.size(); ++t)
        e.add_term({ColumnSet(a[t]), ColumnSet(b[t])}, coeffs[t]);
    return e;
}

} // namespace detail

/// Exact printed coefficients of the straightening maps out of wedge^2 and
/// wedge^3 for m = n = 2; psi_4 and psi'_4 are the (unique up to scale)
/// generic maps.
inline EquivariantMap special_psi(int k) {
    const QRat q = QRat::q();
    if (k == 2) {
        std::vector<HWImage> images;
        images.push_back({Partition{1, 1},
                          detail::pair22(1, 1, {{2}, {1}}, {{1}, {2}}, {-q, q * q})});
        images.push_back({Partition{2},
                          detail::pair22(1, 1, {{3}, {1}}, {{1}, {3}}, {-q, q * q})});
        return extend_equivariantly(images, ModuleShape(2, 2, {2}));
    }
    if (k == 3) {
        QRat denom = QRat(ZPoly::parse("q^2+1"));
        QRat A = QRat(ZPoly::parse("q+1")) * QRat(ZPoly::parse("q^2+q-1")) / denom;
        QRat B = QRat(ZPoly::parse("q^3-2q+1")) / denom;
        QRat C = QRat(ZPoly::parse("q^2+q-1")) * q;
        std::vector<HWImage> images;
        images.push_back(
            {Partition{2, 1},
             detail::pair22(2, 1, {{2, 3}, {1, 4}, {1, 3}, {1, 2}}, {{1}, {1}, {2}, {3}},
                            {A, -B, -C, C})});
        return extend_equivariantly(images, ModuleShape(2, 2, {3}));
    }
    if (k == 4) return psi_map(3, 2, 2);
    throw std::invalid_argument("special psi is defined for source degrees 2, 3, 4");
}

inline EquivariantMap special_psi_prime(int k) {
    const QRat q = QRat::q();
    if (k == 1) return psi_prime_map(0, 2, 2);
    if (k == 2) {
        std::vector<HWImage> images;
        images.push_back(
            {Partition{1, 1}, detail::pair22(1, 1, {{2}, {1}}, {{1}, {2}}, {QRat(1), -q})});
        images.push_back(
            {Partition{2}, detail::pair22(1, 1, {{3}, {1}}, {{1}, {3}}, {QRat(1), -q})});
        return extend_equivariantly(images, ModuleShape(2, 2, {2}));
    }
    if (k == 3) {
        QRat denom = QRat(ZPoly::parse("q^2+1"));
        QRat D = q * q * q * QRat(ZPoly::parse("q+1")) / denom;
        QRat E = q * q * q * QRat(ZPoly::parse("q-1")) / denom;
        std::vector<HWImage> images;
        images.push_back(
            {Partition{2, 1},
             detail::pair22(1, 2, {{1}, {1}, {2}, {3}}, {{2, 3}, {1, 4}, {1, 3}, {1, 2}},
                            {-D, E, q, -q})});
        return extend_equivariantly(images, ModuleShape(2, 2, {3}));
    }
    if (k == 4) return psi_prime_map(3, 2, 2);
    throw std::invalid_argument("special psi' is defined for source degrees 1, 2, 3, 4");
}

enum class PsiVariant { generic, special22 };

/// psi_{a,b} = (I (x) adjoint(psi'_{b-1})) after (psi_a (x) I), mapping
/// wedge^{a+1} (x) wedge^{b-1} into wedge^a (x) wedge^b.
inline EquivariantMap compose_psi_ab(int a, int b, int m, int n, PsiVariant variant) {
    if (a < b || b < 1 || a + 1 > m * n)
        throw std::invalid_argument("compose_psi_ab requires a >= b >= 1 and a+1 <= mn");
    if (variant == PsiVariant::special22 && (m != 2 || n != 2))
        throw std::invalid_argument("the special maps are specific to m = n = 2");
    EquivariantMap head =
        variant == PsiVariant::special22 ? special_psi(a + 1) : psi_map(a, m, n);
    EquivariantMap tail_prime = variant == PsiVariant::special22
                                    ? special_psi_prime(b)
                                    : psi_prime_map(b - 1, m, n);
    EquivariantMap tail = tail_prime.adjoint();  // wedge^1 (x) wedge^{b-1} -> wedge^b
    ModuleShape source(m, n, {a + 1, b - 1});
    ModuleShape target(m, n, {a, b});
    EquivariantMap map = EquivariantMap::from_function(source, target, [&](const ModuleElement& x) {
        return apply_on_factors(tail, apply_on_factors(head, x, 0, 1), 1, 3);
    });
    map.meta["variant"] = variant == PsiVariant::special22 ? "special22" : "generic";
    return map;
}

struct SpecialMaps {
    EquivariantMap psi2, psi2p, psi3, psi3p;
    CheckReport square;
};

/// The four printed maps together with the commuting-square check
/// (psi'_2 (x) id) psi_3 = (id (x) psi_2) psi'_3 on wedge^3.  Exact equality
/// is checked as stated and, separately, equality up to one global scalar;
/// when the two sides are proportional the measured ratio is reported.
inline SpecialMaps special_maps_2x2() {
    SpecialMaps out{special_psi(2), special_psi_prime(2), special_psi(3), special_psi_prime(3), {}};
    out.square.suite = "commuting_square";
    out.square.params = {{"m", "2"}, {"n", "2"}};
    ModuleShape cube(2, 2, {3});
    QRat ratio;  // lhs = ratio * rhs, once determined
    bool exact = true, proportional = true;
    std::string exact_witness, prop_witness;
    for (const auto& b : module_basis(cube)) {
        ModuleElement v = ModuleElement::basis_vector(cube, b);
        ModuleElement lhs = apply_on_factors(out.psi2p, out.psi3.apply(v), 0, 1);
        ModuleElement rhs = apply_on_factors(out.psi2, out.psi3p.apply(v), 1, 2);
        if (!(lhs == rhs) && exact) {
            exact = false;
            exact_witness = basis_to_string(b);
        }
        if (ratio.is_zero()) {
            for (const auto& [tb, tc] : rhs.terms) {
                QRat l = lhs.coeff_of(tb);
                if (!l.is_zero()) {
                    ratio = l / tc;
                    break;
                }
            }
        }
        if (!ratio.is_zero() && !(lhs == rhs * ratio)) {
            proportional = false;
            prop_witness = basis_to_string(b);
        }
    }
    if (!exact && proportional)
        exact_witness += "; sides are proportional with lhs = " + ratio.to_string() + " * rhs";
    out.square.add("square.exact", exact, exact_witness);
    out.square.add("square.up_to_scalar", proportional, prop_witness);
    return out;
}

} // namespace uqmn
