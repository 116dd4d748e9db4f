#pragma once

#include "uqmn/bimodule.hpp"
#include "uqmn/linalg.hpp"
#include "uqmn/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace uqmn {

/// Coproduct action of one generator on an r-factor element: E acts with
/// q^{-h} on the factors to its left, F with q^{h} on the factors to its
/// right, q^eps factor-wise.
inline ModuleElement tensor_apply(const GeneratorId& g, const ModuleElement& x) {
    const int m = x.shape.m, n = x.shape.n;
    const int r = x.shape.factors();
    if (r == 1) return apply_generator(g, x);
    ModuleElement out(x.shape);
    for (const auto& [b, coeff] : x.terms) {
        if (g.kind == GenKind::Qeps) {
            int e = 0;
            for (const auto& c : b) e += eps_value(g.side, g.index, biweight_of(c, m, n));
            out.add_term(b, coeff * QRat::qpow(e));
            continue;
        }
        for (int j = 0; j < r; ++j) {
            ModuleShape fshape(m, n, {x.shape.degrees[static_cast<size_t>(j)]});
            ModuleElement img =
                apply_generator(g, ModuleElement::basis_vector(fshape, {b[static_cast<size_t>(j)]}));
            if (img.is_zero()) continue;
            int hshift = 0;
            if (g.kind == GenKind::E) {
                for (int k = 0; k < j; ++k)
                    hshift -= h_value(g.side, g.index, biweight_of(b[static_cast<size_t>(k)], m, n));
            } else {
                for (int k = j + 1; k < r; ++k)
                    hshift += h_value(g.side, g.index, biweight_of(b[static_cast<size_t>(k)], m, n));
            }
            QRat pre = coeff * QRat::qpow(hshift);
            for (const auto& [fb, fc] : img.terms) {
                BasisIndex nb = b;
                nb[static_cast<size_t>(j)] = fb[0];
                out.add_term(std::move(nb), pre * fc);
            }
        }
    }
    return out;
}

struct WeightSpaceBasis {
    ModuleShape shape;
    BiWeight biweight;
    std::vector<BasisIndex> basis;  // canonical lexicographic order
};

/// Basis grouped by bi-weight, each group in canonical order.
inline std::map<BiWeight, std::vector<BasisIndex>> basis_by_weight(const ModuleShape& shape) {
    std::map<BiWeight, std::vector<BasisIndex>> groups;
    for (auto& b : module_basis(shape)) groups[biweight_of(b, shape.m, shape.n)].push_back(std::move(b));
    return groups;
}

inline WeightSpaceBasis weight_space(const ModuleShape& shape, const BiWeight& w) {
    WeightSpaceBasis ws{shape, w, {}};
    for (auto& b : module_basis(shape))
        if (biweight_of(b, shape.m, shape.n) == w) ws.basis.push_back(std::move(b));
    return ws;
}

/// A bi-weight-graded family of matrices over Q(q) between two modules with
/// their canonical bases; rows index the target basis, columns the source.
struct EquivariantMap {
    struct Block {
        std::vector<BasisIndex> src;
        std::vector<BasisIndex> tgt;
        Matrix mat;  // tgt.size() x src.size()
    };

    ModuleShape source;
    ModuleShape target;
    std::map<BiWeight, Block> blocks;
    std::map<std::string, std::string> meta;

    /// Materialize a map from its action on source basis vectors.  The
    /// function must be weight-preserving; anything else is rejected.
    template <class Fn>
    static EquivariantMap from_function(const ModuleShape& src_shape, const ModuleShape& tgt_shape,
                                        Fn&& fn) {
        EquivariantMap map;
        map.source = src_shape;
        map.target = tgt_shape;
        auto src_groups = basis_by_weight(src_shape);
        auto tgt_groups = basis_by_weight(tgt_shape);
        for (auto& [w, src_list] : src_groups) {
            Block blk;
            blk.src = src_list;
            auto tg = tgt_groups.find(w);
            if (tg != tgt_groups.end()) blk.tgt = tg->second;
            blk.mat = Matrix(blk.tgt.size(), blk.src.size());
            for (size_t col = 0; col < blk.src.size(); ++col) {
                ModuleElement img = fn(ModuleElement::basis_vector(src_shape, blk.src[col]));
                for (const auto& [tb, tc] : img.terms) {
                    auto it = std::lower_bound(blk.tgt.begin(), blk.tgt.end(), tb);
                    if (it == blk.tgt.end() || *it != tb)
                        throw std::invalid_argument("map image leaves the source bi-weight space");
                    blk.mat.at(static_cast<size_t>(it - blk.tgt.begin()), col) = tc;
                }
            }
            map.blocks.emplace(w, std::move(blk));
        }
        return map;
    }

    [[nodiscard]] ModuleElement apply(const ModuleElement& x) const {
        if (x.shape != source) throw std::invalid_argument("apply: element not in source module");
        ModuleElement out(target);
        for (const auto& [b, coeff] : x.terms) {
            BiWeight w = biweight_of(b, source.m, source.n);
            auto bit = blocks.find(w);
            if (bit == blocks.end()) continue;
            const Block& blk = bit->second;
            auto sit = std::lower_bound(blk.src.begin(), blk.src.end(), b);
            size_t col = static_cast<size_t>(sit - blk.src.begin());
            for (size_t row = 0; row < blk.tgt.size(); ++row) {
                const QRat& e = blk.mat.at(row, col);
                if (!e.is_zero()) out.add_term(blk.tgt[row], coeff * e);
            }
        }
        return out;
    }

    /// Per-weight transpose; equivariant whenever source and target carry
    /// normal bases.
    [[nodiscard]] EquivariantMap adjoint() const {
        EquivariantMap adj;
        adj.source = target;
        adj.target = source;
        for (const auto& [w, blk] : blocks) {
            if (blk.tgt.empty() && blk.src.empty()) continue;
            Block t;
            t.src = blk.tgt;
            t.tgt = blk.src;
            t.mat = blk.mat.transposed();
            adj.blocks.emplace(w, std::move(t));
        }
        return adj;
    }

    [[nodiscard]] size_t total_rank() const {
        size_t r = 0;
        for (const auto& [w, blk] : blocks) r += bareiss_rank(blk.mat).rank;
        return r;
    }

    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["source"] = source.degrees;
        j["target"] = target.degrees;
        j["m"] = source.m;
        j["n"] = source.n;
        nlohmann::ordered_json bs = nlohmann::ordered_json::object();
        for (const auto& [w, blk] : blocks) {
            nlohmann::ordered_json e;
            e["rows"] = blk.mat.rows;
            e["cols"] = blk.mat.cols;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (size_t r = 0; r < blk.mat.rows; ++r) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (size_t c = 0; c < blk.mat.cols; ++c) row.push_back(blk.mat.at(r, c).to_string());
                rows.push_back(row);
            }
            e["entries"] = rows;
            nlohmann::ordered_json src = nlohmann::ordered_json::array();
            for (const auto& b : blk.src) src.push_back(basis_to_string(b));
            nlohmann::ordered_json tgt = nlohmann::ordered_json::array();
            for (const auto& b : blk.tgt) tgt.push_back(basis_to_string(b));
            e["src"] = src;
            e["tgt"] = tgt;
            bs[w.to_string()] = e;
        }
        j["blocks"] = bs;
        if (!meta.empty()) {
            nlohmann::ordered_json mj = nlohmann::ordered_json::object();
            for (const auto& [k, v] : meta) mj[k] = v;
            j["meta"] = mj;
        }
        return j;
    }
};

inline EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: shape mismatch");
    return EquivariantMap::from_function(f.source, g.target,
                                         [&](const ModuleElement& x) { return g.apply(f.apply(x)); });
}

/// Apply `f` to the factor range [lo, hi) of x, leaving the other factors
/// alone; identity factors are never materialized as matrices.
inline ModuleElement apply_on_factors(const EquivariantMap& f, const ModuleElement& x, int lo, int hi) {
    const int m = x.shape.m, n = x.shape.n;
    std::vector<int> sub_degrees(x.shape.degrees.begin() + lo, x.shape.degrees.begin() + hi);
    if (ModuleShape(m, n, sub_degrees) != f.source)
        throw std::invalid_argument("apply_on_factors: factor range does not match map source");
    std::vector<int> new_degrees(x.shape.degrees.begin(), x.shape.degrees.begin() + lo);
    new_degrees.insert(new_degrees.end(), f.target.degrees.begin(), f.target.degrees.end());
    new_degrees.insert(new_degrees.end(), x.shape.degrees.begin() + hi, x.shape.degrees.end());
    ModuleShape out_shape(m, n, new_degrees);
    ModuleElement out(out_shape);
    for (const auto& [b, coeff] : x.terms) {
        BasisIndex sub(b.begin() + lo, b.begin() + hi);
        ModuleElement img = f.apply(ModuleElement::basis_vector(f.source, sub));
        for (const auto& [ib, ic] : img.terms) {
            BasisIndex nb(b.begin(), b.begin() + lo);
            nb.insert(nb.end(), ib.begin(), ib.end());
            nb.insert(nb.end(), b.begin() + hi, b.end());
            out.add_term(std::move(nb), coeff * ic);
        }
    }
    return out;
}

/// Checks map g = g map as exact matrix identities, for every E/F generator
/// of both families, by evaluating on every source basis vector.
inline bool is_equivariant(const EquivariantMap& map, std::string* first_violation = nullptr) {
    std::vector<GeneratorId> gens = ef_generators(Side::left, map.source.m, map.source.n);
    auto rgens = ef_generators(Side::right, map.source.m, map.source.n);
    gens.insert(gens.end(), rgens.begin(), rgens.end());
    for (const auto& g : gens) {
        for (const auto& b : module_basis(map.source)) {
            ModuleElement x = ModuleElement::basis_vector(map.source, b);
            ModuleElement lhs = map.apply(tensor_apply(g, x));
            ModuleElement rhs = tensor_apply(g, map.apply(x));
            if (!(lhs == rhs)) {
                if (first_violation)
                    *first_violation = g.to_string() + " on " + basis_to_string(b);
                return false;
            }
        }
    }
    return true;
}

/// Scalar by which q^{h_i^side} acts on a basis index.
inline QRat qh_scalar(Side side, int i, const BasisIndex& b, int m, int n) {
    return QRat::qpow(h_value(side, i, biweight_of(b, m, n)));
}

/// Confirms the pairing identity  q * q^{h_i}(v_b) <E_i b, b'> = <F_i b', b>
/// for every basis pair and every E/F index of both families; the canonical
/// basis is declared orthonormal.
inline CheckReport verify_normal_basis(const ModuleShape& shape) {
    CheckReport rep;
    rep.suite = "normal_basis";
    rep.params = {{"m", std::to_string(shape.m)},
                  {"n", std::to_string(shape.n)},
                  {"factors", std::to_string(shape.factors())}};
    auto basis = module_basis(shape);
    for (Side side : {Side::left, Side::right}) {
        int rank = side == Side::left ? shape.m : shape.n;
        for (int i = 1; i < rank; ++i) {
            GeneratorId Eg{side, GenKind::E, i}, Fg{side, GenKind::F, i};
            std::string id = std::string("ef_pairing.") + (side == Side::left ? "L" : "R") +
                             std::to_string(i);
            std::string witness;
            // <E b, b'> over all b, and <F b', b> over all b', compared as
            // sparse pairings.
            std::map<std::pair<BasisIndex, BasisIndex>, QRat> lhs, rhs;
            for (const auto& b : basis) {
                ModuleElement Eb = tensor_apply(Eg, ModuleElement::basis_vector(shape, b));
                for (const auto& [bp, c] : Eb.terms)
                    lhs[{b, bp}] = QRat::q() * qh_scalar(side, i, b, shape.m, shape.n) * c;
                ModuleElement Fb = tensor_apply(Fg, ModuleElement::basis_vector(shape, b));
                for (const auto& [bp, c] : Fb.terms) rhs[{bp, b}] = c;
            }
            bool ok = lhs == rhs;
            if (!ok) {
                for (const auto& [key, val] : lhs) {
                    auto it = rhs.find(key);
                    if (it == rhs.end() || !(it->second == val)) {
                        witness = basis_to_string(key.first) + " / " + basis_to_string(key.second);
                        break;
                    }
                }
                if (witness.empty() && !rhs.empty()) witness = "extra F-side pairing entries";
            }
            rep.add(id, ok, witness);
        }
    }
    return rep;
}

} // namespace uqmn
