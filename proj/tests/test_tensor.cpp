#include "uqmn/tensor.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqmn;

namespace {

ModuleElement pair_vec(int m, int n, std::vector<int> a, std::vector<int> b, QRat c = QRat(1)) {
    ModuleShape shape(m, n, {static_cast<int>(a.size()), static_cast<int>(b.size())});
    return ModuleElement::basis_vector(shape, {ColumnSet(std::move(a)), ColumnSet(std::move(b))},
                                       std::move(c));
}

const GeneratorId EL1{Side::left, GenKind::E, 1};

} // namespace

TEST_CASE("coproduct action on two factors", "[tensor]") {
    CHECK(tensor_apply(EL1, pair_vec(2, 2, {1}, {2})) == pair_vec(2, 2, {1}, {1}, QRat::qpow(-1)));
    CHECK(tensor_apply(EL1, pair_vec(2, 2, {2}, {4})) ==
          pair_vec(2, 2, {1}, {4}) + pair_vec(2, 2, {2}, {3}, QRat::q()));
    ModuleShape shape(2, 2, {1, 1});
    CHECK(tensor_apply(EL1, ModuleElement(shape)).is_zero());
}

TEST_CASE("left and right coproduct actions commute on tensor shapes", "[tensor]") {
    std::vector<ModuleShape> shapes = {ModuleShape(2, 2, {1, 1}),    ModuleShape(2, 2, {2, 1}),
                                       ModuleShape(2, 3, {1, 1}),    ModuleShape(3, 2, {2, 1}),
                                       ModuleShape(2, 2, {2, 2, 1}), ModuleShape(3, 3, {2, 1}),
                                       ModuleShape(2, 3, {2, 2}),    ModuleShape(3, 2, {1, 1, 1})};
    for (const auto& shape : shapes) {
        for (const auto& b : module_basis(shape)) {
            ModuleElement v = ModuleElement::basis_vector(shape, b);
            for (const auto& gl : ef_generators(Side::left, shape.m, shape.n))
                for (const auto& gr : ef_generators(Side::right, shape.m, shape.n))
                    CHECK(tensor_apply(gl, tensor_apply(gr, v)) ==
                          tensor_apply(gr, tensor_apply(gl, v)));
        }
    }
}

TEST_CASE("classical coproduct limit at q = 1", "[tensor]") {
    // at q = 1 the coproduct action degenerates to the Leibniz rule
    ModuleShape shape(2, 2, {1, 1});
    for (const auto& b : module_basis(shape)) {
        ModuleElement v = ModuleElement::basis_vector(shape, b);
        for (const auto& g : ef_generators(Side::left, 2, 2)) {
            ModuleElement img = tensor_apply(g, v);
            ModuleShape fshape(2, 2, {1});
            std::map<BasisIndex, Rational> classical;
            for (int j = 0; j < 2; ++j) {
                ModuleElement fi = apply_generator(
                    g, ModuleElement::basis_vector(fshape, {b[static_cast<size_t>(j)]}));
                for (const auto& [fb, fc] : fi.terms) {
                    BasisIndex nb = b;
                    nb[static_cast<size_t>(j)] = fb[0];
                    classical[nb] += fc.evaluate(Rational(1));
                }
            }
            std::erase_if(classical, [](const auto& kv) { return kv.second == 0; });
            std::map<BasisIndex, Rational> qimg;
            for (const auto& [ib, ic] : img.terms) qimg[ib] = ic.evaluate(Rational(1));
            CHECK(qimg == classical);
        }
    }
}

TEST_CASE("weight space extraction", "[tensor]") {
    ModuleShape w2(2, 2, {2});
    WeightSpaceBasis ws = weight_space(w2, BiWeight{{1, 1}, {1, 1}});
    REQUIRE(ws.basis.size() == 2);
    CHECK(ws.basis[0] == BasisIndex{ColumnSet({1, 4})});
    CHECK(ws.basis[1] == BasisIndex{ColumnSet({2, 3})});

    ModuleShape w1(2, 2, {1});
    CHECK(weight_space(w1, BiWeight{{1, 0}, {1, 0}}).basis ==
          std::vector<BasisIndex>{{ColumnSet({1})}});
    CHECK(weight_space(w1, BiWeight{{2, 0}, {0, 0}}).basis.empty());

    size_t total = 0;
    for (const auto& [w, basis] : basis_by_weight(w2)) total += basis.size();
    CHECK(total == 6);
}

TEST_CASE("normal basis pairing holds on wedge and tensor shapes", "[tensor]") {
    CHECK(verify_normal_basis(ModuleShape(2, 2, {1})).all_pass());
    CHECK(verify_normal_basis(ModuleShape(2, 2, {2})).all_pass());
    CHECK(verify_normal_basis(ModuleShape(2, 3, {1, 1})).all_pass());
    CHECK(verify_normal_basis(ModuleShape(2, 2, {2, 1})).all_pass());
}

TEST_CASE("adjoint transposes weight blocks and stays equivariant", "[tensor]") {
    // mu: wedge^2 -> wedge^1 x wedge^1 modeled on a straightening image
    ModuleShape src(2, 2, {2}), tgt(2, 2, {1, 1});
    auto mu = EquivariantMap::from_function(src, tgt, [&](const ModuleElement& x) {
        // v_{c1 < c2} -> q * c1 x c2 - c2 x c1, the q-antisymmetrizer
        ModuleElement out(tgt);
        for (const auto& [b, coeff] : x.terms) {
            int c1 = b[0].elems[0], c2 = b[0].elems[1];
            out.add_term({ColumnSet({c1}), ColumnSet({c2})}, coeff * QRat::q());
            out.add_term({ColumnSet({c2}), ColumnSet({c1})}, coeff * QRat(-1));
        }
        return out;
    });
    // this model map is not equivariant; the adjoint must still transpose
    EquivariantMap adj = mu.adjoint();
    CHECK(adj.source == tgt);
    CHECK(adj.target == src);
    for (const auto& [w, blk] : mu.blocks) {
        auto it = adj.blocks.find(w);
        if (blk.mat.rows == 0 && blk.mat.cols == 0) continue;
        REQUIRE(it != adj.blocks.end());
        CHECK(it->second.mat == blk.mat.transposed());
    }
    // double adjoint restores the map
    EquivariantMap back = adj.adjoint();
    for (const auto& [w, blk] : mu.blocks) {
        if (blk.tgt.empty()) continue;
        CHECK(back.blocks.at(w).mat == blk.mat);
    }
}

TEST_CASE("apply_on_factors keeps identity factors untouched", "[tensor]") {
    ModuleShape src(2, 2, {1}), tgt(2, 2, {1});
    auto scale = EquivariantMap::from_function(src, tgt, [&](const ModuleElement& x) {
        return x * QRat::q();
    });
    ModuleElement v = pair_vec(2, 2, {1}, {2});
    ModuleElement out = apply_on_factors(scale, v, 1, 2);
    CHECK(out == pair_vec(2, 2, {1}, {2}, QRat::q()));
    ModuleElement out0 = apply_on_factors(scale, v, 0, 1);
    CHECK(out0 == pair_vec(2, 2, {1}, {2}, QRat::q()));
}
