#include "uqmn/exterior.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqmn;

namespace {

ModuleElement wedge_vec(int m, int n, std::vector<int> elems, QRat c = QRat(1)) {
    ModuleShape shape(m, n, {static_cast<int>(elems.size())});
    return ModuleElement::basis_vector(shape, {ColumnSet(std::move(elems))}, std::move(c));
}

} // namespace

TEST_CASE("elementary operators on the subset basis", "[exterior]") {
    CHECK(apply_e(1, wedge_vec(2, 2, {2})) == wedge_vec(2, 2, {1}));
    CHECK(apply_f(1, wedge_vec(2, 2, {1, 2})).is_zero());
    EWeight alpha = EWeight::kappa(1, 2, 4);
    CHECK(apply_qweight(alpha, wedge_vec(2, 2, {2, 3})) == wedge_vec(2, 2, {2, 3}, QRat::qpow(-1)));
    CHECK_THROWS_AS(apply_e(4, wedge_vec(2, 2, {1})), std::out_of_range);
}

TEST_CASE("bracket operators: closed form spot values", "[exterior]") {
    CHECK(bracket_E(1, 2, wedge_vec(2, 2, {3})) == wedge_vec(2, 2, {1}));
    CHECK(bracket_E(1, 2, wedge_vec(2, 2, {2, 3})) == wedge_vec(2, 2, {1, 2}, QRat(-1)));
    CHECK(bracket_E(1, 2, wedge_vec(2, 2, {1, 3})).is_zero());
    CHECK(bracket_F(1, 2, wedge_vec(2, 2, {1})) == wedge_vec(2, 2, {3}));
    CHECK(bracket_F(1, 2, wedge_vec(2, 2, {1, 2})) == wedge_vec(2, 2, {2, 3}, QRat(-1)));
    CHECK(bracket_F(1, 2, wedge_vec(2, 2, {3})).is_zero());
}

TEST_CASE("bracket operators agree with nested commutators", "[exterior]") {
    for (int mn = 2; mn <= 8; ++mn) {
        int m = mn % 2 == 0 ? 2 : 1, n = mn / m;
        for (int p = 1; p <= std::min(mn, 4); ++p) {
            ModuleShape shape(m, n, {p});
            for (const auto& b : module_basis(shape)) {
                ModuleElement v = ModuleElement::basis_vector(shape, b);
                for (int i = 1; i <= mn - 1; ++i)
                    for (int j = i; j <= mn - 1; ++j) {
                        CHECK(bracket_E(i, j, v) == oracle::commutator_E(i, j, v));
                        CHECK(bracket_F(i, j, v) == oracle::commutator_F(i, j, v));
                    }
            }
        }
    }
}

TEST_CASE("weight commutation with elementary and bracket operators", "[exterior]") {
    const int m = 2, n = 3, mn = 6, p = 2;
    ModuleShape shape(m, n, {p});
    std::vector<EWeight> alphas;
    for (int t = 1; t <= mn; ++t) alphas.push_back(EWeight::eps(t, mn));
    for (int t = 1; t <= mn - 1; ++t) alphas.push_back(EWeight::h(t, mn));
    for (const auto& alpha : alphas) {
        for (const auto& b : module_basis(shape)) {
            ModuleElement v = ModuleElement::basis_vector(shape, b);
            for (int j = 1; j <= mn - 1; ++j) {
                int ke = pair_weight(alpha, ColumnSet({j + 1})) - pair_weight(alpha, ColumnSet({j}));
                CHECK(apply_e(j, apply_qweight(alpha, v)) ==
                      apply_qweight(alpha, apply_e(j, v)) * QRat::qpow(ke));
                CHECK(apply_f(j, apply_qweight(alpha, v)) ==
                      apply_qweight(alpha, apply_f(j, v)) * QRat::qpow(-ke));
            }
            for (int i = 1; i <= mn - 1; ++i)
                for (int j = i; j <= mn - 1; ++j) {
                    int ke = pair_weight(alpha, ColumnSet({j + 1})) - pair_weight(alpha, ColumnSet({i}));
                    CHECK(bracket_E(i, j, apply_qweight(alpha, v)) ==
                          apply_qweight(alpha, bracket_E(i, j, v)) * QRat::qpow(ke));
                }
        }
    }
}

TEST_CASE("basis enumeration is lexicographic and complete", "[exterior]") {
    auto s = subsets_lex(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == ColumnSet({1, 2}));
    CHECK(s[1] == ColumnSet({1, 3}));
    CHECK(s[2] == ColumnSet({1, 4}));
    CHECK(s[3] == ColumnSet({2, 3}));
    CHECK(s[4] == ColumnSet({2, 4}));
    CHECK(s[5] == ColumnSet({3, 4}));
    CHECK(subsets_lex(6, 0).size() == 1);
    CHECK(subsets_lex(6, 7).empty());

    ModuleShape pair_shape(2, 2, {1, 1});
    auto basis = module_basis(pair_shape);
    REQUIRE(basis.size() == 16);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
}

TEST_CASE("module element bookkeeping", "[exterior]") {
    ModuleElement x = wedge_vec(2, 2, {1, 2});
    x.add_term({ColumnSet({1, 2})}, QRat(-1));
    CHECK(x.is_zero());

    ModuleElement y = wedge_vec(2, 2, {1, 3}, QRat::q()) + wedge_vec(2, 2, {1, 2});
    CHECK(y.to_string() == "(1)\xC2\xB7{1,2} + (q)\xC2\xB7{1,3}");
}
