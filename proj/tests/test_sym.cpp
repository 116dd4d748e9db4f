#include "uqmn/sym.hpp"

#include "uqmn/relations.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqmn;

namespace {

DegreeMatrix dm22(std::vector<int> d) { return DegreeMatrix(2, 2, std::move(d)); }

} // namespace

TEST_CASE("straightening relations on two letters", "[sym]") {
    // z_{1,2} z_{1,1} -> q z_{1,1} z_{1,2}
    CHECK(sym_straighten({{1, 2}, {1, 1}}, 2, 2) ==
          SymElement::monomial(dm22({1, 1, 0, 0}), QRat::q()));
    // z_{2,1} z_{1,1} -> q z_{1,1} z_{2,1}
    CHECK(sym_straighten({{2, 1}, {1, 1}}, 2, 2) ==
          SymElement::monomial(dm22({1, 0, 1, 0}), QRat::q()));
    // z_{1,2} z_{2,1}: plain swap
    CHECK(sym_straighten({{1, 2}, {2, 1}}, 2, 2) == SymElement::monomial(dm22({0, 1, 1, 0})));
    // z_{2,2} z_{1,1} -> z_{1,1} z_{2,2} + (q - 1/q) z_{2,1} z_{1,2}
    SymElement expected = SymElement::monomial(dm22({1, 0, 0, 1})) +
                          SymElement::monomial(dm22({0, 1, 1, 0}), QRat::q() - QRat::qpow(-1));
    CHECK(sym_straighten({{2, 2}, {1, 1}}, 2, 2) == expected);
    // an already-ordered word is its own normal form
    CHECK(sym_straighten({{1, 1}, {2, 1}, {1, 2}}, 2, 2) ==
          SymElement::monomial(dm22({1, 1, 1, 0})));
}

TEST_CASE("straightening is confluent on short words", "[sym]") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
        std::vector<std::pair<int, int>> letters;
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i) letters.push_back({i, j});
        MonomialWord w(4);
        std::function<void(size_t)> rec = [&](size_t t) {
            if (t == w.size()) {
                CHECK(sym_straighten(w, m, n, ReduceStrategy::leftmost) ==
                      sym_straighten(w, m, n, ReduceStrategy::rightmost));
                return;
            }
            for (const auto& z : letters) {
                w[t] = z;
                rec(t + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("closed-form actions, spot values", "[sym]") {
    // E_1^R(z_{1,2}) = z_{1,1}
    CHECK(sym_apply(Side::right, GenKind::E, 1, 1, dm22({0, 1, 0, 0})) ==
          SymElement::monomial(dm22({1, 0, 0, 0})));
    // E_1^R(z_{1,1} z_{1,2}) = q^{-1} z_{1,1}^2
    CHECK(sym_apply(Side::right, GenKind::E, 1, 1, dm22({1, 1, 0, 0})) ==
          SymElement::monomial(dm22({2, 0, 0, 0}), QRat::qpow(-1)));
    // E_1^L(z_{2,1} z_{2,2}) = z_{1,1} z_{2,2} + q z_{2,1} z_{1,2}
    SymElement expected = SymElement::monomial(dm22({1, 0, 0, 1})) +
                          SymElement::monomial(dm22({0, 1, 1, 0}), QRat::q());
    CHECK(sym_apply(Side::left, GenKind::E, 1, 1, dm22({0, 0, 1, 1})) == expected);
}

TEST_CASE("closed forms match the coproduct route", "[sym]") {
    for (auto [m, n, k] : {std::tuple{2, 2, 3}, {2, 3, 2}}) {
        for (const auto& d : sym_basis(k, m, n)) {
            MonomialWord w;
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= m; ++i)
                    for (int t = 0; t < d.at(i, j); ++t) w.push_back({i, j});
            for (Side side : {Side::left, Side::right}) {
                int rank = side == Side::left ? m : n;
                for (int idx = 1; idx < rank; ++idx)
                    for (GenKind kind : {GenKind::E, GenKind::F}) {
                        GeneratorId gen{side, kind, idx};
                        INFO(d.to_string() + " " + gen.to_string());
                        CHECK(sym_apply(side, kind, idx, 1, d) ==
                              sym_word_apply(side, kind, idx, w, m, n));
                    }
            }
        }
    }
}

TEST_CASE("dimension and agreement suite", "[sym]") {
    CheckReport r22 = sym_dimension_check(2, 2, 2);
    INFO(r22.to_text());
    CHECK(r22.all_pass());
    CHECK(sym_basis(2, 2, 2).size() == 10);
    CHECK(sym_basis(3, 2, 2).size() == 20);
    CheckReport r23 = sym_dimension_check(3, 2, 3);
    INFO(r23.to_text());
    CHECK(r23.all_pass());
}

TEST_CASE("symmetric power carries both presentations and they commute", "[sym]") {
    for (auto [m, n, k] : {std::tuple{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}}) {
        SymModel model(m, n, k);
        INFO("m=" << m << " n=" << n << " k=" << k);
        CheckReport left = check_uq_relations(model, Side::left);
        INFO(left.to_text());
        CHECK(left.all_pass());
        CheckReport right = check_uq_relations(model, Side::right);
        INFO(right.to_text());
        CHECK(right.all_pass());
        CHECK(check_commutation(model).all_pass());
    }
}

TEST_CASE("classical limit of the sym action", "[sym]") {
    // at q = 1 the action degenerates to the polynomial derivation action:
    // the coefficient of each target monomial is the exponent of the variable
    // that was moved
    const int m = 2, n = 2, k = 3;
    for (const auto& d : sym_basis(k, m, n)) {
        for (Side side : {Side::left, Side::right})
            for (GenKind kind : {GenKind::E, GenKind::F}) {
                SymElement img = sym_apply(side, kind, 1, 1, d);
                for (const auto& [e, c] : img.terms) {
                    int moved_exponent = 0;
                    for (int i = 1; i <= m; ++i)
                        for (int j = 1; j <= n; ++j)
                            if (e.at(i, j) == d.at(i, j) - 1) moved_exponent = d.at(i, j);
                    CHECK(c.evaluate(Rational(1)) == moved_exponent);
                }
            }
    }
}

TEST_CASE("monomial rendering", "[sym]") {
    CHECK(dm22({2, 0, 1, 0}).to_string() == "z[1,1]^2 z[2,1]");
    CHECK(DegreeMatrix(2, 2).to_string() == "1");
    CHECK(dm22({0, 1, 0, 2}).to_string() == "z[1,2] z[2,2]^2");
}
