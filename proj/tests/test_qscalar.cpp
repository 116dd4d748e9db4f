#include "uqmn/qrat.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace uqmn;

namespace {
const QRat q = QRat::q();
const QRat qi = QRat::qpow(-1);
}

TEST_CASE("field operations reach canonical form", "[qscalar]") {
    CHECK(q + qi == QRat::parse("(q^2+1)/(q)"));
    CHECK(QRat(ZPoly::parse("q^2-1")) / QRat(ZPoly::parse("q-1")) == QRat(ZPoly::parse("q+1")));
    CHECK(((q - qi) * QRat(0)).is_zero());
    CHECK_THROWS_AS(q / QRat(0), division_by_zero);
}

TEST_CASE("canonical form is unique", "[qscalar]") {
    // same value assembled along two unreduced routes
    QRat a(ZPoly::parse("2q^3+2q"), ZPoly::parse("4q^2"));
    QRat b(ZPoly::parse("q^2+1"), ZPoly::parse("2q"));
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK(a.to_string() == b.to_string());

    // denominator sign is normalized
    QRat c(ZPoly::parse("q"), ZPoly::parse("-q+1"));
    CHECK(c.den().leading_coeff() > 0);
    CHECK(c == QRat(ZPoly::parse("-q"), ZPoly::parse("q-1")));

    // integer content is reduced only through the Z[q]-gcd
    QRat d(ZPoly::parse("2q"), ZPoly::parse("4"));
    CHECK(d == QRat(ZPoly::parse("q"), ZPoly::parse("2")));
    QRat e(ZPoly::parse("2q"), ZPoly::parse("3"));
    CHECK(e.num() == ZPoly::parse("2q"));
}

TEST_CASE("field axioms on a sample set", "[qscalar]") {
    std::vector<QRat> vals = {QRat(0),  QRat(1),  QRat(-2), q, qi, q + qi,
                              QRat(ZPoly::parse("q^2-1"), ZPoly::parse("q+2")),
                              QRat(ZPoly::parse("-3q+1"), ZPoly::parse("q^2+q+1"))};
    for (const auto& a : vals)
        for (const auto& b : vals)
            for (const auto& c : vals) {
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + b == b + a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
}

TEST_CASE("evaluation commutes with arithmetic", "[qscalar]") {
    CHECK((q - qi).evaluate(Rational(1)) == 0);
    CHECK(((qi - q) / (q - qi)).evaluate(Rational(2)) == -1);
    QRat special(ZPoly::parse("q^3-2q+1"), ZPoly::parse("q^2+1"));
    CHECK(special.evaluate(Rational(1)) == 0);
    CHECK_THROWS_AS(QRat(ZPoly::parse("1"), ZPoly::parse("q-1")).evaluate(Rational(1)), pole_error);

    std::vector<QRat> vals = {QRat(2), q, qi, q + QRat(1),
                              QRat(ZPoly::parse("q^2-1"), ZPoly::parse("q+2"))};
    Rational q0(3, 2);
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK((a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0));
            CHECK((a - b).evaluate(q0) == a.evaluate(q0) - b.evaluate(q0));
            CHECK((a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0));
            if (b.evaluate(q0) != 0) CHECK((a / b).evaluate(q0) == a.evaluate(q0) / b.evaluate(q0));
        }
}

TEST_CASE("quantum cartan values", "[qscalar]") {
    CHECK(quantum_cartan(0).is_zero());
    CHECK(quantum_cartan(1) == QRat(-1));
    // oracle: (q^2 - q^-2) must be (q - q^-1) times the claimed value
    QRat claimed = quantum_cartan(-2);
    CHECK(claimed * (q - qi) == QRat::qpow(2) - QRat::qpow(-2));
    CHECK(claimed == q + qi);
    for (int h = -6; h <= 6; ++h) {
        QRat v = quantum_cartan(h);
        // pole-free: denominator is a plain power of q
        int nonzero = 0;
        for (int d = 0; d <= v.den().degree(); ++d)
            if (v.den().coeff(d) != 0) ++nonzero;
        CHECK(nonzero == 1);
        CHECK(quantum_cartan(-h) == -v);
    }
}

TEST_CASE("text rendering round trip is bit exact", "[qscalar]") {
    std::vector<QRat> vals = {QRat(0), QRat(1), QRat(-1), QRat(12), q, QRat::qpow(-3),
                              q + qi, quantum_cartan(-4),
                              QRat(ZPoly::parse("-2q^3+q-5"), ZPoly::parse("3q^2+1")),
                              QRat(ZPoly::parse("q^10-123"), ZPoly::parse("q^7"))};
    for (const auto& v : vals) {
        CHECK(QRat::parse(v.to_string()) == v);
        CHECK(QRat::parse(v.to_string()).to_string() == v.to_string());
    }
    CHECK((q + qi).to_string() == "(q^2+1)/(q)");
}
