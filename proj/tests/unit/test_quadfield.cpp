#include <random>

#include "cmnet/error.hpp"
#include "cmnet/quadfield.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::kind_of;

namespace {

const FieldParams Zi = FieldParams::make(-1);
const FieldParams Z2 = FieldParams::make(-2);
const FieldParams Z3 = FieldParams::make(-3);

}  // namespace

TEST_CASE("field parameters")
{
    CHECK(Zi.A == 0);
    CHECK(Zi.D == 1);
    CHECK(Z2.D == 2);
    CHECK(Z3.A == 1);
    CHECK(Z3.D == 1);
    FieldParams c = FieldParams::make(-1, 3);
    CHECK(c.A == 0);
    CHECK(c.D == 9);
    FieldParams c3 = FieldParams::make(-3, 2);
    CHECK(c3.A == 2);
    CHECK(c3.D == 4);
    CHECK(kind_of([] { FieldParams::make(-4); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { FieldParams::make(5); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { FieldParams::make(-1, 0); }) == ErrorKind::InvalidParams);
}

TEST_CASE("arithmetic examples")
{
    QFElem i = QFElem::w(Zi);
    QFElem one(Zi, 1L);
    CHECK((one + i) * (one - i) == QFElem(Zi, 2L));
    QFElem w = QFElem::w(Z2);
    CHECK(w * w == QFElem(Z2, -2L));
    CHECK((QFElem(Z2, 1L) + w) * (QFElem(Z2, 1L) - w) == QFElem(Z2, 3L));
    CHECK(qf_arith(QFElem(Z2, 1L), w, ArithOp::Div) == QFElem(Z2, mpq_class(0), mpq_class(-1, 2)));
    CHECK(kind_of([&] { (void)(one / QFElem(Zi)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { (void)(one + w); }) == ErrorKind::ParamsMismatch);
}

TEST_CASE("conjugate, norm, trace")
{
    QFElem i = QFElem::w(Zi);
    CHECK(i.conj() == -i);
    CHECK(QFElem(Zi, 3L).conj() == QFElem(Zi, 3L));
    CHECK(QFElem(Z2, 1L, 1L).conj() == QFElem(Z2, 1L, -1L));
    CHECK(QFElem(Zi, 1L, 1L).norm() == 2);
    CHECK(QFElem(Z2, 1L, -1L).norm() == 3);
    CHECK(QFElem(Z2, 3L, 1L).norm() == 11);
    // conj(w) = A - w when A != 0
    CHECK(QFElem::w(Z3).conj() == QFElem(Z3, 1L, -1L));
    CHECK(QFElem::w(Z3).norm() == 1);
    CHECK(QFElem(Z2, 2L, 3L).trace() == 4);
}

TEST_CASE("integrality on the maximal order")
{
    // w = (1 + sqrt-3)/2
    CHECK(QFElem::w(Z3).is_integral());
    CHECK_FALSE(QFElem(Zi, mpq_class(1, 2)).is_integral());
    CHECK(QFElem(Zi, 3L, -2L).is_integral());
    // in Z[3i], i = w/3 is integral in Z[i] but not a point of Z[3i]
    FieldParams c = FieldParams::make(-1, 3);
    CHECK(QFElem(c, mpq_class(0), mpq_class(1, 3)).is_integral());
    CHECK_FALSE(QFElem(c, mpq_class(0), mpq_class(1, 6)).is_integral());
    CHECK(QFElem(Zi, mpq_class(3, 4), mpq_class(1, 6)).denominator() == 12);
}

TEST_CASE("text round trip")
{
    QFElem x = QFElem::parse(Z2, "-3/2+1/4*w");
    CHECK(x.a() == mpq_class(-3, 2));
    CHECK(x.b() == mpq_class(1, 4));
    CHECK(x.to_string() == "-3/2+1/4*w");
    CHECK(QFElem::parse(Z2, "7").to_string() == "7");
    CHECK(QFElem::parse(Z2, "2-1*w").b() == -1);
    CHECK(QFElem::parse(Z2, "0+-1*w").b() == -1);
    CHECK(kind_of([] { QFElem::parse(Z2, ""); }) == ErrorKind::Parse);
    CHECK(kind_of([] { QFElem::parse(Z2, "1/0"); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { QFElem::parse(Z2, "1+2*x"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { QFElem::parse(Z2, "1/-2"); }) == ErrorKind::Parse);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        QFElem y = oracle::random_elem(rng, Z2, 50, 9);
        CHECK(QFElem::parse(Z2, y.to_string()) == y);
    }
}

TEST_CASE("ring laws on random elements")
{
    std::mt19937_64 rng(42);
    for (const FieldParams& params : {Zi, Z2, Z3, FieldParams::make(-7, 2)}) {
        for (int k = 0; k < 150; ++k) {
            QFElem x = oracle::random_elem(rng, params);
            QFElem y = oracle::random_elem(rng, params);
            QFElem z = oracle::random_elem(rng, params);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
            CHECK(x.norm() >= 0);
            if (!x.is_zero()) {
                CHECK(x * qf_arith(QFElem(params, 1L), x, ArithOp::Div) == QFElem(params, 1L));
                CHECK(x.pow(-2) * x.pow(2) == QFElem(params, 1L));
            }
        }
    }
}

TEST_CASE("table expression reader")
{
    CHECK(oracle::ev(Zi, "(1+i)^-1") == QFElem(Zi, mpq_class(1, 2), mpq_class(-1, 2)));
    CHECK(oracle::ev(Zi, "-3i(1+i)^3") == QFElem::w(Zi) * QFElem(Zi, 1L, 1L).pow(3) * -3L);
    CHECK(oracle::ev(Z2, "-(1+w)(1-w)/w^2") == QFElem(Z2, mpq_class(3, 2)));
    CHECK(oracle::ev(Z2, "3^3*11^3") == QFElem(Z2, 35937L));
}
