#include "cmnet/curve.hpp"
#include "cmnet/divpoly.hpp"
#include "cmnet/net.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::ev;
using oracle::kind_of;

TEST_CASE("division values")
{
    BasePair B1 = oracle::example1().base_pair();
    BasePair B2 = oracle::example2().base_pair();
    CHECK(psi_n(B1.curve, B1.P, 1) == QFElem(B1.params(), 1L));
    CHECK(psi_n(B1.curve, B1.P, 3) == QFElem(B1.params(), -13L));
    CHECK(psi_n(B2.curve, B2.P, 2) == QFElem(B2.params(), 4L));
    CHECK(phi_n(B2.curve, B2.P, 1) == B2.P.x);
    CHECK(phi_n(B2.curve, B2.P, 2) == QFElem(B2.params(), 20L));
    QFElem p3 = psi_n(B1.curve, B1.P, 3);
    CHECK(phi_n(B1.curve, B1.P, 3) / (p3 * p3) == ev(B1.params(), "-1/169"));
    CHECK(psi_n(B1.curve, B1.P, 0).is_zero());
    CHECK(kind_of([&] { psi_n(B1.curve, CurvePoint::at_infinity(), 2); }) == ErrorKind::Precondition);
}

TEST_CASE("EDS recurrence")
{
    BasePair B1 = oracle::example1().base_pair();
    DivisionSequence seq(B1.curve, B1.P);
    CHECK(verify_eds_recurrence(seq, 3, 2, 1));
    CHECK(verify_eds_recurrence(seq, 5, 4, 1));
    CHECK(kind_of([&] { verify_eds_recurrence(seq, 2, 2, 1); }) == ErrorKind::Precondition);
    for (std::int64_t n = 3; n <= 9; ++n) {
        for (std::int64_t m = 2; m < n; ++m) {
            for (std::int64_t r = 1; r < m; ++r) {
                CHECK(verify_eds_recurrence(seq, n, m, r));
            }
        }
    }
}

TEST_CASE("division values against the group law")
{
    for (const auto& cfg : {oracle::example1(), oracle::example2()}) {
        BasePair B = cfg.base_pair();
        NetLattice L(B);
        for (const CurvePoint& P : {B.P, B.Q}) {
            DivisionSequence seq(B.curve, P);
            oracle::Pt acc;
            oracle::Pt step{false, P.x, P.y};
            for (std::int64_t n = 1; n <= 12; ++n) {
                acc = oracle::add(B.curve, acc, step);
                if (acc.inf) {
                    continue;
                }
                const QFElem& psi = seq.psi(n);
                CHECK(seq.phi(n) / (psi * psi) == acc.x);
                CHECK(seq.psi(-n) == -psi);
            }
        }
        for (std::int64_t n = -10; n <= 10; ++n) {
            DivisionSequence sp(B.curve, B.P), sq(B.curve, B.Q);
            CHECK(L.psi(n, 0) == sp.psi(n));
            CHECK(L.psi(0, n) == sq.psi(n));
        }
    }
}
