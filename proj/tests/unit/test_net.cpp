#include <random>

#include "cmnet/net.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::ev;
using oracle::kind_of;

TEST_CASE("net values")
{
    NetLattice L1(oracle::example1().base_pair());
    NetLattice L2(oracle::example2().base_pair());
    const FieldParams& p1 = L1.params();
    const FieldParams& p2 = L2.params();
    CHECK(L1.psi(0, 0).is_zero());
    CHECK(L1.psi(1, 0) == QFElem(p1, 1L));
    CHECK(L1.psi(0, 1) == QFElem(p1, 1L));
    CHECK(L1.psi(1, 1) == QFElem(p1, 1L));
    CHECK(L1.psi(2, 1) == ev(p1, "-1+i/2"));
    CHECK(L2.psi(1, -1) == QFElem(p2, mpq_class(3, 2)));
    CHECK(L2.psi(1, -1) == ev(p2, "-(1+w)(1-w)/w^2"));
    CHECK(L2.psi(2, 2) == ev(p2, "-w^4(3-2w)/(1-w)^3"));
    // x(wP) - x(P)
    CHECK(L2.psi(1, -1) == L2.base().Q.x - L2.base().P.x);
    CHECK(L2.phi(0, 1) == ev(p2, "-1/w^2"));
    CHECK(L2.phi(2, 0) == QFElem(p2, 20L));
    CHECK(L2.phi(0, 2) == QFElem(p2, mpq_class(41, 16)));
    CHECK(L2.phi(2, 2) == ev(p2, "w^4(-147-32w)/(1-w)^8"));
    for (int a = -4; a <= 4; ++a) {
        for (int b = -4; b <= 4; ++b) {
            CHECK(L1.psi(-a, -b) == -L1.psi(a, b));
        }
    }
}

TEST_CASE("net axiom")
{
    NetLattice L1(oracle::example1().base_pair());
    NetLattice L2(oracle::example2().base_pair());
    CHECK(verify_net_axiom(L1, {0, 0}, {0, 0}, {0, 0}, {0, 0}));
    CHECK(verify_net_axiom(L2, {1, 0}, {0, 1}, {1, 1}, {0, 0}));
    for (NetLattice* L : {&L1, &L2}) {
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                for (int c = -2; c <= 2; ++c) {
                    CHECK(verify_net_axiom(*L, {a, b}, {b, c}, {c, a}, {1, -1}));
                }
            }
        }
    }
}

TEST_CASE("net axiom on random tuples")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& cfg : {oracle::example1(), oracle::example2()}) {
        NetLattice L(cfg.base_pair());
        for (int k = 0; k < 100; ++k) {
            Index v[4];
            for (Index& x : v) {
                x = {c(rng), c(rng)};
            }
            CHECK(verify_net_axiom(L, v[0], v[1], v[2], v[3]));
        }
    }
}

TEST_CASE("coordinate identity and the two-point relation")
{
    for (const auto& cfg : {oracle::example1(), oracle::example2()}) {
        BasePair B = cfg.base_pair();
        NetLattice L(B);
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                oracle::Pt R = oracle::combo(B, a, b);
                if (R.inf) {
                    continue;
                }
                const QFElem& psi = L.psi(a, b);
                CHECK(L.phi(a, b) / (psi * psi) == R.x);
            }
        }
        // Psi_{v+u} Psi_{v-u} = -Psi_v^2 Psi_u^2 (x(vP) - x(uP))
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> c(-3, 3);
        for (int k = 0; k < 60; ++k) {
            Index v{c(rng), c(rng)}, u{c(rng), c(rng)};
            const CurvePoint& V = L.point(v.first, v.second);
            const CurvePoint& U = L.point(u.first, u.second);
            if (V.infinity || U.infinity) {
                continue;
            }
            QFElem lhs = L.psi(v.first + u.first, v.second + u.second) * L.psi(v.first - u.first, v.second - u.second);
            QFElem rhs = -(L.psi(v) * L.psi(v) * L.psi(u) * L.psi(u) * (V.x - U.x));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("change of basis")
{
    NetLattice L2(oracle::example2().base_pair());
    const FieldParams& p = L2.params();
    ChangeOfBasisResult r = verify_change_of_basis(L2, OrderElem(p, 0, 1), OrderElem(p, 2, 0));
    CHECK(r.pass);
    CHECK(r.lhs == L2.psi(0, 2));
    CHECK(verify_change_of_basis(L2, OrderElem(p, 2, 1), OrderElem(p, 1, 0)).pass);
    CHECK(verify_change_of_basis(L2, OrderElem(p, 1, 0), OrderElem(p, -1, 2)).pass);
    CHECK(kind_of([&] { verify_change_of_basis(L2, OrderElem(p, 0, 0), OrderElem(p, 1, 1)); }) ==
          ErrorKind::DegenerateTransformedPair);
}

TEST_CASE("lattice dump")
{
    NetLattice L(oracle::example2().base_pair());
    std::string csv = net_csv(L, 1);
    CHECK(csv.rfind("a,b,psi,phi\n", 0) == 0);
    CHECK(csv.find("1,-1,3/2,") != std::string::npos);
    L.fill(2);
    CHECK(L.psi(2, -2) == -L.psi(-2, 2));
}
