#include "cmnet/commands.hpp"
#include "cmnet/recurrence.hpp"
#include "cmnet/theorems.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmnet;
using oracle::ev;

namespace {

RecurrenceContext context_for(Instance& inst)
{
    MIdeal M = M_ideal(inst.net.base(), bad_primes(inst.net.base().curve, inst.support), 200);
    return RecurrenceContext(inst.net, inst.support, M.generator);
}

}  // namespace

TEST_CASE("class number one")
{
    CHECK(order_is_pid(FieldParams::make(-1, 1)));
    CHECK(order_is_pid(FieldParams::make(-2, 1)));
    CHECK(order_is_pid(FieldParams::make(-3, 1)));
    CHECK(order_is_pid(FieldParams::make(-3, 2)));
    CHECK_FALSE(order_is_pid(FieldParams::make(-5, 1)));
    CHECK_FALSE(order_is_pid(FieldParams::make(-1, 3)));
}

TEST_CASE("denominator generators")
{
    FieldParams p = FieldParams::make(-1, 1);
    CHECK(generates_denominator(ev(p, "1/2"), ev(p, "1+i")));
    CHECK(generates_denominator(ev(p, "1/2"), ev(p, "1-i")));
    CHECK_FALSE(generates_denominator(ev(p, "1/2"), ev(p, "2")));
    CHECK(generates_denominator(ev(p, "-1"), ev(p, "i")));
    CHECK(generates_denominator(ev(p, "3/(2-i)^2"), ev(p, "2-i")));
    CHECK_FALSE(generates_denominator(ev(p, "3/(2-i)^2"), ev(p, "2+i")));
}

TEST_CASE("recurrence over the first instance")
{
    Instance ex1(oracle::example1());
    RecurrenceContext ctx = context_for(ex1);
    CHECK(ctx.is_pid());
    const FieldParams& p = ex1.net.params();
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            OrderElem alpha(p, a + 3, b), beta(p, 1, a), gamma(p, b, 1);
            RecurrenceReport r = ctx.verify(alpha, beta, gamma);
            if (!r.hypothesis) {
                CHECK_FALSE(r.skip_reason.empty());
                continue;
            }
            CHECK(r.psi_ok);
            CHECK(r.g_ok);
            CHECK(r.b_ok);
        }
    }
}

TEST_CASE("recurrence over the second instance")
{
    Instance ex2(oracle::example2());
    RecurrenceContext ctx = context_for(ex2);
    const FieldParams& p = ex2.net.params();
    REQUIRE(ctx.M().has_value());
    CHECK(are_associates(ctx.M()->to_qf(), QFElem::w(p)));

    OrderElem alpha(p, 0, 2), beta(p, 0, 1), gamma(p, 1, 0);
    CHECK(ctx.hypothesis(alpha, beta, gamma));
    RecurrenceReport r = ctx.verify(alpha, beta, gamma);
    CHECK(r.pass());
    REQUIRE(r.witness.has_value());

    std::string why;
    CHECK_FALSE(ctx.hypothesis(OrderElem(p, 1, 0), OrderElem(p, 1, 1), OrderElem(p, 2, 0), &why));
    CHECK_FALSE(why.empty());
    RecurrenceReport skipped = ctx.verify(OrderElem(p, 1, 0), OrderElem(p, 1, 1), OrderElem(p, 2, 0));
    CHECK_FALSE(skipped.hypothesis);
    CHECK_FALSE(skipped.pass());

    // psi side holds regardless of the hypothesis
    RecurrenceReport free = ctx.verify(OrderElem(p, 3, 1), OrderElem(p, 1, 1), OrderElem(p, 1, 0), false);
    CHECK(free.psi_ok);
}

TEST_CASE("sites carry the denominator generator")
{
    Instance ex2(oracle::example2());
    RecurrenceContext ctx = context_for(ex2);
    const FieldParams& p = ex2.net.params();
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            OrderElem z(p, a, b);
            const RecurrenceContext::Site& s = ctx.site(z);
            const CurvePoint& R = ex2.net.point(z);
            CHECK(s.zero == R.infinity);
            if (!s.zero) {
                CHECK(generates_denominator(R.x, s.B));
            }
        }
    }
}
