#include "cmnet/heights.hpp"

#include <algorithm>

#include "cmnet/error.hpp"
#include "cmnet/theorems.hpp"

namespace cmnet {

namespace {

// x = 0 has infinite valuation, which the max() clamps away
long neg_part(const QFElem& x, const PrimeIdeal& prime)
{
    if (x.is_zero()) {
        return 0;
    }
    return std::max(-valuation(x, prime), 0L);
}

void require_good(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime, const char* what)
{
    if (P.infinity) {
        fail(ErrorKind::Precondition, std::string(what) + " is the point at infinity");
    }
    if (is_singular_reduction(E, P, prime)) {
        fail(ErrorKind::SingularPoint, std::string(what) + " is singular at " + prime.to_string());
    }
}

}  // namespace

mpq_class lambda_tilde(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime)
{
    require_good(E, P, prime, "point");
    mpq_class out(neg_part(P.x, prime), 2);
    out.canonicalize();
    return out;
}

HeightCheck verify_quasi_parallelogram(const Curve& E, const CurvePoint& P, const CurvePoint& Q,
                                       const PrimeIdeal& prime)
{
    require_good(E, P, prime, "P");
    require_good(E, Q, prime, "Q");
    if (P.x == Q.x) {
        fail(ErrorKind::Precondition, "P = +-Q");
    }
    CurvePoint S = point_add(E, P, Q);
    CurvePoint T = point_add(E, P, point_neg(E, Q));
    require_good(E, S, prime, "P+Q");
    require_good(E, T, prime, "P-Q");
    HeightCheck out;
    out.lhs = lambda_tilde(E, S, prime) + lambda_tilde(E, T, prime);
    out.rhs = 2 * lambda_tilde(E, P, prime) + 2 * lambda_tilde(E, Q, prime) + valuation(P.x - Q.x, prime);
    out.pass = out.lhs == out.rhs;
    return out;
}

HeightCheck verify_height_net_identity(NetLattice& L, const Index& v, const PrimeIdeal& prime)
{
    const Curve& E = L.base().curve;
    if (v.first == 0 && v.second == 0) {
        fail(ErrorKind::Precondition, "index is zero");
    }
    const CurvePoint& R = L.point(v.first, v.second);
    require_good(E, L.base().P, prime, "P");
    require_good(E, L.base().Q, prime, "Q");
    require_good(E, L.point(1, 1), prime, "P+Q");
    require_good(E, R, prime, "vP");
    mpq_class lP = lambda_tilde(E, L.base().P, prime);
    mpq_class lQ = lambda_tilde(E, L.base().Q, prime);
    mpq_class lPQ = lambda_tilde(E, L.point(1, 1), prime);
    mpq_class a(static_cast<long>(v.first));
    mpq_class b(static_cast<long>(v.second));
    HeightCheck out;
    out.lhs = lambda_tilde(E, R, prime);
    out.rhs = a * a * lP + b * b * lQ + a * b * (lPQ - lP - lQ) + valuation(L.psi(v), prime);
    out.pass = out.lhs == out.rhs;
    return out;
}

HeightCheck verify_multiplication_height(DivisionSequence& seq, std::int64_t m, const PrimeIdeal& prime)
{
    const Curve& E = seq.curve();
    if (m == 0) {
        fail(ErrorKind::Precondition, "m is zero");
    }
    CurvePoint R = point_mul(E, m, seq.point());
    require_good(E, seq.point(), prime, "P");
    require_good(E, R, prime, "mP");
    mpq_class mm(static_cast<long>(m));
    HeightCheck out;
    out.lhs = lambda_tilde(E, R, prime);
    out.rhs = mm * mm * lambda_tilde(E, seq.point(), prime) + valuation(seq.psi(m), prime);
    out.pass = out.lhs == out.rhs;
    return out;
}

MuTriple mu_triple(NetLattice& L, const OrderElem& r, const PrimeIdeal& prime)
{
    if (r.is_zero() || !in_annihilator(L, r, prime)) {
        fail(ErrorKind::NotAnnihilating, r.to_string() + " does not annihilate at " + prime.to_string());
    }
    OrderElem w(r.params, 0, 1);
    OrderElem one_w(r.params, 1, 1);
    MuTriple out;
    out.mu = g_direct(L, r, prime);
    out.mu_w = g_direct(L, r * w, prime);
    out.mu_1w = g_direct(L, r * one_w, prime);
    return out;
}

}  // namespace cmnet
