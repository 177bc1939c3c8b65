#include "cmnet/order.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cmnet/error.hpp"
#include "int128.hpp"

namespace cmnet {

namespace {

std::int64_t narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) {
        fail(ErrorKind::BoundExceeded, "order arithmetic overflowed 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

void same(const OrderElem& x, const OrderElem& y)
{
    if (x.params != y.params) {
        fail(ErrorKind::ParamsMismatch, "order elements from different orders");
    }
}

}  // namespace

std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    return narrow(static_cast<i128>(x) + y);
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    return narrow(static_cast<i128>(x) * y);
}

std::int64_t OrderElem::norm() const
{
    i128 A = a, B = b;
    return narrow(A * A + A * B * params.A + B * B * params.D);
}

OrderElem OrderElem::operator+(const OrderElem& o) const
{
    same(*this, o);
    return OrderElem(params, checked_add(a, o.a), checked_add(b, o.b));
}

OrderElem OrderElem::operator-(const OrderElem& o) const
{
    same(*this, o);
    return OrderElem(params, narrow(static_cast<i128>(a) - o.a), narrow(static_cast<i128>(b) - o.b));
}

OrderElem OrderElem::operator-() const
{
    return OrderElem(params, narrow(-static_cast<i128>(a)), narrow(-static_cast<i128>(b)));
}

OrderElem OrderElem::operator*(const OrderElem& o) const
{
    return ord_mul(*this, o);
}

std::string OrderElem::to_string() const
{
    std::string s = std::to_string(a);
    s += b < 0 ? "-" : "+";
    mpz_class mag(static_cast<long>(b));
    s += mpz_class(abs(mag)).get_str();
    return s + "*w";
}

OrderElem OrderElem::parse(const FieldParams& params, const std::string& text)
{
    QFElem x = QFElem::parse(params, text);
    if (x.a().get_den() != 1 || x.b().get_den() != 1 || !x.a().get_num().fits_slong_p() ||
        !x.b().get_num().fits_slong_p()) {
        fail(ErrorKind::Parse, "'" + text + "' is not an element of Z[w]");
    }
    return OrderElem(params, x.a().get_num().get_si(), x.b().get_num().get_si());
}

OrderElem ord_mul(const OrderElem& x, const OrderElem& y)
{
    same(x, y);
    i128 a = x.a, b = x.b, c = y.a, d = y.b;
    i128 bd = b * d;
    return OrderElem(x.params, narrow(a * c - bd * x.params.D), narrow(a * d + b * c + bd * x.params.A));
}

std::int64_t MultMatrix::det() const
{
    return narrow(static_cast<i128>(m[0][0]) * m[1][1] - static_cast<i128>(m[0][1]) * m[1][0]);
}

std::array<std::int64_t, 2> MultMatrix::apply(std::int64_t x, std::int64_t y) const
{
    return {narrow(static_cast<i128>(m[0][0]) * x + static_cast<i128>(m[0][1]) * y),
            narrow(static_cast<i128>(m[1][0]) * x + static_cast<i128>(m[1][1]) * y)};
}

MultMatrix mult_matrix(const OrderElem& alpha)
{
    MultMatrix t;
    t.m[0][0] = alpha.a;
    t.m[0][1] = checked_mul(-alpha.b, alpha.params.D);
    t.m[1][0] = alpha.b;
    t.m[1][1] = checked_add(alpha.a, checked_mul(alpha.b, alpha.params.A));
    return t;
}

std::optional<OrderElem> ord_divides(const OrderElem& m, const OrderElem& alpha)
{
    same(m, alpha);
    if (m.is_zero()) {
        fail(ErrorKind::ZeroDivisor, "divisibility test by zero");
    }
    MultMatrix t = mult_matrix(m);
    i128 det = t.det();
    // q = adj(T) alpha / det
    i128 qa = static_cast<i128>(t.m[1][1]) * alpha.a - static_cast<i128>(t.m[0][1]) * alpha.b;
    i128 qb = -static_cast<i128>(t.m[1][0]) * alpha.a + static_cast<i128>(t.m[0][0]) * alpha.b;
    if (qa % det != 0 || qb % det != 0) {
        return std::nullopt;
    }
    return OrderElem(m.params, narrow(qa / det), narrow(qb / det));
}

bool enumeration_less(const OrderElem& x, const OrderElem& y)
{
    auto key = [](const OrderElem& e) {
        return std::make_tuple(e.norm(), e.b < 0 ? -e.b : e.b, e.a < 0 ? -e.a : e.a, e.a < 0, e.b < 0);
    };
    return key(x) < key(y);
}

std::vector<OrderElem> ord_enumerate_by_norm(const FieldParams& params, std::int64_t bound)
{
    std::vector<OrderElem> out;
    if (bound < 1) {
        return out;
    }
    // 4 norm = (2a + bA)^2 + b^2 (4D - A^2)
    const double gap = static_cast<double>(4 * params.D - params.A * params.A);
    const auto bmax = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(bound) / gap)) + 1;
    const auto smax = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(bound))) + 1;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        std::int64_t amin = (-smax - b * params.A) / 2 - 1;
        std::int64_t amax = (smax - b * params.A) / 2 + 1;
        for (std::int64_t a = amin; a <= amax; ++a) {
            OrderElem e(params, a, b);
            if (!e.is_zero() && e.norm() <= bound) {
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end(), enumeration_less);
    return out;
}

}  // namespace cmnet
