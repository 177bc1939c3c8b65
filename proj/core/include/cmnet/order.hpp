#ifndef CMNET_ORDER_HPP
#define CMNET_ORDER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmnet/quadfield.hpp"

namespace cmnet {

/// a + b w in Z[w]. Arithmetic is overflow checked.
struct OrderElem {
    std::int64_t a = 0;
    std::int64_t b = 0;
    FieldParams params;

    OrderElem() = default;
    OrderElem(const FieldParams& p, std::int64_t a_, std::int64_t b_) : a(a_), b(b_), params(p) {}

    bool is_zero() const { return a == 0 && b == 0; }
    std::int64_t norm() const;
    QFElem to_qf() const { return QFElem(params, static_cast<long>(a), static_cast<long>(b)); }

    OrderElem operator+(const OrderElem& o) const;
    OrderElem operator-(const OrderElem& o) const;
    OrderElem operator-() const;
    OrderElem operator*(const OrderElem& o) const;

    friend bool operator==(const OrderElem& x, const OrderElem& y)
    {
        return x.params == y.params && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const OrderElem& x, const OrderElem& y) { return !(x == y); }

    std::string to_string() const;
    static OrderElem parse(const FieldParams& params, const std::string& text);
};

/// Matrix of multiplication by alpha acting on coordinate column vectors.
struct MultMatrix {
    std::array<std::array<std::int64_t, 2>, 2> m{};
    std::int64_t det() const;
    std::array<std::int64_t, 2> apply(std::int64_t x, std::int64_t y) const;
};

OrderElem ord_mul(const OrderElem& x, const OrderElem& y);
MultMatrix mult_matrix(const OrderElem& alpha);
std::optional<OrderElem> ord_divides(const OrderElem& m, const OrderElem& alpha);

/// Nonzero elements of norm at most bound, ordered by norm, then |b|, |a|,
/// then positive coordinates first.
std::vector<OrderElem> ord_enumerate_by_norm(const FieldParams& params, std::int64_t bound);
bool enumeration_less(const OrderElem& x, const OrderElem& y);

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

}  // namespace cmnet

#endif
