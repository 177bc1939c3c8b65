#ifndef CMNET_QUADFIELD_HPP
#define CMNET_QUADFIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace cmnet {

/// K = Q(sqrt N) with the order Z[w] of conductor f, where w^2 = A w - D.
struct FieldParams {
    std::int64_t N = -1;
    std::int64_t f = 1;
    std::int64_t A = 0;
    std::int64_t D = 1;

    static FieldParams make(std::int64_t N, std::int64_t f = 1);

    // maximal order O_K = Z[wK], wK^2 = AK wK - DK; w = f wK
    std::int64_t AK() const { return A / f; }
    std::int64_t DK() const { return D / (f * f); }
    std::int64_t disc_K() const { return AK() == 1 ? N : 4 * N; }

    friend bool operator==(const FieldParams& x, const FieldParams& y)
    {
        return x.N == y.N && x.f == y.f;
    }
    friend bool operator!=(const FieldParams& x, const FieldParams& y) { return !(x == y); }
};

bool is_squarefree(std::int64_t n);

/// a + b w with rational a, b.
class QFElem {
public:
    QFElem() = default;
    explicit QFElem(const FieldParams& params);
    QFElem(const FieldParams& params, mpq_class a, mpq_class b = 0);
    QFElem(const FieldParams& params, long a, long b = 0);

    static QFElem w(const FieldParams& params) { return QFElem(params, 0L, 1L); }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const FieldParams& params() const { return params_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QFElem conj() const;
    mpq_class norm() const;
    mpq_class trace() const;
    QFElem inverse() const;
    QFElem pow(long e) const;

    // coordinates on the maximal-order basis {1, wK}
    mpq_class ka() const { return a_; }
    mpq_class kb() const { return b_ * params_.f; }
    static QFElem from_maximal(const FieldParams& params, const mpq_class& c, const mpq_class& d);

    bool is_integral() const;
    // least positive integer d with d*x integral in O_K
    mpz_class denominator() const;

    QFElem& operator+=(const QFElem& o);
    QFElem& operator-=(const QFElem& o);
    QFElem& operator*=(const QFElem& o);
    QFElem& operator/=(const QFElem& o);
    QFElem operator-() const;

    friend QFElem operator+(QFElem x, const QFElem& y) { return x += y; }
    friend QFElem operator-(QFElem x, const QFElem& y) { return x -= y; }
    friend QFElem operator*(QFElem x, const QFElem& y) { return x *= y; }
    friend QFElem operator/(QFElem x, const QFElem& y) { return x /= y; }
    friend QFElem operator*(QFElem x, long k)
    {
        x.a_ *= k;
        x.b_ *= k;
        return x;
    }
    friend QFElem operator*(long k, QFElem x) { return x * k; }

    friend bool operator==(const QFElem& x, const QFElem& y);
    friend bool operator!=(const QFElem& x, const QFElem& y) { return !(x == y); }

    std::string to_string() const;
    static QFElem parse(const FieldParams& params, const std::string& text);

private:
    void check_same(const QFElem& o) const;

    FieldParams params_;
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QFElem& x);

enum class ArithOp { Add, Sub, Mul, Div };
QFElem qf_arith(const QFElem& x, const QFElem& y, ArithOp op);

mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

}  // namespace cmnet

#endif
