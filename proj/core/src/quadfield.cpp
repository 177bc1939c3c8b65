#include "cmnet/quadfield.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "cmnet/error.hpp"

namespace cmnet {

bool is_squarefree(std::int64_t n)
{
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    if (m == 0) {
        return false;
    }
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) {
                return false;
            }
        }
    }
    return true;
}

FieldParams FieldParams::make(std::int64_t N, std::int64_t f)
{
    if (N >= 0 || !is_squarefree(N)) {
        fail(ErrorKind::InvalidParams, "N must be a negative squarefree integer, got " + std::to_string(N));
    }
    if (f < 1 || f > 1000000) {
        fail(ErrorKind::InvalidParams, "conductor must be a positive integer, got " + std::to_string(f));
    }
    FieldParams p;
    p.N = N;
    p.f = f;
    long long r = ((N % 4) + 4) % 4;
    if (r == 1) {
        p.A = f;
        p.D = f * f * ((1 - N) / 4);
    } else {
        p.A = 0;
        p.D = -f * f * N;
    }
    return p;
}

QFElem::QFElem(const FieldParams& params) : params_(params) {}

QFElem::QFElem(const FieldParams& params, mpq_class a, mpq_class b)
    : params_(params), a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
}

QFElem::QFElem(const FieldParams& params, long a, long b) : params_(params), a_(a), b_(b) {}

void QFElem::check_same(const QFElem& o) const
{
    if (params_ != o.params_) {
        fail(ErrorKind::ParamsMismatch, "operands live in different orders");
    }
}

QFElem QFElem::conj() const
{
    return QFElem(params_, a_ + b_ * params_.A, -b_);
}

mpq_class QFElem::norm() const
{
    mpq_class n = a_ * a_ + a_ * b_ * params_.A + b_ * b_ * params_.D;
    return n;
}

mpq_class QFElem::trace() const
{
    mpq_class t = 2 * a_ + b_ * params_.A;
    return t;
}

QFElem QFElem::inverse() const
{
    if (is_zero()) {
        fail(ErrorKind::DivisionByZero, "inverse of zero");
    }
    mpq_class n = norm();
    QFElem c = conj();
    c.a_ /= n;
    c.b_ /= n;
    return c;
}

QFElem QFElem::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    QFElem result(params_, 1L, 0L);
    QFElem base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

QFElem QFElem::from_maximal(const FieldParams& params, const mpq_class& c, const mpq_class& d)
{
    return QFElem(params, c, d / params.f);
}

bool QFElem::is_integral() const
{
    mpq_class kb_ = kb();
    return a_.get_den() == 1 && kb_.get_den() == 1;
}

mpz_class QFElem::denominator() const
{
    mpq_class kb_ = kb();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a_.get_den_mpz_t(), kb_.get_den_mpz_t());
    return l;
}

QFElem& QFElem::operator+=(const QFElem& o)
{
    check_same(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QFElem& QFElem::operator-=(const QFElem& o)
{
    check_same(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QFElem& QFElem::operator*=(const QFElem& o)
{
    check_same(o);
    // (a + bw)(c + dw) = (ac - bdD) + (ad + bc + bdA)w
    mpq_class bd = b_ * o.b_;
    mpq_class na = a_ * o.a_ - bd * params_.D;
    mpq_class nb = a_ * o.b_ + b_ * o.a_ + bd * params_.A;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QFElem& QFElem::operator/=(const QFElem& o)
{
    check_same(o);
    if (o.is_zero()) {
        fail(ErrorKind::DivisionByZero, "division by zero in K");
    }
    return *this *= o.inverse();
}

QFElem QFElem::operator-() const
{
    return QFElem(params_, -a_, -b_);
}

bool operator==(const QFElem& x, const QFElem& y)
{
    return x.params_ == y.params_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string rational_to_string(const mpq_class& q)
{
    return q.get_str(10);
}

mpq_class parse_rational(const std::string& text)
{
    auto bad = [&] { fail(ErrorKind::Parse, "malformed rational '" + text + "'"); };
    if (text.empty()) {
        bad();
    }
    std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::size_t start = (num[0] == '-' || num[0] == '+') ? 1 : 0;
    if (num.size() <= start || !std::all_of(num.begin() + static_cast<long>(start), num.end(), ::isdigit)) {
        bad();
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        std::string den = text.substr(slash + 1);
        if (den.empty() || !std::all_of(den.begin(), den.end(), ::isdigit)) {
            bad();
        }
        mpz_class d(den);
        if (d == 0) {
            fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
        }
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
    }
    return q;
}

std::string QFElem::to_string() const
{
    std::string s = rational_to_string(a_);
    if (sgn(b_) == 0) {
        return s;
    }
    s += sgn(b_) > 0 ? "+" : "-";
    mpq_class mag = abs(b_);
    s += rational_to_string(mag) + "*w";
    return s;
}

QFElem QFElem::parse(const FieldParams& params, const std::string& raw)
{
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text += c;
        }
    }
    if (text.empty()) {
        fail(ErrorKind::Parse, "empty element");
    }
    const std::string tail = "*w";
    bool has_w = text.size() > tail.size() && text.compare(text.size() - tail.size(), tail.size(), tail) == 0;
    if (!has_w) {
        return QFElem(params, parse_rational(text), mpq_class(0));
    }
    std::string body = text.substr(0, text.size() - tail.size());
    // a carries at most a leading sign, so the first later sign separates the parts
    std::size_t split = body.find_first_of("+-", 1);
    if (split == std::string::npos) {
        fail(ErrorKind::Parse, "expected RAT SIGN RAT*w in '" + raw + "'");
    }
    mpq_class a = parse_rational(body.substr(0, split));
    std::string bpart = body.substr(split + 1);
    if (bpart.empty() || bpart.find_first_of("+-", 1) != std::string::npos) {
        fail(ErrorKind::Parse, "malformed coefficient of w in '" + raw + "'");
    }
    mpq_class b = parse_rational(bpart);
    if (body[split] == '-') {
        b = -b;
    }
    return QFElem(params, a, b);
}

std::ostream& operator<<(std::ostream& os, const QFElem& x)
{
    return os << x.to_string();
}

QFElem qf_arith(const QFElem& x, const QFElem& y, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
    }
    return x;
}

}  // namespace cmnet
