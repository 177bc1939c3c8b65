#include "cmnet/residue.hpp"

#include "cmnet/error.hpp"
#include "int128.hpp"

namespace cmnet {

std::int64_t mod_reduce(std::int64_t x, std::int64_t p)
{
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t p)
{
    std::int64_t a = mod_reduce(x, p), m = p;
    std::int64_t u = 1, v = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = u - q * v;
        u = v;
        v = t;
    }
    if (a != 1) {
        fail(ErrorKind::DivisionByZero, "no inverse mod " + std::to_string(p));
    }
    return mod_reduce(u, p);
}

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t p)
{
    return static_cast<std::int64_t>((static_cast<i128>(x) * y) % p);
}

}  // namespace

ResidueElem::ResidueElem(const ResidueField& field, std::int64_t c0, std::int64_t c1)
    : field_(field), c0_(mod_reduce(c0, field.p)), c1_(field.degree == 1 ? 0 : mod_reduce(c1, field.p))
{
    if (field.degree == 1 && c1 != 0) {
        c0_ = mod_reduce(c0_ + mulmod(mod_reduce(c1, field.p), field.root, field.p), field.p);
    }
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const
{
    return ResidueElem(field_, c0_ + o.c0_, c1_ + o.c1_);
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const
{
    return ResidueElem(field_, c0_ - o.c0_, c1_ - o.c1_);
}

ResidueElem ResidueElem::operator-() const
{
    return ResidueElem(field_, -c0_, -c1_);
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const
{
    const std::int64_t p = field_.p;
    if (field_.degree == 1) {
        return ResidueElem(field_, mulmod(c0_, o.c0_, p));
    }
    // t^2 = A t - D
    std::int64_t cc = mulmod(c1_, o.c1_, p);
    std::int64_t n0 = mod_reduce(mulmod(c0_, o.c0_, p) - mulmod(cc, field_.D, p), p);
    std::int64_t n1 = mod_reduce(mulmod(c0_, o.c1_, p) + mulmod(c1_, o.c0_, p) + mulmod(cc, field_.A, p), p);
    ResidueElem r(field_, 0);
    r.c0_ = n0;
    r.c1_ = n1;
    return r;
}

ResidueElem ResidueElem::inverse() const
{
    if (is_zero()) {
        fail(ErrorKind::DivisionByZero, "inverse of zero in residue field");
    }
    const std::int64_t p = field_.p;
    if (field_.degree == 1) {
        return ResidueElem(field_, mod_inverse(c0_, p));
    }
    std::int64_t k0 = mod_reduce(c0_ + mulmod(c1_, field_.A, p), p);
    std::int64_t k1 = mod_reduce(-c1_, p);
    std::int64_t n = mod_reduce(mulmod(c0_, k0, p) - mulmod(mulmod(c1_, k1, p), field_.D, p), p);
    std::int64_t ni = mod_inverse(n, p);
    ResidueElem r(field_, 0);
    r.c0_ = mulmod(k0, ni, p);
    r.c1_ = mulmod(k1, ni, p);
    return r;
}

ResidueElem ResidueElem::operator/(const ResidueElem& o) const
{
    return *this * o.inverse();
}

std::string ResidueElem::to_string() const
{
    if (field_.degree == 1) {
        return std::to_string(c0_);
    }
    return std::to_string(c0_) + "+" + std::to_string(c1_) + "*t";
}

}  // namespace cmnet
