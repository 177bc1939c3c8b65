#ifndef CMNET_RESIDUE_HPP
#define CMNET_RESIDUE_HPP

#include <cstdint>
#include <string>

namespace cmnet {

/// O_K / p as F_p (degree 1, wK -> root) or F_p[t]/(t^2 - A t + D) (degree 2).
struct ResidueField {
    std::int64_t p = 2;
    int degree = 1;
    std::int64_t root = 0;  // image of wK when degree == 1
    std::int64_t A = 0;     // min poly of wK mod p when degree == 2
    std::int64_t D = 0;

    friend bool operator==(const ResidueField& x, const ResidueField& y)
    {
        return x.p == y.p && x.degree == y.degree && x.root == y.root && x.A == y.A && x.D == y.D;
    }
};

/// c0 + c1 t, with c1 = 0 in degree 1.
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(const ResidueField& field, std::int64_t c0, std::int64_t c1 = 0);

    const ResidueField& field() const { return field_; }
    std::int64_t c0() const { return c0_; }
    std::int64_t c1() const { return c1_; }
    bool is_zero() const { return c0_ == 0 && c1_ == 0; }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator-() const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem operator/(const ResidueElem& o) const;
    ResidueElem inverse() const;

    friend bool operator==(const ResidueElem& x, const ResidueElem& y)
    {
        return x.field_ == y.field_ && x.c0_ == y.c0_ && x.c1_ == y.c1_;
    }
    friend bool operator!=(const ResidueElem& x, const ResidueElem& y) { return !(x == y); }

    std::string to_string() const;

private:
    ResidueField field_;
    std::int64_t c0_ = 0;
    std::int64_t c1_ = 0;
};

std::int64_t mod_reduce(std::int64_t x, std::int64_t p);
std::int64_t mod_inverse(std::int64_t x, std::int64_t p);

}  // namespace cmnet

#endif
