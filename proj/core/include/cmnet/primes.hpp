#ifndef CMNET_PRIMES_HPP
#define CMNET_PRIMES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmnet/quadfield.hpp"
#include "cmnet/residue.hpp"

namespace cmnet {

enum class PrimeKind { Split, Inert, Ramified };

const char* to_string(PrimeKind kind);

/// A prime of O_K with a principal generator. Identity is (p, kind, root):
/// for degree-one primes root is the image of wK in F_p.
struct PrimeIdeal {
    std::int64_t p = 0;
    PrimeKind kind = PrimeKind::Inert;
    QFElem gen;
    int residue_degree = 2;
    std::int64_t root = -1;

    ResidueField residue_field() const;
    std::string to_string() const;

    friend bool operator<(const PrimeIdeal& x, const PrimeIdeal& y);
    friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y)
    {
        return x.p == y.p && x.kind == y.kind && x.root == y.root;
    }
    friend bool operator!=(const PrimeIdeal& x, const PrimeIdeal& y) { return !(x == y); }
};

/// Fractional ideal as prime -> exponent; zero exponents never stored.
class FactoredIdeal {
public:
    FactoredIdeal() = default;
    explicit FactoredIdeal(const PrimeIdeal& prime, long e = 1);

    const std::map<PrimeIdeal, long>& exponents() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    bool is_integral() const;
    long d_p(const PrimeIdeal& prime) const;

    void add(const PrimeIdeal& prime, long e);
    FactoredIdeal operator*(const FactoredIdeal& o) const;
    FactoredIdeal inverse() const;
    FactoredIdeal pow(long k) const;
    FactoredIdeal& operator*=(const FactoredIdeal& o);

    friend bool operator==(const FactoredIdeal& x, const FactoredIdeal& y) { return x.e_ == y.e_; }
    friend bool operator!=(const FactoredIdeal& x, const FactoredIdeal& y) { return !(x == y); }

    // generator as the product of prime generators
    QFElem generator(const FieldParams& params) const;
    std::string to_string() const;

private:
    std::map<PrimeIdeal, long> e_;
};

long d_p(const FactoredIdeal& ideal, const PrimeIdeal& prime);

/// Kronecker symbol (d_K / p): 1 split, -1 inert, 0 ramified.
int kronecker_kind(std::int64_t dK, std::int64_t p);
bool is_prime(std::int64_t n);

std::vector<PrimeIdeal> factor_rational_prime(std::int64_t p, const FieldParams& params);
PrimeIdeal prime_from_generator(const QFElem& gen);
PrimeIdeal parse_prime_spec(const FieldParams& params, const std::string& text);

long valuation(const QFElem& x, const PrimeIdeal& prime);
/// Repeated exact division by the generator; slower reference path.
long valuation_by_division(const QFElem& x, const PrimeIdeal& prime);
long rational_valuation(const mpz_class& n, std::int64_t p);
/// Distinct prime factors of |n| by trial division; throws IncompleteSupport past the bound.
std::vector<std::int64_t> rational_prime_factors(mpz_class n, std::int64_t trial_bound = 1000000);

struct FactorOptions {
    bool strict = false;                   // reject norm factors outside the hint
    std::int64_t trial_bound = 1000000;    // otherwise trial divide up to this
};

FactoredIdeal element_ideal(const QFElem& x, const std::vector<std::int64_t>& support_hint,
                            const FactorOptions& opts = {});
/// Factorisation restricted to the listed primes.
FactoredIdeal ideal_on_support(const QFElem& x, const std::vector<PrimeIdeal>& support);

ResidueElem reduce_mod(const QFElem& x, const PrimeIdeal& prime);

std::vector<QFElem> unit_group(const FieldParams& params);
QFElem canonical_associate(const QFElem& x);
bool are_associates(const QFElem& x, const QFElem& y);
/// (x) + (y) = O_K for integral x, y.
bool ideals_coprime(const QFElem& x, const QFElem& y);

}  // namespace cmnet

#endif
