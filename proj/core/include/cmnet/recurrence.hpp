#ifndef CMNET_RECURRENCE_HPP
#define CMNET_RECURRENCE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmnet/net.hpp"
#include "cmnet/primes.hpp"

namespace cmnet {

/// Integral element x + y wK of the maximal order, for cheap products.
struct MaxElem {
    mpz_class x;
    mpz_class y;
};

struct RecurrenceReport {
    OrderElem alpha;
    OrderElem beta;
    OrderElem gamma;
    bool hypothesis = true;
    std::string skip_reason;
    bool psi_ok = false;
    bool g_ok = false;
    bool b_ok = false;
    // units (u2, u3) with T1 = u2 T2 - u3 T3 on the B side
    std::optional<std::array<QFElem, 2>> witness;

    bool pass() const { return psi_ok && g_ok && b_ok; }
};

/// Per-site Psi, g-exponents and canonical B for one net and support, cached.
class RecurrenceContext {
public:
    struct Site {
        bool zero = false;
        QFElem psi;
        std::vector<long> g;   // g-values, one per support prime
        QFElem B;              // canonical associate generating D
        MaxElem Bm;
    };

    RecurrenceContext(NetLattice& L, std::vector<PrimeIdeal> support, std::optional<OrderElem> M);

    NetLattice& net() { return L_; }
    const std::vector<PrimeIdeal>& support() const { return support_; }
    const std::optional<OrderElem>& M() const { return M_; }
    bool is_pid() const { return pid_; }

    const Site& site(const OrderElem& z);

    /// At least two of alpha, beta, gamma are multiples of the M generator, over a PID.
    bool hypothesis(const OrderElem& alpha, const OrderElem& beta, const OrderElem& gamma,
                    std::string* reason = nullptr) const;

    /// The three checks; with enforce = false the gate is recorded but not applied.
    RecurrenceReport verify(const OrderElem& alpha, const OrderElem& beta, const OrderElem& gamma,
                            bool enforce = true);

private:
    MaxElem mul(const MaxElem& u, const MaxElem& v) const;
    bool b_identity(const MaxElem& t1, const MaxElem& t2, const MaxElem& t3,
                    std::optional<std::array<QFElem, 2>>& witness) const;

    NetLattice& L_;
    std::vector<PrimeIdeal> support_;
    std::optional<OrderElem> M_;
    bool pid_ = false;
    std::vector<QFElem> units_;
    std::vector<MaxElem> unitsm_;
    std::map<Index, Site> sites_;
};

RecurrenceReport verify_general_recurrence(NetLattice& L, const OrderElem& alpha, const OrderElem& beta,
                                           const OrderElem& gamma, const std::vector<PrimeIdeal>& support);

/// First hypothesis-violating triple in the box whose B-identity fails for every unit choice.
std::optional<RecurrenceReport> find_expected_failure(RecurrenceContext& ctx, std::int64_t radius);

/// B generates the denominator ideal of x: x B^2 is integral and coprime to B^2.
bool generates_denominator(const QFElem& x, const QFElem& B);

/// Class number one for the order of this discriminant.
bool order_is_pid(const FieldParams& params);

}  // namespace cmnet

#endif
