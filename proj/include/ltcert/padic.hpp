#ifndef LTCERT_PADIC_HPP
#define LTCERT_PADIC_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

#include "ltcert/int_poly.hpp"

namespace ltcert {

inline constexpr long kDefaultPadicPrecision = 64;
inline constexpr long kMaxPadicPrecision = 1024;
inline constexpr long kExactZeroPrecision = 1L << 40;

/// Element of Q_p at finite precision: p^v * (u + O(p^N)) with u a unit.
/// Values constructed from rationals additionally carry the exact value, so
/// equality can be decided exactly when both sides stayed in exact arithmetic.
class padic {
public:
    padic() = default;

    static padic exact(const mpz_class& p, const mpq_class& value, long digits = kDefaultPadicPrecision);
    static padic approx(const mpz_class& p, long v, const mpz_class& unit, long N);
    /// Integer a regarded mod p^abs_digits (value a + O(p^abs_digits)).
    static padic from_integer_mod(const mpz_class& p, const mpz_class& a, long abs_digits);
    static padic zero(const mpz_class& p) { return exact(p, 0); }

    const mpz_class& prime() const { return p_; }
    bool is_exact() const { return exact_.has_value(); }
    const mpq_class& exact_value() const;

    /// Zero at working precision (exact zero or indistinguishable from it).
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && exact_.has_value(); }

    long valuation() const;              // throws on zero at precision
    long rel_precision() const { return zero_ ? 0 : N_; }
    long abs_precision() const { return zero_ ? abs_ : v_ + N_; }
    const mpz_class& unit_part() const;  // mod p^N

    padic operator-() const;
    padic operator+(const padic& o) const;
    padic operator-(const padic& o) const;
    padic operator*(const padic& o) const;
    padic operator/(const padic& o) const;
    padic inverse() const;
    padic pow(long e) const;

    /// p^v * u mod p^digits for v >= 0 (throws for negative valuation).
    mpz_class integer_rep(long digits) const;
    /// Truncate the carried precision to at most N digits (relative).
    padic truncated(long N) const;

    /// a == b exactly (only when both exact); otherwise equality at the
    /// shared absolute precision, reported with that precision.
    struct eq_result {
        bool equal;
        bool exact;
        long at_abs_precision; // meaningful when !exact
    };
    static eq_result compare(const padic& a, const padic& b);

    std::string str() const;

private:
    mpz_class p_;
    bool zero_ = true;
    long v_ = 0;
    mpz_class u_;
    long N_ = 0;
    long abs_ = 0; // for zero: value ≡ 0 mod p^abs_
    std::optional<mpq_class> exact_;

    void normalize_from_integer(const mpz_class& a, long abs_digits);
};

std::ostream& operator<<(std::ostream& os, const padic& x);

/// Newton lift of a simple root: seed must satisfy v(f(seed)) > 2 v(f'(seed)).
/// Returns the root to absolute precision targetN (exact flag never set).
padic hensel_lift_root(const int_poly& f, const mpz_class& p, const mpz_class& seed,
                       long targetN);

/// Lift f ≡ g0*h0 (mod p), g0, h0 coprime mod p, lc(f) a unit mod p, to a
/// factorization modulo p^targetN. Returned polynomials have coefficients in
/// [0, p^targetN); the first is congruent to g0, the second to h0.
std::pair<int_poly, int_poly> hensel_lift_pair(const int_poly& f, const int_poly& g0,
                                               const int_poly& h0, const mpz_class& p,
                                               long targetN);

}

#endif
