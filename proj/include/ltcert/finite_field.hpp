#ifndef LTCERT_FINITE_FIELD_HPP
#define LTCERT_FINITE_FIELD_HPP

#include <gmpxx.h>
#include <memory>
#include <vector>

#include "ltcert/int_poly.hpp"

namespace ltcert {

/// Element of F_{p^f} as coefficients (mod p) on the power basis of t,
/// lowest degree first, always of length f.
using fq_elem = std::vector<mpz_class>;

/// F_p[t]/(modulus), modulus monic irreducible of degree f over F_p.
/// f = 1 uses modulus = t, so elements are single residues.
class fq_field {
public:
    fq_field(mpz_class p, int_poly modulus_over_z);

    const mpz_class& p() const { return p_; }
    int f() const { return f_; }
    mpz_class q() const;                   // p^f
    const std::vector<mpz_class>& modulus() const { return mod_; }

    fq_elem zero() const { return fq_elem(f_, 0); }
    fq_elem one() const;
    fq_elem from_int(const mpz_class& n) const;
    fq_elem gen() const;                   // t (zero when f = 1)

    bool is_zero(const fq_elem& a) const;
    bool eq(const fq_elem& a, const fq_elem& b) const;
    fq_elem add(const fq_elem& a, const fq_elem& b) const;
    fq_elem sub(const fq_elem& a, const fq_elem& b) const;
    fq_elem neg(const fq_elem& a) const;
    fq_elem mul(const fq_elem& a, const fq_elem& b) const;
    fq_elem inv(const fq_elem& a) const;   // throws on zero
    fq_elem pow(const fq_elem& a, const mpz_class& e) const;
    fq_elem frobenius(const fq_elem& a) const { return pow(a, p_); }

    // Enumeration order used for deterministic searches: 0,1,...,p-1 then t, t+1, ...
    fq_elem nth_element(unsigned long n) const;

private:
    mpz_class p_;
    std::vector<mpz_class> mod_; // length f_+1, monic
    int f_;
};

/// Dense polynomial over F_q, coefficients lowest degree first, no leading zeros.
using fq_poly = std::vector<fq_elem>;

namespace fqp {

fq_poly trim(const fq_field& F, fq_poly a);
int degree(const fq_poly& a);             // -1 for zero
bool is_zero(const fq_poly& a);
fq_poly from_int_poly(const fq_field& F, const int_poly& p);
fq_poly monic(const fq_field& F, const fq_poly& a);
fq_poly add(const fq_field& F, const fq_poly& a, const fq_poly& b);
fq_poly sub(const fq_field& F, const fq_poly& a, const fq_poly& b);
fq_poly mul(const fq_field& F, const fq_poly& a, const fq_poly& b);
fq_poly scal(const fq_field& F, const fq_poly& a, const fq_elem& c);
// division with remainder; divisor must be nonzero
std::pair<fq_poly, fq_poly> divrem(const fq_field& F, const fq_poly& a, const fq_poly& b);
fq_poly mod(const fq_field& F, const fq_poly& a, const fq_poly& b);
fq_poly gcd(const fq_field& F, const fq_poly& a, const fq_poly& b); // monic
fq_poly derivative(const fq_field& F, const fq_poly& a);
fq_poly powmod(const fq_field& F, const fq_poly& a, const mpz_class& e, const fq_poly& m);
fq_elem eval(const fq_field& F, const fq_poly& a, const fq_elem& x);

bool is_squarefree(const fq_field& F, const fq_poly& a);
bool is_irreducible(const fq_field& F, const fq_poly& a);
// Full factorization into monic irreducibles with multiplicity (deterministic).
std::vector<std::pair<fq_poly, int>> factor(const fq_field& F, const fq_poly& a);
// Roots in F_q with multiplicity.
std::vector<std::pair<fq_elem, int>> roots(const fq_field& F, const fq_poly& a);

}

// Deterministic search for a monic irreducible polynomial of degree n over F_p.
int_poly find_irreducible_mod_p(const mpz_class& p, int n);
bool is_irreducible_mod_p(const int_poly& f, const mpz_class& p);

}

#endif
