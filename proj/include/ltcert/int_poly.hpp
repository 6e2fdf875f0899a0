#ifndef LTCERT_INT_POLY_HPP
#define LTCERT_INT_POLY_HPP

#include <gmpxx.h>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ltcert {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class int_poly {
public:
    int_poly() = default;
    explicit int_poly(std::vector<mpz_class> coeffs);
    int_poly(std::initializer_list<long> coeffs);

    static int_poly x_power(int k);                      // x^k
    static int_poly constant(const mpz_class& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const mpz_class& lc() const;
    const mpz_class& operator[](int i) const;            // 0 outside range
    const std::vector<mpz_class>& coeffs() const { return c_; }

    int_poly operator-() const;
    int_poly operator+(const int_poly& o) const;
    int_poly operator-(const int_poly& o) const;
    int_poly operator*(const int_poly& o) const;
    int_poly operator*(const mpz_class& s) const;
    bool operator==(const int_poly& o) const { return c_ == o.c_; }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    int_poly derivative() const;

    mpz_class content() const;                           // >= 0, content(0)=0
    int_poly primitive_part() const;                     // positive leading coeff
    bool is_monic() const { return !is_zero() && lc() == 1; }

    // Number of trailing zero coefficients (order of the root 0).
    int trailing_zeros() const;
    int_poly strip_trailing_zeros(int* stripped = nullptr) const;

    // Exact quotient; throws std::invalid_argument if division is not exact.
    int_poly divexact(const int_poly& d) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<mpz_class> c_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const int_poly& p);

// --- transforms on the root multiset ----------------------------------------

// Roots scaled by u/w (w > 0): primitive-normalized result.
int_poly scale_roots(const int_poly& p, const mpz_class& u, const mpz_class& w);
// Roots mapped to 1/alpha; zero roots are dropped.
int_poly reverse_roots(const int_poly& p);
// Integer polynomial with root multiset { alpha - u/w : p(alpha)=0 }.
int_poly shift_roots(const int_poly& p, const mpq_class& delta);

// Res(p, q) = lc(p)^deg q * prod q(alpha_i); throws on zero input.
mpz_class resultant(const int_poly& p, const int_poly& q);

// Root multiset { alpha*beta }; degree = deg p * deg q. Primitive-normalized.
int_poly composed_product(const int_poly& p, const int_poly& q);
// Root multiset { alpha^b }, b >= 1. Primitive-normalized.
int_poly power_transform(const int_poly& p, int b);

// gcd over Z, primitive with positive leading coefficient.
int_poly gcd(const int_poly& a, const int_poly& b);
// p / gcd(p, p'): the squarefree part (primitive, positive lc).
int_poly squarefree_part(const int_poly& p);
// Yun decomposition: list of (squarefree factor, multiplicity), factors primitive.
std::vector<std::pair<int_poly, int>> squarefree_decomposition(const int_poly& p);

// Lower bound B with |beta| >= B for every nonzero root beta:
// after stripping x^m, B = |c0| / (|c0| + max_{i>=1} |c_i|).
mpq_class min_nonzero_root_bound(const int_poly& p);

}

#endif
