#include "ltcert/finite_field.hpp"

#include <stdexcept>

namespace ltcert {

namespace {

mpz_class mod_p(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

} // namespace

fq_field::fq_field(mpz_class p, int_poly modulus_over_z) : p_(std::move(p)) {
    if (modulus_over_z.is_zero() || modulus_over_z.degree() < 1)
        throw std::invalid_argument("fq_field: modulus must be nonconstant");
    f_ = modulus_over_z.degree();
    mod_.resize(f_ + 1);
    for (int i = 0; i <= f_; ++i) mod_[i] = mod_p(modulus_over_z[i], p_);
    if (mod_[f_] != 1) {
        // normalize monic
        mpz_class lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), mod_[f_].get_mpz_t(), p_.get_mpz_t()) == 0)
            throw std::invalid_argument("fq_field: leading coefficient not invertible mod p");
        for (auto& c : mod_) c = mod_p(c * lcinv, p_);
    }
}

mpz_class fq_field::q() const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(f_));
    return r;
}

fq_elem fq_field::one() const {
    fq_elem e(f_, 0);
    e[0] = 1;
    return e;
}

fq_elem fq_field::from_int(const mpz_class& n) const {
    fq_elem e(f_, 0);
    e[0] = mod_p(n, p_);
    return e;
}

fq_elem fq_field::gen() const {
    fq_elem e(f_, 0);
    if (f_ > 1) e[1] = 1;
    return e;
}

bool fq_field::is_zero(const fq_elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

bool fq_field::eq(const fq_elem& a, const fq_elem& b) const { return a == b; }

fq_elem fq_field::add(const fq_elem& a, const fq_elem& b) const {
    fq_elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod_p(a[i] + b[i], p_);
    return r;
}

fq_elem fq_field::sub(const fq_elem& a, const fq_elem& b) const {
    fq_elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod_p(a[i] - b[i], p_);
    return r;
}

fq_elem fq_field::neg(const fq_elem& a) const {
    fq_elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod_p(-a[i], p_);
    return r;
}

fq_elem fq_field::mul(const fq_elem& a, const fq_elem& b) const {
    std::vector<mpz_class> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f_; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce mod modulus (monic)
    for (int i = 2 * f_ - 2; i >= f_; --i) {
        if (prod[i] == 0) continue;
        mpz_class c = prod[i];
        for (int j = 0; j < f_; ++j) prod[i - f_ + j] -= c * mod_[j];
        prod[i] = 0;
    }
    fq_elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod_p(prod[i], p_);
    return r;
}

fq_elem fq_field::inv(const fq_elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("fq inverse of zero");
    // a^(q-2)
    return pow(a, q() - 2);
}

fq_elem fq_field::pow(const fq_elem& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    fq_elem base = a, r = one();
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

fq_elem fq_field::nth_element(unsigned long n) const {
    // base-p digits spread over basis coefficients
    fq_elem e(f_, 0);
    mpz_class m(n);
    for (int i = 0; i < f_ && m > 0; ++i) {
        e[i] = mod_p(m, p_);
        m /= p_;
    }
    return e;
}

// --- fq polynomials -----------------------------------------------------------

namespace fqp {

fq_poly trim(const fq_field& F, fq_poly a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
    return a;
}

int degree(const fq_poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const fq_poly& a) { return a.empty(); }

fq_poly from_int_poly(const fq_field& F, const int_poly& p) {
    fq_poly r;
    r.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r.push_back(F.from_int(p[i]));
    return trim(F, std::move(r));
}

fq_poly monic(const fq_field& F, const fq_poly& a) {
    if (is_zero(a)) return a;
    fq_elem c = F.inv(a.back());
    fq_poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return r;
}

fq_poly add(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    fq_poly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    return trim(F, std::move(r));
}

fq_poly sub(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    fq_poly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    return trim(F, std::move(r));
}

fq_poly mul(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    fq_poly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return trim(F, std::move(r));
}

fq_poly scal(const fq_field& F, const fq_poly& a, const fq_elem& c) {
    fq_poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return trim(F, std::move(r));
}

std::pair<fq_poly, fq_poly> divrem(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    if (is_zero(b)) throw std::invalid_argument("fq_poly division by zero");
    fq_poly r = a;
    int db = degree(b);
    if (degree(a) < db) return {{}, a};
    fq_poly q(degree(a) - db + 1, F.zero());
    fq_elem lcinv = F.inv(b.back());
    for (int i = degree(a); i >= db; --i) {
        if (F.is_zero(r[i])) continue;
        fq_elem c = F.mul(r[i], lcinv);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    return {trim(F, std::move(q)), trim(F, std::move(r))};
}

fq_poly mod(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    return divrem(F, a, b).second;
}

fq_poly gcd(const fq_field& F, const fq_poly& a, const fq_poly& b) {
    fq_poly x = a, y = b;
    while (!is_zero(y)) {
        fq_poly r = mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (is_zero(x)) return x;
    return monic(F, x);
}

fq_poly derivative(const fq_field& F, const fq_poly& a) {
    if (degree(a) < 1) return {};
    fq_poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(mpz_class(static_cast<long>(i))));
    return trim(F, std::move(r));
}

fq_poly powmod(const fq_field& F, const fq_poly& a, const mpz_class& e, const fq_poly& m) {
    fq_poly base = mod(F, a, m);
    fq_poly r{F.one()};
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = mod(F, mul(F, r, base), m);
        base = mod(F, mul(F, base, base), m);
        n >>= 1;
    }
    return r;
}

fq_elem eval(const fq_field& F, const fq_poly& a, const fq_elem& x) {
    fq_elem acc = F.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

bool is_squarefree(const fq_field& F, const fq_poly& a) {
    if (degree(a) < 1) return true;
    fq_poly d = derivative(F, a);
    if (is_zero(d)) return false;
    return degree(gcd(F, a, d)) == 0;
}

namespace {

// p-th root coefficientwise: c -> c^{p^{f-1}} (inverse Frobenius in F_q).
fq_poly pth_root_poly(const fq_field& F, const fq_poly& a) {
    // a must have nonzero coefficients only at indices divisible by p
    unsigned long p = F.p().get_ui();
    fq_poly r;
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), F.p().get_mpz_t(), static_cast<unsigned long>(F.f() > 0 ? F.f() - 1 : 0));
    for (size_t i = 0; i < a.size(); i += p)
        r.push_back(F.pow(a[i], e));
    return trim(F, std::move(r));
}

// squarefree decomposition over F_q (handles inseparable parts).
void squarefree_decomp(const fq_field& F, const fq_poly& f, int mult,
                       std::vector<std::pair<fq_poly, int>>& out) {
    if (degree(f) < 1) return;
    fq_poly d = derivative(F, f);
    if (is_zero(d)) {
        // f = g(x^p)
        fq_poly g = pth_root_poly(F, f);
        squarefree_decomp(F, g, mult * static_cast<int>(F.p().get_ui()), out);
        return;
    }
    fq_poly u = gcd(F, f, d);
    fq_poly v = divrem(F, f, u).first; // product of squarefree part
    int i = 1;
    while (degree(v) > 0) {
        fq_poly w = gcd(F, v, u);
        fq_poly piece = divrem(F, v, w).first; // factors of exact multiplicity i
        if (degree(piece) > 0) out.emplace_back(monic(F, piece), mult * i);
        v = w;
        u = divrem(F, u, w).first;
        ++i;
    }
    if (degree(u) > 0) {
        // remaining inseparable part
        fq_poly g = pth_root_poly(F, u);
        squarefree_decomp(F, g, mult * static_cast<int>(F.p().get_ui()), out);
    }
}

// Cantor-Zassenhaus equal-degree split of a monic squarefree product of
// irreducibles of degree d. Deterministic candidate enumeration.
void equal_degree_split(const fq_field& F, const fq_poly& f, int d,
                        std::vector<fq_poly>& out) {
    if (degree(f) == d) {
        out.push_back(f);
        return;
    }
    const mpz_class q = F.q();
    for (unsigned long attempt = 1;; ++attempt) {
        // candidate a: deterministic sweep over small polynomials
        fq_poly a;
        {
            unsigned long seed = attempt;
            int deg = 1 + static_cast<int>(attempt % static_cast<unsigned long>(std::max(1, degree(f) - 1)));
            a.assign(deg + 1, F.zero());
            for (int i = deg; i >= 0; --i) {
                a[i] = F.nth_element(seed % 97 + (i == deg ? 1 : 0));
                seed = seed * 2862933555777941757ULL + 3037000493ULL;
            }
            a = trim(F, std::move(a));
            if (degree(a) < 1) continue;
        }
        fq_poly g = gcd(F, a, f);
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(F, g, d, out);
            equal_degree_split(F, divrem(F, f, g).first, d, out);
            return;
        }
        fq_poly b;
        if (mpz_odd_p(q.get_mpz_t())) {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = powmod(F, a, e, f);
            b = sub(F, b, {F.one()});
        } else {
            // char 2: trace map T(a) = sum a^{2^i}, i < d*f
            int bits = d * F.f();
            fq_poly t = mod(F, a, f);
            fq_poly acc = t;
            for (int i = 1; i < bits; ++i) {
                t = mod(F, mul(F, t, t), f);
                acc = add(F, acc, t);
            }
            b = acc;
        }
        if (is_zero(b)) continue;
        g = gcd(F, b, f);
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(F, g, d, out);
            equal_degree_split(F, divrem(F, f, g).first, d, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(const fq_field& F, const fq_poly& a) {
    int n = degree(a);
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^{q^n} == x mod a and gcd(x^{q^{n/r}} - x, a) == 1 for prime r | n
    const mpz_class q = F.q();
    fq_poly x{F.zero(), F.one()};
    mpz_class qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    fq_poly xqn = powmod(F, x, qn, a);
    if (!(sub(F, xqn, x).empty())) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) { prime = false; break; }
        if (!prime) continue;
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / r));
        fq_poly xq = powmod(F, x, e, a);
        if (degree(gcd(F, sub(F, xq, x), a)) != 0) return false;
    }
    return true;
}

std::vector<std::pair<fq_poly, int>> factor(const fq_field& F, const fq_poly& a) {
    if (degree(a) < 1) throw std::invalid_argument("fq factor of constant");
    std::vector<std::pair<fq_poly, int>> sf;
    squarefree_decomp(F, monic(F, a), 1, sf);
    std::vector<std::pair<fq_poly, int>> out;
    const mpz_class q = F.q();
    for (auto& [g, mult] : sf) {
        // distinct-degree
        fq_poly rem = g;
        fq_poly x{F.zero(), F.one()};
        fq_poly h = x;
        for (int d = 1; degree(rem) >= 2 * d; ++d) {
            h = powmod(F, h, q, rem);
            fq_poly gd = gcd(F, sub(F, h, x), rem);
            if (degree(gd) > 0) {
                std::vector<fq_poly> pieces;
                equal_degree_split(F, gd, d, pieces);
                for (auto& pc : pieces) out.emplace_back(monic(F, pc), mult);
                rem = divrem(F, rem, gd).first;
                h = mod(F, h, rem);
            }
        }
        if (degree(rem) > 0) out.emplace_back(monic(F, rem), mult);
    }
    return out;
}

std::vector<std::pair<fq_elem, int>> roots(const fq_field& F, const fq_poly& a) {
    std::vector<std::pair<fq_elem, int>> out;
    for (const auto& [g, mult] : factor(F, a))
        if (degree(g) == 1)
            out.emplace_back(F.neg(g[0]), mult); // monic x + c -> root -c
    return out;
}

} // namespace fqp

bool is_irreducible_mod_p(const int_poly& f, const mpz_class& p) {
    fq_field F(p, int_poly{0, 1});
    fq_poly g = fqp::from_int_poly(F, f);
    if (fqp::degree(g) != f.degree()) return false; // leading coeff vanished
    return fqp::is_irreducible(F, g);
}

int_poly find_irreducible_mod_p(const mpz_class& p, int n) {
    if (n == 1) return int_poly{0, 1}; // t
    // deterministic sweep: t^n + c_{k} t^{j} + c_0 style candidates, then dense
    for (unsigned long counter = 0;; ++counter) {
        std::vector<mpz_class> c(n + 1, 0);
        c[n] = 1;
        mpz_class m(counter);
        for (int i = 0; i < n && m > 0; ++i) {
            mpz_class digit;
            mpz_mod(digit.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            c[i] = digit;
            m /= p;
        }
        int_poly cand(c);
        if (cand.degree() == n && is_irreducible_mod_p(cand, p)) return cand;
    }
}

}
