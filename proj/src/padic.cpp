#include "ltcert/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ltcert/errors.hpp"

namespace ltcert {

namespace {

mpz_class pow_p(const mpz_class& p, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

long val_p(const mpz_class& a, const mpz_class& p) {
    if (a == 0) throw std::invalid_argument("val_p(0)");
    mpz_class r = a;
    long v = 0;
    mpz_class q, rem;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) break;
        r = q;
        ++v;
    }
    return v;
}

} // namespace

void padic::normalize_from_integer(const mpz_class& a, long abs_digits) {
    mpz_class m = pow_p(p_, abs_digits);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r == 0) {
        zero_ = true;
        abs_ = abs_digits;
        return;
    }
    long v = val_p(r, p_);
    zero_ = false;
    v_ = v;
    N_ = abs_digits - v;
    mpz_class unit = r / pow_p(p_, v);
    mpz_mod(u_.get_mpz_t(), unit.get_mpz_t(), pow_p(p_, N_).get_mpz_t());
}

padic padic::exact(const mpz_class& p, const mpq_class& value, long digits) {
    padic x;
    x.p_ = p;
    x.exact_ = value;
    if (value == 0) {
        x.zero_ = true;
        x.abs_ = kExactZeroPrecision;
        return x;
    }
    long vn = value.get_num() == 0 ? 0 : val_p(value.get_num(), p);
    long vd = val_p(value.get_den(), p);
    x.zero_ = false;
    x.v_ = vn - vd;
    x.N_ = digits;
    mpz_class num = value.get_num() / pow_p(p, vn);
    mpz_class den = value.get_den() / pow_p(p, vd);
    mpz_class m = pow_p(p, digits);
    mpz_class deninv;
    mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class u = num * deninv;
    mpz_mod(x.u_.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    return x;
}

padic padic::approx(const mpz_class& p, long v, const mpz_class& unit, long N) {
    if (N <= 0) throw std::invalid_argument("padic::approx needs N > 0");
    padic x;
    x.p_ = p;
    mpz_class m = pow_p(p, N);
    mpz_class u;
    mpz_mod(u.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
    if (u == 0) {
        x.zero_ = true;
        x.abs_ = v + N;
        return x;
    }
    long extra = val_p(u, p);
    x.zero_ = false;
    x.v_ = v + extra;
    x.N_ = N - extra;
    mpz_class uu = u / pow_p(p, extra);
    mpz_mod(x.u_.get_mpz_t(), uu.get_mpz_t(), pow_p(p, x.N_).get_mpz_t());
    return x;
}

padic padic::from_integer_mod(const mpz_class& p, const mpz_class& a, long abs_digits) {
    padic x;
    x.p_ = p;
    x.normalize_from_integer(a, abs_digits);
    return x;
}

const mpq_class& padic::exact_value() const {
    if (!exact_) throw std::logic_error("padic: no exact value");
    return *exact_;
}

long padic::valuation() const {
    if (zero_) {
        if (is_exact_zero()) throw std::invalid_argument("valuation of exact zero");
        throw precision_exhausted_error("valuation of value indistinguishable from zero at precision");
    }
    return v_;
}

const mpz_class& padic::unit_part() const {
    if (zero_) throw std::invalid_argument("unit part of zero");
    return u_;
}

padic padic::operator-() const {
    padic r = *this;
    if (r.exact_) r.exact_ = -*r.exact_;
    if (!r.zero_) {
        mpz_class m = pow_p(p_, N_);
        mpz_class u = m - u_;
        mpz_mod(r.u_.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

padic padic::operator+(const padic& o) const {
    if (p_ != o.p_) throw std::invalid_argument("padic: mixed primes");
    if (exact_ && o.exact_) {
        long digits = std::min(zero_ ? kDefaultPadicPrecision : N_,
                               o.zero_ ? kDefaultPadicPrecision : o.N_);
        return exact(p_, *exact_ + *o.exact_, digits);
    }
    if (zero_ && o.zero_) {
        padic r;
        r.p_ = p_;
        r.zero_ = true;
        r.abs_ = std::min(abs_, o.abs_);
        return r;
    }
    if (zero_ || o.zero_) {
        const padic& z = zero_ ? *this : o;
        const padic& x = zero_ ? o : *this;
        // x + O(p^z.abs_): x keeps digits up to abs precision z.abs_
        if (x.v_ >= z.abs_) {
            padic r;
            r.p_ = p_;
            r.zero_ = true;
            r.abs_ = z.abs_;
            return r;
        }
        padic r = x;
        r.exact_.reset();
        long absp = std::min(x.v_ + x.N_, z.abs_);
        r.N_ = absp - x.v_;
        mpz_mod(r.u_.get_mpz_t(), x.u_.get_mpz_t(), pow_p(p_, r.N_).get_mpz_t());
        return r;
    }
    long v = std::min(v_, o.v_);
    long absp = std::min(v_ + N_, o.v_ + o.N_);
    mpz_class s = u_ * pow_p(p_, v_ - v) + o.u_ * pow_p(p_, o.v_ - v);
    padic r;
    r.p_ = p_;
    r.normalize_from_integer(s, absp - v);
    if (!r.zero_) r.v_ += v;
    else r.abs_ += v;
    return r;
}

padic padic::operator-(const padic& o) const { return *this + (-o); }

padic padic::operator*(const padic& o) const {
    if (p_ != o.p_) throw std::invalid_argument("padic: mixed primes");
    if (exact_ && o.exact_) {
        long digits = std::min(zero_ ? kDefaultPadicPrecision : N_,
                               o.zero_ ? kDefaultPadicPrecision : o.N_);
        return exact(p_, *exact_ * *o.exact_, digits);
    }
    if (is_exact_zero() || o.is_exact_zero()) return exact(p_, 0);
    if (zero_ || o.zero_) {
        const padic& z = zero_ ? *this : o;
        const padic& x = zero_ ? o : *this;
        padic r;
        r.p_ = p_;
        r.zero_ = true;
        r.abs_ = x.zero_ ? z.abs_ + x.abs_ : z.abs_ + x.v_;
        return r;
    }
    padic r;
    r.p_ = p_;
    r.zero_ = false;
    r.v_ = v_ + o.v_;
    r.N_ = std::min(N_, o.N_);
    mpz_class m = pow_p(p_, r.N_);
    mpz_class u = u_ * o.u_;
    mpz_mod(r.u_.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    return r;
}

padic padic::inverse() const {
    if (zero_) throw std::invalid_argument("padic inverse of (possible) zero");
    if (exact_) return exact(p_, 1 / *exact_, N_);
    padic r;
    r.p_ = p_;
    r.zero_ = false;
    r.v_ = -v_;
    r.N_ = N_;
    mpz_class m = pow_p(p_, N_);
    mpz_invert(r.u_.get_mpz_t(), u_.get_mpz_t(), m.get_mpz_t());
    return r;
}

padic padic::operator/(const padic& o) const { return *this * o.inverse(); }

padic padic::pow(long e) const {
    if (e == 0) return exact(p_, 1, zero_ ? kDefaultPadicPrecision : N_);
    if (e < 0) return inverse().pow(-e);
    padic base = *this;
    padic r = exact(p_, 1, zero_ ? kDefaultPadicPrecision : N_);
    long n = e;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

mpz_class padic::integer_rep(long digits) const {
    if (zero_) return 0;
    if (v_ < 0) throw std::invalid_argument("integer_rep of negative valuation value");
    if (v_ >= digits) return 0;
    mpz_class m = pow_p(p_, digits);
    mpz_class r = pow_p(p_, v_) * u_;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

padic padic::truncated(long N) const {
    if (zero_ || N_ <= N) return *this;
    padic r = *this;
    r.N_ = N;
    mpz_mod(r.u_.get_mpz_t(), u_.get_mpz_t(), pow_p(p_, N).get_mpz_t());
    return r;
}

padic::eq_result padic::compare(const padic& a, const padic& b) {
    if (a.exact_ && b.exact_) return {*a.exact_ == *b.exact_, true, 0};
    padic d = a - b;
    if (d.zero_) return {true, false, d.abs_};
    return {false, false, d.v_};
}

std::string padic::str() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    if (zero_) {
        os << "O(" << p_.get_str() << "^" << abs_ << ")";
        return os.str();
    }
    os << u_.get_str() << "*" << p_.get_str() << "^" << v_ << " + O(" << p_.get_str() << "^"
       << (v_ + N_) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const padic& x) { return os << x.str(); }

// --- Hensel ---------------------------------------------------------------

padic hensel_lift_root(const int_poly& f, const mpz_class& p, const mpz_class& seed,
                       long targetN) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("hensel_lift_root: constant polynomial");
    int_poly fp = f.derivative();
    mpz_class fa = f.eval(seed), fpa = fp.eval(seed);
    long t = (fpa == 0) ? targetN + 1 : val_p(fpa, p);
    long s = (fa == 0) ? 2 * t + 1 : val_p(fa, p);
    if (fa != 0 && s <= 2 * t)
        throw not_liftable_error("hensel hypothesis |f(a)| < |f'(a)|^2 violated");
    if (fpa == 0 && fa != 0)
        throw not_liftable_error("hensel hypothesis violated: f'(seed) = 0");

    mpz_class a = seed;
    long prec = std::max<long>(1, s - t); // a is correct mod p^{prec}
    mpz_class mod_target = pow_p(p, targetN);
    while (prec < targetN + t) {
        long next = std::min(2 * prec, targetN + t);
        mpz_class m = pow_p(p, next + t);
        mpz_class fa2 = f.eval(a) % m, fpa2 = fp.eval(a) % m;
        // f'(a) = p^t * unit
        mpz_class unit = fpa2 / pow_p(p, t);
        mpz_class unitinv;
        mpz_invert(unitinv.get_mpz_t(), unit.get_mpz_t(), m.get_mpz_t());
        mpz_class step = (fa2 / pow_p(p, t)) * unitinv;
        a = a - step;
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        prec = next;
    }
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), mod_target.get_mpz_t());
    return padic::from_integer_mod(p, a, targetN);
}

namespace {

std::vector<mpz_class> to_vec_mod(const int_poly& f, const mpz_class& m) {
    std::vector<mpz_class> r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace

namespace zk {

using vec = std::vector<mpz_class>;

vec trimmed(vec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

vec mul(const vec& a, const vec& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return trimmed(std::move(r));
}

vec sub(const vec& a, const vec& b, const mpz_class& m) {
    vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return trimmed(std::move(r));
}

// remainder by monic b
vec rem(vec a, const vec& b, const mpz_class& m) {
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class c = a.back();
        size_t k = a.size() - b.size();
        if (c != 0)
            for (size_t j = 0; j + 1 < b.size(); ++j) {
                a[k + j] -= c * b[j];
                mpz_mod(a[k + j].get_mpz_t(), a[k + j].get_mpz_t(), m.get_mpz_t());
            }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// extended Euclid over F_p: s*a + t*b = 1 (requires coprime seeds)
std::pair<vec, vec> bezout_mod_p(const vec& a, const vec& b, const mpz_class& p) {
    vec r0 = a, r1 = b;
    vec s0{mpz_class(1)}, s1, t0, t1{mpz_class(1)};
    while (!r1.empty()) {
        vec q(std::max(r0.size(), r1.size()), 0), remv = r0;
        mpz_class lcinv;
        mpz_invert(lcinv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        while (remv.size() >= r1.size() && !remv.empty()) {
            mpz_class c = remv.back() * lcinv % p;
            size_t k = remv.size() - r1.size();
            q[k] = c;
            for (size_t j = 0; j < r1.size(); ++j) {
                remv[k + j] -= c * r1[j];
                mpz_mod(remv[k + j].get_mpz_t(), remv[k + j].get_mpz_t(), p.get_mpz_t());
            }
            while (!remv.empty() && remv.back() == 0) remv.pop_back();
        }
        q = trimmed(std::move(q));
        r0 = std::move(r1);
        r1 = std::move(remv);
        vec snew = sub(s0, mul(q, s1, p), p);
        vec tnew = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1); s1 = std::move(snew);
        t0 = std::move(t1); t1 = std::move(tnew);
    }
    if (r0.size() != 1) throw not_liftable_error("hensel_lift_pair: seed factors not coprime mod p");
    mpz_class ginv;
    mpz_invert(ginv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
    for (auto& c : s0) c = c * ginv % p;
    for (auto& c : t0) c = c * ginv % p;
    return {trimmed(std::move(s0)), trimmed(std::move(t0))};
}

} // namespace zk

std::pair<int_poly, int_poly> hensel_lift_pair(const int_poly& f, const int_poly& g0,
                                               const int_poly& h0, const mpz_class& p,
                                               long targetN) {
    if (f.is_zero() || g0.is_zero() || h0.is_zero())
        throw std::invalid_argument("hensel_lift_pair: zero input");
    if (f.lc() % p == 0) throw not_liftable_error("hensel_lift_pair: leading coefficient not a unit mod p");
    int_poly diff = f - g0 * h0;
    for (int i = 0; i <= diff.degree(); ++i)
        if (diff[i] % p != 0) throw not_liftable_error("hensel_lift_pair: seed factorization invalid mod p");

    const mpz_class mod_target = pow_p(p, targetN);
    auto monic_mod = [&](const int_poly& a, const mpz_class& m) {
        std::vector<mpz_class> v = to_vec_mod(a, m);
        mpz_class lcinv;
        mpz_invert(lcinv.get_mpz_t(), v.back().get_mpz_t(), m.get_mpz_t());
        for (auto& c : v) {
            c *= lcinv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        return v;
    };

    // lift the monicized triple, then restore lc(f) on the first factor
    zk::vec fm = monic_mod(f, mod_target);
    zk::vec g = monic_mod(g0, p), h = monic_mod(h0, p);
    auto [s, t] = zk::bezout_mod_p(g, h, p);

    mpz_class m = p;
    while (m < mod_target) {
        mpz_class m2 = m * p;
        zk::vec fv(fm.size());
        for (size_t i = 0; i < fm.size(); ++i) mpz_mod(fv[i].get_mpz_t(), fm[i].get_mpz_t(), m2.get_mpz_t());
        fv = zk::trimmed(std::move(fv));
        zk::vec e = zk::sub(fv, zk::mul(g, h, m2), m2);
        zk::vec em(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), e[i].get_mpz_t(), m.get_mpz_t());
            mpz_mod(em[i].get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        }
        em = zk::trimmed(std::move(em));
        zk::vec gp(g.size()), hp(h.size());
        for (size_t i = 0; i < g.size(); ++i) mpz_mod(gp[i].get_mpz_t(), g[i].get_mpz_t(), p.get_mpz_t());
        for (size_t i = 0; i < h.size(); ++i) mpz_mod(hp[i].get_mpz_t(), h[i].get_mpz_t(), p.get_mpz_t());
        zk::vec dg = zk::rem(zk::mul(em, t, p), zk::trimmed(std::move(gp)), p);
        zk::vec dh = zk::rem(zk::mul(em, s, p), zk::trimmed(std::move(hp)), p);
        for (size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
        for (size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
        for (auto& c : g) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m2.get_mpz_t());
        for (auto& c : h) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m2.get_mpz_t());
        m = m2;
    }

    mpz_class lcf;
    mpz_mod(lcf.get_mpz_t(), f.lc().get_mpz_t(), mod_target.get_mpz_t());
    zk::vec gout(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        mpz_mod(gout[i].get_mpz_t(), mpz_class(g[i] * lcf).get_mpz_t(), mod_target.get_mpz_t());
    return {int_poly(gout), int_poly(h)};
}

}
