#include "ltcert/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ltcert {

void int_poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int_poly::int_poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

int_poly::int_poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

int_poly int_poly::x_power(int k) {
    std::vector<mpz_class> c(k + 1, 0);
    c[k] = 1;
    return int_poly(std::move(c));
}

int_poly int_poly::constant(const mpz_class& c) {
    return int_poly(std::vector<mpz_class>{c});
}

const mpz_class& int_poly::lc() const {
    if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
    return c_.back();
}

const mpz_class& int_poly::operator[](int i) const {
    static const mpz_class zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

int_poly int_poly::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return int_poly(std::move(c));
}

int_poly int_poly::operator+(const int_poly& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return int_poly(std::move(c));
}

int_poly int_poly::operator-(const int_poly& o) const { return *this + (-o); }

int_poly int_poly::operator*(const int_poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return int_poly(std::move(c));
}

int_poly int_poly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return int_poly(std::move(c));
}

mpz_class int_poly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class int_poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + mpq_class(*it);
        acc.canonicalize();
    }
    return acc;
}

int_poly int_poly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    return int_poly(std::move(c));
}

mpz_class int_poly::content() const {
    mpz_class g = 0;
    for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

int_poly int_poly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lc() < 0) g = -g;
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return int_poly(std::move(c));
}

int int_poly::trailing_zeros() const {
    int n = 0;
    while (n < static_cast<int>(c_.size()) && c_[n] == 0) ++n;
    return is_zero() ? 0 : n;
}

int_poly int_poly::strip_trailing_zeros(int* stripped) const {
    int n = trailing_zeros();
    if (stripped) *stripped = n;
    if (n == 0) return *this;
    return int_poly(std::vector<mpz_class>(c_.begin() + n, c_.end()));
}

int_poly int_poly::divexact(const int_poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw std::invalid_argument("inexact polynomial division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(degree() - d.degree() + 1, 0);
    for (int i = degree(); i >= d.degree(); --i) {
        if (rem[i] == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), d.lc().get_mpz_t());
        if (r != 0) throw std::invalid_argument("inexact polynomial division");
        quo[i - d.degree()] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::invalid_argument("inexact polynomial division");
    return int_poly(std::move(quo));
}

std::string int_poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const int_poly& p) { return os << p.str(); }

// --- transforms --------------------------------------------------------------

int_poly scale_roots(const int_poly& p, const mpz_class& u, const mpz_class& w) {
    if (p.is_zero()) throw std::invalid_argument("scale_roots of zero polynomial");
    if (u == 0 || w == 0) throw std::invalid_argument("scale_roots by 0");
    int n = p.degree();
    std::vector<mpz_class> c(n + 1);
    std::vector<mpz_class> upow(n + 1), wpow(n + 1);
    upow[0] = 1; wpow[0] = 1;
    for (int i = 1; i <= n; ++i) { upow[i] = upow[i - 1] * u; wpow[i] = wpow[i - 1] * w; }
    for (int i = 0; i <= n; ++i) c[i] = p[i] * upow[n - i] * wpow[i];
    return int_poly(std::move(c)).primitive_part();
}

int_poly reverse_roots(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("reverse_roots of zero polynomial");
    int_poly q = p.strip_trailing_zeros();
    std::vector<mpz_class> c(q.coeffs().rbegin(), q.coeffs().rend());
    return int_poly(std::move(c)).primitive_part();
}

int_poly shift_roots(const int_poly& p, const mpq_class& delta) {
    if (p.is_zero()) throw std::invalid_argument("shift_roots of zero polynomial");
    // q(y) = w^n p(y + u/w), roots alpha - delta
    const mpz_class u = delta.get_num(), w = delta.get_den();
    int n = p.degree();
    // Horner: ((a_n (y+d) + a_{n-1})(y+d) + ...) with rational accumulation
    std::vector<mpq_class> acc{mpq_class(p[n])};
    for (int i = n - 1; i >= 0; --i) {
        // acc = acc*(y+d) + a_i
        std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] += acc[j] * delta;
        }
        next[0] += p[i];
        for (auto& v : next) v.canonicalize();
        acc = std::move(next);
    }
    std::vector<mpz_class> c(acc.size());
    mpz_class wn;
    mpz_pow_ui(wn.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n));
    for (size_t i = 0; i < acc.size(); ++i) {
        mpq_class v = acc[i] * mpq_class(wn);
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("shift_roots: non-integral result");
        c[i] = v.get_num();
    }
    return int_poly(std::move(c));
}

// --- Bareiss fraction-free determinant over an integral domain ---------------

namespace {

template <class T>
struct ring_ops;

template <>
struct ring_ops<mpz_class> {
    static bool is_zero(const mpz_class& a) { return a == 0; }
    static mpz_class one() { return 1; }
    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class divexact(const mpz_class& a, const mpz_class& b) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static mpz_class neg(const mpz_class& a) { return -a; }
};

template <>
struct ring_ops<int_poly> {
    static bool is_zero(const int_poly& a) { return a.is_zero(); }
    static int_poly one() { return int_poly{1}; }
    static int_poly mul(const int_poly& a, const int_poly& b) { return a * b; }
    static int_poly sub(const int_poly& a, const int_poly& b) { return a - b; }
    static int_poly divexact(const int_poly& a, const int_poly& b) { return a.divexact(b); }
    static int_poly neg(const int_poly& a) { return -a; }
};

template <class T>
T bareiss_det(std::vector<std::vector<T>> m) {
    using R = ring_ops<T>;
    const int n = static_cast<int>(m.size());
    if (n == 0) return R::one();
    T prev = R::one();
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (R::is_zero(m[k][k])) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!R::is_zero(m[i][k])) { swap = i; break; }
            if (swap < 0) return T{}; // singular
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T t = R::sub(R::mul(m[i][j], m[k][k]), R::mul(m[i][k], m[k][j]));
                m[i][j] = R::divexact(t, prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    return negate ? R::neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Sylvester matrix of A, B (coefficients in T, highest degree first rows).
template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& a, const std::vector<T>& b) {
    const int m = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(b.size()) - 1;
    const int sz = m + n;
    std::vector<std::vector<T>> s(sz, std::vector<T>(sz));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
    return s;
}

} // namespace

mpz_class resultant(const int_poly& p, const int_poly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return 1;
    if (p.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), p.lc().get_mpz_t(), static_cast<unsigned long>(q.degree()));
        return r;
    }
    if (q.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), q.lc().get_mpz_t(), static_cast<unsigned long>(p.degree()));
        return r;
    }
    return bareiss_det(sylvester(p.coeffs(), q.coeffs()));
}

namespace {

// Res_y(A, B) where A, B in (Z[x])[y], both nonzero leading y-coefficient.
int_poly resultant_y(const std::vector<int_poly>& a, const std::vector<int_poly>& b) {
    return bareiss_det(sylvester(a, b));
}

int_poly composed_product_nonzero(const int_poly& p, const int_poly& q) {
    // A(y) = p(y); B(y) = y^m q(x/y) = sum_j q_{m-j} x^{m-j} y^j
    const int m = q.degree();
    std::vector<int_poly> a(p.degree() + 1), b(m + 1);
    for (int i = 0; i <= p.degree(); ++i) a[i] = int_poly::constant(p[i]);
    for (int j = 0; j <= m; ++j) b[j] = int_poly::x_power(m - j) * q[m - j];
    return resultant_y(a, b);
}

} // namespace

int_poly composed_product(const int_poly& p, const int_poly& q) {
    if (p.is_zero() || q.is_zero() || p.degree() < 1 || q.degree() < 1)
        throw std::invalid_argument("composed_product needs nonconstant inputs");
    int vp = 0, vq = 0;
    int_poly p1 = p.strip_trailing_zeros(&vp);
    int_poly q1 = q.strip_trailing_zeros(&vq);
    const int n = p.degree(), m = q.degree();
    const int zeros = vp * m + vq * n - vp * vq;
    int_poly core{1};
    if (p1.degree() >= 1 && q1.degree() >= 1)
        core = composed_product_nonzero(p1, q1);
    int_poly r = core;
    if (zeros > 0) {
        std::vector<mpz_class> shifted(zeros, 0);
        for (const auto& c : r.coeffs()) shifted.push_back(c);
        r = int_poly(std::move(shifted));
    }
    return r.primitive_part();
}

int_poly power_transform(const int_poly& p, int b) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("power_transform needs nonconstant input");
    if (b < 1) throw std::invalid_argument("power_transform exponent must be >= 1");
    if (b == 1) return p.primitive_part();
    // A(y) = p(y); B(y) = x - y^b
    std::vector<int_poly> a(p.degree() + 1), bb(b + 1);
    for (int i = 0; i <= p.degree(); ++i) a[i] = int_poly::constant(p[i]);
    bb[0] = int_poly::x_power(1);
    for (int j = 1; j < b; ++j) bb[j] = int_poly{};
    bb[b] = int_poly{-1};
    return resultant_y(a, bb).primitive_part();
}

// --- gcd / squarefree ---------------------------------------------------------

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
int_poly pseudo_rem(const int_poly& a, const int_poly& b) {
    int_poly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        // r = lc(b)*r - lc(r)*x^k*b
        int k = r.degree() - db;
        std::vector<mpz_class> c(k, 0);
        for (const auto& v : b.coeffs()) c.push_back(v);
        r = r * b.lc() - int_poly(std::move(c)) * r.lc();
    }
    return r;
}

} // namespace

int_poly gcd(const int_poly& a, const int_poly& b) {
    if (a.is_zero()) return b.is_zero() ? int_poly{} : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    int_poly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        int_poly r = pseudo_rem(f, g);
        f = g;
        g = r.is_zero() ? int_poly{} : r.primitive_part();
    }
    return f.primitive_part();
}

int_poly squarefree_part(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    int_poly pp = p.primitive_part();
    if (pp.degree() < 1) return int_poly{1};
    int_poly g = gcd(pp, pp.derivative());
    return pp.divexact(g).primitive_part();
}

std::vector<std::pair<int_poly, int>> squarefree_decomposition(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of zero polynomial");
    int_poly f = p.primitive_part();
    std::vector<std::pair<int_poly, int>> out;
    if (f.degree() < 1) return out;
    // Yun's algorithm
    int_poly fp = f.derivative();
    int_poly u = gcd(f, fp);
    int_poly v = f.divexact(u);
    int_poly w = fp.divexact(u);
    int i = 1;
    while (v.degree() > 0) {
        int_poly z = w - v.derivative();
        int_poly g = gcd(v, z);
        if (g.degree() > 0) out.emplace_back(g.primitive_part(), i);
        v = v.divexact(g);
        w = z.divexact(g);
        ++i;
    }
    return out;
}

mpq_class min_nonzero_root_bound(const int_poly& p) {
    if (p.is_zero()) throw std::invalid_argument("min_nonzero_root_bound of zero polynomial");
    int_poly q = p.strip_trailing_zeros();
    if (q.degree() < 1) throw std::invalid_argument("min_nonzero_root_bound: no nonzero roots");
    mpz_class c0 = abs(q[0]);
    mpz_class mx = 0;
    for (int i = 1; i <= q.degree(); ++i) mx = std::max(mx, mpz_class(abs(q[i])));
    mpq_class b(c0, c0 + mx);
    b.canonicalize();
    return b;
}

}
