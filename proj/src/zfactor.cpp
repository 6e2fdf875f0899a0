#include "ltcert/zfactor.hpp"

#include <algorithm>
#include <stdexcept>

#include "ltcert/errors.hpp"
#include "ltcert/finite_field.hpp"

namespace ltcert {

namespace {

// Polynomials with coefficients in Z/m, lowest degree first, no leading zeros.
using zk_poly = std::vector<mpz_class>;

zk_poly trimmed(zk_poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

zk_poly reduce(const int_poly& f, const mpz_class& m) {
    zk_poly r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    return trimmed(std::move(r));
}

zk_poly reduce(const zk_poly& f, const mpz_class& m) {
    zk_poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    return trimmed(std::move(r));
}

zk_poly mul_mod(const zk_poly& a, const zk_poly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    zk_poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(r, m);
}

zk_poly sub_mod(const zk_poly& a, const zk_poly& b, const mpz_class& m) {
    zk_poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(r, m);
}

// remainder of a by monic b
zk_poly rem_monic(zk_poly a, const zk_poly& b, const mpz_class& m) {
    const int db = static_cast<int>(b.size()) - 1;
    a = trimmed(std::move(a));
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        mpz_class c = a.back();
        int k = static_cast<int>(a.size()) - 1 - db;
        if (c != 0)
            for (int j = 0; j < db; ++j) {
                a[k + j] -= c * b[j];
                mpz_mod(a[k + j].get_mpz_t(), a[k + j].get_mpz_t(), m.get_mpz_t());
            }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("inv_mod: not invertible");
    return r;
}

zk_poly make_monic(const zk_poly& a, const mpz_class& m) {
    mpz_class c = inv_mod(a.back(), m);
    zk_poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        mpz_mod(r[i].get_mpz_t(), mpz_class(a[i] * c).get_mpz_t(), m.get_mpz_t());
    return r;
}

// extended Euclid over F_p: returns (g monic, s, t) with s*a + t*b = g.
struct ext_gcd_result {
    zk_poly g, s, t;
};

ext_gcd_result ext_gcd_mod_p(const zk_poly& a, const zk_poly& b, const mpz_class& p) {
    zk_poly r0 = reduce(a, p), r1 = reduce(b, p);
    zk_poly s0{mpz_class(1)}, s1{};
    zk_poly t0{}, t1{mpz_class(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        zk_poly q;
        {
            zk_poly rem = r0;
            int d1 = static_cast<int>(r1.size()) - 1;
            mpz_class lcinv = inv_mod(r1.back(), p);
            q.assign(std::max<size_t>(rem.size(), r1.size()), 0);
            while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
                mpz_class c;
                mpz_mod(c.get_mpz_t(), mpz_class(rem.back() * lcinv).get_mpz_t(), p.get_mpz_t());
                int k = static_cast<int>(rem.size()) - 1 - d1;
                q[k] = c;
                for (int j = 0; j <= d1; ++j) {
                    rem[k + j] -= c * r1[j];
                    mpz_mod(rem[k + j].get_mpz_t(), rem[k + j].get_mpz_t(), p.get_mpz_t());
                }
                while (!rem.empty() && rem.back() == 0) rem.pop_back();
            }
            q = trimmed(std::move(q));
            r0 = std::move(rem);
        }
        std::swap(r0, r1); // now r1 = old r0 mod old r1? careful: r0 holds remainder
        // after the block above, r0 = remainder, r1 = divisor; swap to continue
        // (r0', r1') = (r1, remainder)
        // s,t updates: s' = s0 - q*s1 etc.
        zk_poly snew = sub_mod(s0, mul_mod(q, s1, p), p);
        zk_poly tnew = sub_mod(t0, mul_mod(q, t1, p), p);
        s0 = std::move(s1); s1 = std::move(snew);
        t0 = std::move(t1); t1 = std::move(tnew);
    }
    // r0 is the gcd
    mpz_class lcinv = inv_mod(r0.back(), p);
    zk_poly g(r0.size()), s(s0.size()), t(t0.size());
    for (size_t i = 0; i < r0.size(); ++i) mpz_mod(g[i].get_mpz_t(), mpz_class(r0[i] * lcinv).get_mpz_t(), p.get_mpz_t());
    for (size_t i = 0; i < s0.size(); ++i) mpz_mod(s[i].get_mpz_t(), mpz_class(s0[i] * lcinv).get_mpz_t(), p.get_mpz_t());
    for (size_t i = 0; i < t0.size(); ++i) mpz_mod(t[i].get_mpz_t(), mpz_class(t0[i] * lcinv).get_mpz_t(), p.get_mpz_t());
    return {trimmed(std::move(g)), trimmed(std::move(s)), trimmed(std::move(t))};
}

// Lift f = g*h from mod p to mod p^K (f, g, h monic; s*g + t*h = 1 mod p).
void lift_pair(const zk_poly& f, zk_poly& g, zk_poly& h,
               const zk_poly& s, const zk_poly& t, const mpz_class& p, int K) {
    mpz_class m = p;
    for (int step = 1; step < K; ++step) {
        mpz_class m2 = m * p;
        zk_poly e = sub_mod(reduce(f, m2), mul_mod(g, h, m2), m2);
        zk_poly em(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            mpz_class q0;
            mpz_divexact(q0.get_mpz_t(), e[i].get_mpz_t(), m.get_mpz_t());
            mpz_mod(em[i].get_mpz_t(), q0.get_mpz_t(), p.get_mpz_t());
        }
        em = trimmed(std::move(em));
        zk_poly dg = rem_monic(mul_mod(em, t, p), reduce(g, p), p);
        zk_poly dh = rem_monic(mul_mod(em, s, p), reduce(h, p), p);
        if (g.size() < dg.size()) g.resize(dg.size(), 0);
        for (size_t i = 0; i < dg.size(); ++i) g[i] += m * dg[i];
        if (h.size() < dh.size()) h.resize(dh.size(), 0);
        for (size_t i = 0; i < dh.size(); ++i) h[i] += m * dh[i];
        g = reduce(g, m2);
        h = reduce(h, m2);
        m = m2;
    }
}

// f monic mod p^K; factors monic mod p, pairwise coprime, product = f mod p.
std::vector<zk_poly> lift_multi(const zk_poly& f, std::vector<zk_poly> factors,
                                const mpz_class& p, int K) {
    if (factors.size() == 1) {
        return {reduce(f, [&] { mpz_class m; mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), K); return m; }())};
    }
    size_t half = factors.size() / 2;
    zk_poly a{mpz_class(1)}, b{mpz_class(1)};
    for (size_t i = 0; i < half; ++i) a = mul_mod(a, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) b = mul_mod(b, factors[i], p);
    auto bez = ext_gcd_mod_p(a, b, p);
    if (bez.g.size() != 1) throw std::logic_error("lift_multi: factors not coprime mod p");
    zk_poly g = a, h = b;
    lift_pair(f, g, h, bez.s, bez.t, p, K);
    std::vector<zk_poly> left(factors.begin(), factors.begin() + half);
    std::vector<zk_poly> right(factors.begin() + half, factors.end());
    auto lg = lift_multi(g, std::move(left), p, K);
    auto lh = lift_multi(h, std::move(right), p, K);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

mpz_class symmetric_rep(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

// Mignotte-style bound on coefficients of any factor of g times lc(g).
mpz_class factor_coeff_bound(const int_poly& g) {
    mpz_class norm1 = 0;
    for (int i = 0; i <= g.degree(); ++i) norm1 += abs(g[i]);
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(g.degree() + 1));
    return two_n * norm1 * abs(g.lc());
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Factor a primitive squarefree nonconstant polynomial.
std::vector<int_poly> factor_squarefree(const int_poly& g0, int degree_cap) {
    if (g0.degree() > degree_cap)
        throw unsupported_degree_error("factor_z: degree " + std::to_string(g0.degree()) +
                                       " exceeds cap " + std::to_string(degree_cap));
    if (g0.degree() == 1) return {g0};

    // choose an odd prime keeping g squarefree with unit leading coefficient
    mpz_class p = 3;
    for (;;) {
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) && g0.lc() % p != 0) {
            fq_field F(p, int_poly{0, 1});
            fq_poly gp = fqp::from_int_poly(F, g0);
            if (fqp::degree(gp) == g0.degree() && fqp::is_squarefree(F, gp)) break;
        }
        p += 2;
    }

    fq_field F(p, int_poly{0, 1});
    auto modular = fqp::factor(F, fqp::from_int_poly(F, g0));
    if (modular.size() == 1) return {g0}; // irreducible mod p

    // Hensel precision: p^K > 2 * bound
    mpz_class bound = 2 * factor_coeff_bound(g0);
    int K = 1;
    mpz_class pk = p;
    while (pk <= bound) { pk *= p; ++K; }

    std::vector<zk_poly> base;
    base.reserve(modular.size());
    for (auto& [fac, mult] : modular) {
        zk_poly f(fac.size());
        for (size_t i = 0; i < fac.size(); ++i) f[i] = fac[i][0];
        base.push_back(trimmed(std::move(f)));
        (void)mult; // squarefree: all multiplicities 1
    }
    zk_poly f_monic = make_monic(reduce(g0, pk), pk);
    std::vector<zk_poly> lifted = lift_multi(f_monic, std::move(base), p, K);

    // recombination by increasing cardinality
    std::vector<int_poly> out;
    int_poly rem_poly = g0;
    std::vector<zk_poly> avail = std::move(lifted);
    int card = 1;
    while (static_cast<int>(avail.size()) > 0 && 2 * card <= static_cast<int>(avail.size())) {
        bool found_any = true;
        while (found_any && 2 * card <= static_cast<int>(avail.size())) {
            found_any = false;
            std::vector<int> idx(card);
            for (int i = 0; i < card; ++i) idx[i] = i;
            bool more = true;
            while (more) {
                zk_poly prod{reduce(int_poly::constant(rem_poly.lc()), pk)};
                for (int i : idx) prod = mul_mod(prod, avail[i], pk);
                std::vector<mpz_class> cand(prod.size());
                for (size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_rep(prod[i], pk);
                int_poly trial = int_poly(std::move(cand)).primitive_part();
                bool divides = false;
                int_poly quot;
                try {
                    quot = rem_poly.divexact(trial);
                    divides = true;
                } catch (const std::invalid_argument&) {
                }
                if (divides && trial.degree() >= 1) {
                    out.push_back(trial);
                    rem_poly = quot.primitive_part();
                    std::vector<zk_poly> keep;
                    for (int i = 0, j = 0; i < static_cast<int>(avail.size()); ++i) {
                        if (j < card && idx[j] == i) { ++j; continue; }
                        keep.push_back(avail[i]);
                    }
                    avail = std::move(keep);
                    found_any = true;
                    break;
                }
                more = next_combination(idx, static_cast<int>(avail.size()));
            }
        }
        ++card;
    }
    if (rem_poly.degree() >= 1) out.push_back(rem_poly);
    return out;
}

} // namespace

std::vector<std::pair<int_poly, int>> factor_z(const int_poly& p, int degree_cap) {
    if (p.is_zero()) throw std::invalid_argument("factor_z of zero polynomial");
    std::vector<std::pair<int_poly, int>> out;
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        int zeros = sf.trailing_zeros();
        int_poly core = sf.strip_trailing_zeros();
        if (zeros > 0) out.emplace_back(int_poly{0, 1}, mult * zeros);
        if (core.degree() >= 1)
            for (auto& f : factor_squarefree(core.primitive_part(), degree_cap))
                out.emplace_back(f, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_z(const int_poly& p, int degree_cap) {
    if (p.is_zero() || p.degree() < 1) return false;
    int_poly pp = p.primitive_part();
    auto fs = factor_z(pp, degree_cap);
    return fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == pp.degree();
}

}
