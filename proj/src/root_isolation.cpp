#include "ltcert/root_isolation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ltcert/errors.hpp"

namespace ltcert {

namespace {

struct qc { // complex rational
    mpq_class re, im;
};

qc eval_at(const int_poly& p, const qc& z) {
    qc acc{0, 0};
    for (int i = p.degree(); i >= 0; --i) {
        // acc = acc*z + c_i
        mpq_class re = acc.re * z.re - acc.im * z.im + p[i];
        mpq_class im = acc.re * z.im + acc.im * z.re;
        acc = {re, im};
    }
    return acc;
}

mpq_class norm2(const qc& z) { return z.re * z.re + z.im * z.im; }

// rational h with h^2 >= v (v >= 0), close to sqrt(v)
mpq_class sqrt_upper(const mpq_class& v) {
    if (v == 0) return 0;
    mpz_class num = v.get_num(), den = v.get_den();
    // scale for precision: sqrt(num/den) = sqrt(num*den)/den
    mpz_class nd = num * den, r;
    mpz_sqrt(r.get_mpz_t(), nd.get_mpz_t());
    mpq_class h(r + 1, den);
    h.canonicalize();
    return h;
}

mpq_class dyadic_round(const mpq_class& x, unsigned long bits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    mpq_class scaled = x * mpq_class(scale);
    mpz_class rounded;
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    // nearest integer
    mpz_class twice = 2 * num + den;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    mpq_class r(rounded, scale);
    r.canonicalize();
    return r;
}

// Disk certificate: square around z of halfwidth h contains >= 1 root of g,
// where h^2 >= n^2 |g(z)|^2 / |g'(z)|^2. Returns false if g'(z) = 0.
bool root_disk(const int_poly& g, const int_poly& gp, const qc& z, qbox& out) {
    qc gz = eval_at(g, z);
    if (gz.re == 0 && gz.im == 0) {
        out = qbox(qiv::point(z.re), qiv::point(z.im));
        return true;
    }
    qc gpz = eval_at(gp, z);
    mpq_class d2 = norm2(gpz);
    if (d2 == 0) return false;
    mpq_class n(g.degree());
    mpq_class t2 = n * n * norm2(gz) / d2;
    t2.canonicalize();
    mpq_class h = sqrt_upper(t2);
    out = qbox(qiv(z.re - h, z.re + h), qiv(z.im - h, z.im + h));
    return true;
}

struct grid_box {
    qbox b;
};

// connected components of boxes under closed intersection
std::vector<std::vector<int>> components(const std::vector<qbox>& bs) {
    int n = static_cast<int>(bs.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!bs[i].disjoint(bs[j])) parent[find(i)] = find(j);
    std::vector<std::vector<int>> comp(n);
    for (int i = 0; i < n; ++i) comp[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : comp)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

} // namespace

std::vector<qbox> isolate_squarefree_roots(const int_poly& g, const mpq_class& eps) {
    const int n = g.degree();
    if (n <= 0) return {};
    int_poly gp = g.derivative();

    // Cauchy bound
    mpq_class radius = 1;
    for (int i = 0; i < n; ++i) {
        mpq_class c(abs(g[i]), abs(g.lc()));
        c.canonicalize();
        radius = std::max(radius, 1 + c);
    }
    std::vector<qbox> work{qbox(qiv(-radius, radius), qiv(-radius, radius))};

    for (int round = 0; round < 220; ++round) {
        // attempt certification from current survivors
        auto comps = components(work);
        if (static_cast<int>(comps.size()) == n) {
            std::vector<qbox> cert(n);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                // component bounding-box center
                mpq_class xlo = work[comps[i][0]].re.lo, xhi = work[comps[i][0]].re.hi;
                mpq_class ylo = work[comps[i][0]].im.lo, yhi = work[comps[i][0]].im.hi;
                for (int idx : comps[i]) {
                    xlo = std::min(xlo, work[idx].re.lo);
                    xhi = std::max(xhi, work[idx].re.hi);
                    ylo = std::min(ylo, work[idx].im.lo);
                    yhi = std::max(yhi, work[idx].im.hi);
                }
                qc z{mpq_class((xlo + xhi) / 2), mpq_class((ylo + yhi) / 2)};
                ok = root_disk(g, gp, z, cert[i]);
            }
            if (ok) {
                bool disjoint = true;
                for (int i = 0; i < n && disjoint; ++i)
                    for (int j = i + 1; j < n && disjoint; ++j)
                        if (!cert[i].disjoint(cert[j])) disjoint = false;
                if (disjoint) {
                    // n disjoint boxes each holding >= 1 of the n roots: exactly one each
                    for (auto& b : cert) b = refine_isolating_box(g, b, eps);
                    return cert;
                }
            }
        }
        // subdivide survivors
        std::vector<qbox> next;
        next.reserve(work.size() * 4);
        for (const auto& b : work) {
            mpq_class xm = b.re.mid(), ym = b.im.mid();
            qbox quads[4] = {
                qbox(qiv(b.re.lo, xm), qiv(b.im.lo, ym)),
                qbox(qiv(xm, b.re.hi), qiv(b.im.lo, ym)),
                qbox(qiv(b.re.lo, xm), qiv(ym, b.im.hi)),
                qbox(qiv(xm, b.re.hi), qiv(ym, b.im.hi)),
            };
            for (auto& q : quads)
                if (eval_box(g, q).contains_zero()) next.push_back(q);
        }
        work = std::move(next);
        if (work.empty()) throw std::logic_error("root isolation lost all candidate boxes");
    }
    throw precision_exhausted_error("root isolation did not certify within subdivision budget");
}

qbox refine_isolating_box(const int_poly& g, const qbox& b, const mpq_class& eps) {
    int_poly gp = g.derivative();
    const int n = g.degree();
    qbox cur = b;
    int stall = 0;
    while (cur.width() > eps) {
        // Newton step from the center, dyadically rounded
        qc z{cur.re.mid(), cur.im.mid()};
        bool contracted = false;
        qc gz = eval_at(g, z);
        qc gpz = eval_at(gp, z);
        mpq_class d2 = norm2(gpz);
        if (d2 != 0) {
            // z' = z - g(z)/g'(z)
            mpq_class re = z.re - (gz.re * gpz.re + gz.im * gpz.im) / d2;
            mpq_class im = z.im - (gz.im * gpz.re - gz.re * gpz.im) / d2;
            // dyadic grid ~ -log2(width) + 24 bits keeps rationals small
            unsigned long bits = 24;
            {
                mpq_class t = cur.width();
                while (t < 1 && bits < 100000) { t = t * 2; bits += 1; }
            }
            qc zr{dyadic_round(re, bits), dyadic_round(im, bits)};
            qbox cand;
            if (root_disk(g, gp, zr, cand)) {
                (void)n;
                // accept only if the certified disk-box sits inside the current box
                if (cand.re.lo >= cur.re.lo && cand.re.hi <= cur.re.hi &&
                    cand.im.lo >= cur.im.lo && cand.im.hi <= cur.im.hi &&
                    cand.width() < cur.width()) {
                    cur = cand;
                    contracted = true;
                }
            }
        }
        if (!contracted) {
            // grid subdivision inside cur, keep survivors' bounding box
            mpq_class xm = cur.re.mid(), ym = cur.im.mid();
            qbox quads[4] = {
                qbox(qiv(cur.re.lo, xm), qiv(cur.im.lo, ym)),
                qbox(qiv(xm, cur.re.hi), qiv(cur.im.lo, ym)),
                qbox(qiv(cur.re.lo, xm), qiv(ym, cur.im.hi)),
                qbox(qiv(xm, cur.re.hi), qiv(ym, cur.im.hi)),
            };
            mpq_class xlo, xhi, ylo, yhi;
            bool any = false;
            for (auto& q : quads) {
                if (!eval_box(g, q).contains_zero()) continue;
                if (!any) {
                    xlo = q.re.lo; xhi = q.re.hi; ylo = q.im.lo; yhi = q.im.hi;
                    any = true;
                } else {
                    xlo = std::min(xlo, q.re.lo); xhi = std::max(xhi, q.re.hi);
                    ylo = std::min(ylo, q.im.lo); yhi = std::max(yhi, q.im.hi);
                }
            }
            if (!any) throw std::logic_error("refine lost the root");
            qbox nb(qiv(xlo, xhi), qiv(ylo, yhi));
            if (nb.width() >= cur.width()) {
                if (++stall > 4000) throw precision_exhausted_error("refinement stalled");
            } else {
                stall = 0;
            }
            cur = nb;
        }
    }
    return cur;
}

certified_root_set isolate_roots(const int_poly& p, const mpq_class& eps) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of zero polynomial");
    if (eps <= 0) throw std::invalid_argument("isolate_roots needs eps > 0");
    certified_root_set out;
    out.source = p;
    if (p.degree() < 1) return out;

    int zeros = 0;
    int_poly core = p.strip_trailing_zeros(&zeros);
    std::vector<std::pair<int_poly, int>> sf;
    if (core.degree() >= 1) sf = squarefree_decomposition(core);
    if (zeros > 0)
        out.roots.push_back({qbox::point(0, 0), zeros});

    std::vector<std::pair<int, int_poly>> owner; // (index in out.roots, squarefree source)
    if (zeros > 0) owner.emplace_back(-1, int_poly{0, 1});
    for (const auto& [g, mult] : sf) {
        for (auto& b : isolate_squarefree_roots(g, eps)) {
            out.roots.push_back({b, mult});
            owner.emplace_back(static_cast<int>(out.roots.size()) - 1, g);
        }
    }

    // enforce pairwise disjointness across factors
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.roots.size(); ++i)
            for (size_t j = i + 1; j < out.roots.size(); ++j) {
                if (out.roots[i].b.disjoint(out.roots[j].b)) continue;
                changed = true;
                if (out.roots[i].b.width() > 0)
                    out.roots[i].b = refine_isolating_box(owner[i].second, out.roots[i].b,
                                                          out.roots[i].b.width() / 4);
                if (out.roots[j].b.width() > 0)
                    out.roots[j].b = refine_isolating_box(owner[j].second, out.roots[j].b,
                                                          out.roots[j].b.width() / 4);
            }
    }
    return out;
}

}
