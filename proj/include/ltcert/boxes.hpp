#ifndef LTCERT_BOXES_HPP
#define LTCERT_BOXES_HPP

#include <gmpxx.h>
#include <string>

#include "ltcert/int_poly.hpp"

namespace ltcert {

/// Closed rational interval [lo, hi].
struct qiv {
    mpq_class lo, hi;

    qiv() : lo(0), hi(0) {}
    qiv(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {}
    static qiv point(const mpq_class& v) { return {v, v}; }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const mpq_class& v) const { return lo <= v && hi >= v; }
    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
};

qiv operator+(const qiv& a, const qiv& b);
qiv operator-(const qiv& a, const qiv& b);
qiv operator*(const qiv& a, const qiv& b);
qiv operator-(const qiv& a);

/// Axis-aligned rectangle with rational corners (a complex interval).
struct qbox {
    qiv re, im;

    qbox() = default;
    qbox(qiv r, qiv i) : re(std::move(r)), im(std::move(i)) {}
    static qbox point(const mpq_class& x, const mpq_class& y) {
        return {qiv::point(x), qiv::point(y)};
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    mpq_class width() const;       // max of the two side lengths
    bool disjoint(const qbox& o) const;
    /// Range of |z|^2 over the box.
    qiv modulus_squared() const;
    std::string str() const;
};

qbox operator+(const qbox& a, const qbox& b);
qbox operator-(const qbox& a, const qbox& b);
qbox operator*(const qbox& a, const qbox& b);
qbox box_pow(const qbox& a, int n);

/// Interval evaluation of an integer polynomial on a box (Horner).
qbox eval_box(const int_poly& p, const qbox& z);

}

#endif
