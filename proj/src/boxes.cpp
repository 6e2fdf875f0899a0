#include "ltcert/boxes.hpp"

#include <algorithm>
#include <sstream>

namespace ltcert {

qiv operator+(const qiv& a, const qiv& b) { return {a.lo + b.lo, a.hi + b.hi}; }
qiv operator-(const qiv& a, const qiv& b) { return {a.lo - b.hi, a.hi - b.lo}; }
qiv operator-(const qiv& a) { return {-a.hi, -a.lo}; }

qiv operator*(const qiv& a, const qiv& b) {
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

mpq_class qbox::width() const { return std::max(re.width(), im.width()); }

bool qbox::disjoint(const qbox& o) const {
    if (re.hi < o.re.lo || o.re.hi < re.lo) return true;
    if (im.hi < o.im.lo || o.im.hi < im.lo) return true;
    return false;
}

qiv qbox::modulus_squared() const {
    auto nearest = [](const qiv& iv) -> mpq_class {
        if (iv.contains_zero()) return 0;
        return iv.lo > 0 ? iv.lo : iv.hi;
    };
    auto farthest = [](const qiv& iv) -> mpq_class {
        return abs(iv.lo) > abs(iv.hi) ? abs(iv.lo) : abs(iv.hi);
    };
    mpq_class nx = nearest(re), ny = nearest(im);
    mpq_class fx = farthest(re), fy = farthest(im);
    return {nx * nx + ny * ny, fx * fx + fy * fy};
}

std::string qbox::str() const {
    std::ostringstream os;
    os << "[" << re.lo << "," << re.hi << "]x[" << im.lo << "," << im.hi << "]";
    return os.str();
}

qbox operator+(const qbox& a, const qbox& b) { return {a.re + b.re, a.im + b.im}; }
qbox operator-(const qbox& a, const qbox& b) { return {a.re - b.re, a.im - b.im}; }

qbox operator*(const qbox& a, const qbox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

qbox box_pow(const qbox& a, int n) {
    qbox r = qbox::point(1, 0);
    qbox base = a;
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

qbox eval_box(const int_poly& p, const qbox& z) {
    qbox acc = qbox::point(0, 0);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re.lo += p[i]; acc.re.hi += p[i];
    }
    return acc;
}

}
