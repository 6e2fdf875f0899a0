#ifndef LTCERT_ROOT_ISOLATION_HPP
#define LTCERT_ROOT_ISOLATION_HPP

#include <vector>

#include "ltcert/boxes.hpp"
#include "ltcert/int_poly.hpp"

namespace ltcert {

struct isolated_root {
    qbox b;
    int multiplicity;
};

/// Pairwise disjoint boxes, each certified to contain exactly the stated
/// number of roots (with multiplicity); multiplicities sum to deg(source)
/// and every box has width <= the requested eps.
struct certified_root_set {
    std::vector<isolated_root> roots;
    int_poly source;
};

certified_root_set isolate_roots(const int_poly& p, const mpq_class& eps);

/// Boxes for all deg(g) distinct roots of a squarefree polynomial.
std::vector<qbox> isolate_squarefree_roots(const int_poly& g, const mpq_class& eps);

/// Shrink an isolating box of a simple root of squarefree g below eps.
qbox refine_isolating_box(const int_poly& g, const qbox& b, const mpq_class& eps);

}

#endif
