#ifndef LTCERT_ZFACTOR_HPP
#define LTCERT_ZFACTOR_HPP

#include <vector>

#include "ltcert/int_poly.hpp"

namespace ltcert {

inline constexpr int kDefaultFactorDegreeCap = 24;

/// Irreducible factors over Q with multiplicity; factors primitive with
/// positive leading coefficient. Throws unsupported_degree_error when a
/// squarefree factor exceeds the cap.
std::vector<std::pair<int_poly, int>> factor_z(const int_poly& p,
                                               int degree_cap = kDefaultFactorDegreeCap);

bool is_irreducible_z(const int_poly& p, int degree_cap = kDefaultFactorDegreeCap);

}

#endif
