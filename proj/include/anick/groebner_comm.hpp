#pragma once

#include <optional>
#include <vector>

#include "anick/polynomial.hpp"

namespace anick {

struct CommGB {
  std::vector<CommPoly> basis;
  MonomialOrder order;
  bool reduced = false;
};

// One reduction step of the leading term of f by g, if lt(g) divides lt(f).
std::optional<CommPoly> comm_reduce_once(const CommPoly& f, const CommPoly& g);

// Full reduction. For each monomial, largest first, the reducer with the
// smallest index whose leading term divides it is used.
CommPoly comm_normal_form(const CommPoly& f, const std::vector<CommPoly>& G);

// lcm-based S-polynomial (1/lc f) m2 f - (1/lc g) m1 g.
CommPoly comm_s_polynomial(const CommPoly& f, const CommPoly& g);

CommGB comm_buchberger(const std::vector<CommPoly>& gens);

// Unique reduced basis: monic, interreduced, sorted by leading monomial descending.
CommGB comm_reduce_basis(const CommGB& G);

// Monomials of the given degree not divisible by any leading monomial of G.
std::vector<CommMonomial> standard_monomials(const RingPtr& ring, const std::vector<CommPoly>& G, int degree);

}  // namespace anick
