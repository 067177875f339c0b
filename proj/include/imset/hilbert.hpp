#pragma once

#include <vector>

#include <gmpxx.h>

#include "imset/groebner.hpp"

namespace imset {

struct DimDeg {
  int krull_dim = 0;      // affine dimension of the cone
  mpz_class degree = 1;   // projective degree
  bool operator==(const DimDeg&) const = default;
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/I for the
// monomial ideal generated by `gens`, as dense coefficients by degree.
std::vector<mpz_class> hilbert_numerator(std::vector<Exp> gens,
                                         std::size_t nvars);

// Dimension and degree of a homogeneous ideal via the Hilbert series of its
// initial ideal (grevlex).  Throws on non-homogeneous generators.
DimDeg dim_degree(const IdealHandle& I, std::size_t nvars,
                  double budget_secs = 0);

}  // namespace imset
