#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace imset {

// Dense matrix over arbitrary-precision integers, row-major.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
};

IntMat transpose(const IntMat& m);

// Row-style Hermite normal form: H = U*A with U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot).  Zero rows sink to the
// bottom (and are kept, so H has the same shape as A).
struct HnfResult {
  IntMat h;
  IntMat u;      // unimodular transform, u * input = h
  int rank = 0;  // number of nonzero rows of h
};
HnfResult row_hnf(const IntMat& m);

int rank(const IntMat& m);

// Z-basis of the right kernel { x : m x = 0 }; size cols - rank(m).
std::vector<std::vector<mpz_class>> integer_kernel(const IntMat& m);

// One rational solution of m x = b (free variables set to 0), if consistent.
std::optional<std::vector<mpq_class>> solve_rational(
    const IntMat& m, const std::vector<mpq_class>& b);

}  // namespace imset
