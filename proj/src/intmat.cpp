#include "imset/intmat.hpp"

#include <stdexcept>

namespace imset {

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row_j -= q * row_i
void addmul_row(IntMat& m, std::size_t j, std::size_t i, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) m.at(j, c) -= q * m.at(i, c);
}

}  // namespace

HnfResult row_hnf(const IntMat& input) {
  HnfResult res;
  res.h = input;
  res.u = IntMat(input.rows, input.rows);
  for (std::size_t i = 0; i < input.rows; ++i) res.u.at(i, i) = 1;
  IntMat& h = res.h;
  IntMat& u = res.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
    // Gcd elimination: shrink column c below row r to a single nonzero entry.
    while (true) {
      std::size_t best = h.rows;
      for (std::size_t i = r; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == h.rows ||
            cmp(abs(h.at(i, c)), abs(h.at(best, c))) < 0)
          best = i;
      }
      if (best == h.rows) break;  // column is zero below r
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        mpz_class q;
        // Floor division leaves |remainder| < |pivot|, so the loop converges.
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(),
                   h.at(r, c).get_mpz_t());
        addmul_row(h, i, r, q);
        addmul_row(u, i, r, q);
        if (h.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      addmul_row(h, i, r, q);
      addmul_row(u, i, r, q);
    }
    ++r;
  }
  res.rank = static_cast<int>(r);
  return res;
}

int rank(const IntMat& m) { return row_hnf(m).rank; }

std::vector<std::vector<mpz_class>> integer_kernel(const IntMat& m) {
  // Row-reduce m^T: the transform rows matching zero rows of the HNF are a
  // basis of { x : m x = 0 } (as a saturated sublattice of Z^cols).
  HnfResult res = row_hnf(transpose(m));
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t i = res.rank; i < res.h.rows; ++i) {
    std::vector<mpz_class> v(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) v[c] = res.u.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<mpq_class>> solve_rational(
    const IntMat& m, const std::vector<mpq_class>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve_rational: size mismatch");
  std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<mpq_class>> w(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) w[r][c] = mpq_class(m.at(r, c));
    w[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(w[r], w[p]);
    mpq_class inv = 1 / w[r][c];
    for (std::size_t k = c; k <= cols; ++k) w[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || w[i][c] == 0) continue;
      mpq_class f = w[i][c];
      for (std::size_t k = c; k <= cols; ++k) w[i][k] -= f * w[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (w[i][cols] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, mpq_class(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w[i][cols];
  return x;
}

}  // namespace imset
