#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "imset/imset.hpp"
#include "imset/relation.hpp"
#include "imset/statement.hpp"

namespace imset {

// x^{v+} - x^{v-} for v in ker_Z(A_n), exponents indexed by the canonical
// elementary-statement order.  Canonical sign: first nonzero entry positive.
struct ToricBinomial {
  std::vector<int> vec;

  std::vector<int> plus() const;
  std::vector<int> minus() const;
  int degree_plus() const;
  int degree_minus() const;
  int total_degree() const;  // max of the two side degrees
  bool is_homogeneous() const;  // degree_plus == degree_minus
  bool is_multilinear() const;  // every |entry| <= 1
  void canonicalize();          // flip sign if first nonzero entry < 0

  bool operator==(const ToricBinomial&) const = default;
  auto operator<=>(const ToricBinomial&) const = default;
};

std::string render(const ToricBinomial& b, const std::vector<CIStatement>& stmts);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Z-basis of ker_Z(A), size sigma(n) - rank(A).
std::vector<std::vector<long long>> kernel_basis(const ImsetMatrix& A);

// Graver basis: all primitive kernel vectors (one representative per +/-
// pair), via Pottier completion with conformal reduction.  Sorted by
// (total degree, vec).  budget_secs 0 = unlimited.
std::vector<ToricBinomial> graver_basis(const ImsetMatrix& A,
                                        double budget_secs = 0.0);

// Minimal binomial generating set of I_A, via degree-ordered fiber
// connectivity: a degree needs new generators exactly when its fiber is
// disconnected under lower-degree moves, and the count is the number of
// missing bridges.  Sorted like graver_basis.
std::vector<ToricBinomial> markov_basis(const ImsetMatrix& A,
                                        double budget_secs = 0.0);

// Generating set of I_A by the textbook route: the lattice-basis ideal of
// kernel_basis saturated by every variable in turn (one reverse-lex Groebner
// basis per variable).  Slower than markov_basis; used for cross-checks.
std::vector<ToricBinomial> toric_ideal_generators(const ImsetMatrix& A,
                                                  double budget_secs = 0.0);

// Reduced Groebner basis of the binomial ideal generated by `gens` in
// Q[x_1..x_nvars] under grevlex (x_1 > ... > x_nvars); canonical, so two
// generating sets give equal ideals iff the outputs are equal.
std::vector<ToricBinomial> binomial_reduced_groebner(
    const std::vector<ToricBinomial>& gens, int nvars,
    double budget_secs = 0.0);

bool same_binomial_ideal(const std::vector<ToricBinomial>& a,
                         const std::vector<ToricBinomial>& b, int nvars);

struct BinomialClassification {
  int total_degree = 0;
  bool homogeneous = false;
  bool multilinear = false;
  int symmetry_class = -1;  // S_n-orbit id within the classified list
};

std::vector<BinomialClassification> classify(
    const std::vector<ToricBinomial>& binomials, int n);

// Prop.-1 extension of every quadratic multilinear binomial in the list;
// throws std::runtime_error on any element that fails to extend.
std::vector<CIRelation> quadratics_to_relations(
    const std::vector<ToricBinomial>& binomials, int n);

}  // namespace imset
