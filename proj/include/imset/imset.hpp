#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imset/relation.hpp"
#include "imset/statement.hpp"

namespace imset {

// An integer vector indexed by subsets of [n]: coeffs[bitmask(S)].
struct Imset {
  int n = 0;
  std::vector<long long> coeffs;  // size 2^n

  explicit Imset(int n_) : n(n_), coeffs(std::size_t(1) << n_, 0) {}
  long long& operator[](SetMask s) { return coeffs[s]; }
  long long operator[](SetMask s) const { return coeffs[s]; }
  bool is_zero() const;
  Imset& operator+=(const Imset& o);
  Imset& operator-=(const Imset& o);
  bool operator==(const Imset&) const = default;
};

std::string imset_to_json(const Imset& u);
Imset imset_from_json(const std::string& text, int n);

Imset elementary_imset(const CIStatement& s, int n);
Imset semi_elementary_imset(const CIStatement& s, int n);

// The 2^n x sigma(n) matrix whose columns are the elementary imsets in
// canonical statement order.
struct ImsetMatrix {
  int n = 0;
  std::vector<CIStatement> statements;
  std::vector<Imset> columns;
};

ImsetMatrix build_matrix(int n);  // 2 <= n <= 9
int matrix_rank(const ImsetMatrix& A);
std::string matrix_to_csv(const ImsetMatrix& A);
std::string matrix_to_json(const ImsetMatrix& A);

// Inverse of semi_elementary_imset, up to I <-> J (canonical form returned).
std::optional<CIStatement> recognize_semi_elementary(const Imset& u);

Imset sum_imsets(const RelationSide& side, int n);

struct VerificationReport {
  std::vector<Imset> side_images;
  bool sides_equal = false;
  std::optional<CIStatement> recognized;
  std::optional<bool> target_matches;  // set iff the relation declares a target
  bool valid = false;
};

VerificationReport verify_relation(const CIRelation& r);

struct Decomposition {
  CIStatement target;
  std::vector<CIStatement> parts;  // sorted multiset of elementary statements
};

// All multisets of <= max_terms elementary statements over [n] whose imset
// sum equals the target's semi-elementary imset.  Exhaustive within the
// bound; deterministic order.
std::vector<Decomposition> decompose(const CIStatement& target, int n,
                                     int max_terms);

// Prop.-1 extension: a quadratic multilinear binomial with equal side images
// whose common image is semi-elementary yields a three-sided relation.
std::optional<CIRelation> extend_quadratic_binomial(const BinomialExpr& b, int n);

}  // namespace imset
