#include "imset/imset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include <gmpxx.h>
#include <json.hpp>

namespace imset {

bool Imset::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

Imset& Imset::operator+=(const Imset& o) {
  if (n != o.n) throw std::invalid_argument("imset size mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Imset& Imset::operator-=(const Imset& o) {
  if (n != o.n) throw std::invalid_argument("imset size mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

std::string imset_to_json(const Imset& u) {
  nlohmann::json j = nlohmann::json::object();
  for (SetMask s = 0; s < (1u << u.n); ++s)
    if (u[s] != 0) j[mask_to_string(s) == "e" ? "" : mask_to_string(s)] = u[s];
  return j.dump();
}

Imset imset_from_json(const std::string& text, int n) {
  Imset u(n);
  auto j = nlohmann::json::parse(text);
  for (auto& [key, value] : j.items()) {
    SetMask s = 0;
    for (char c : key) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad subset key: " + key);
      s = static_cast<SetMask>(s | (1u << (c - '1')));
    }
    if (s >= (1u << n)) throw std::invalid_argument("subset key out of range: " + key);
    u[s] = value.get<long long>();
  }
  return u;
}

Imset semi_elementary_imset(const CIStatement& s, int n) {
  if (s.max_index() > n) throw std::invalid_argument("statement exceeds ambient n");
  Imset u(n);
  u[static_cast<SetMask>(s.lhs() | s.rhs() | s.cond())] += 1;
  u[s.cond()] += 1;
  u[static_cast<SetMask>(s.lhs() | s.cond())] -= 1;
  u[static_cast<SetMask>(s.rhs() | s.cond())] -= 1;
  return u;
}

Imset elementary_imset(const CIStatement& s, int n) {
  if (!s.elementary())
    throw std::invalid_argument("elementary_imset needs an elementary statement");
  return semi_elementary_imset(s, n);
}

ImsetMatrix build_matrix(int n) {
  if (n < 2 || n > 9) throw std::domain_error("build_matrix supports 2 <= n <= 9");
  ImsetMatrix A;
  A.n = n;
  A.statements = enumerate_elementary(n);
  for (const auto& s : A.statements) A.columns.push_back(elementary_imset(s, n));
  return A;
}

int matrix_rank(const ImsetMatrix& A) {
  // Fraction-free elimination over exact integers, rows = subsets.
  std::size_t rows = std::size_t(1) << A.n;
  std::size_t cols = A.columns.size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m[r][c] = static_cast<long>(A.columns[c].coeffs[r]);
  int rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::string matrix_to_csv(const ImsetMatrix& A) {
  std::ostringstream out;
  out << "subset";
  for (const auto& s : A.statements) out << "," << render(s);
  out << "\n";
  for (SetMask r = 0; r < (1u << A.n); ++r) {
    out << mask_to_string(r);
    for (const auto& col : A.columns) out << "," << col[r];
    out << "\n";
  }
  return out.str();
}

std::string matrix_to_json(const ImsetMatrix& A) {
  nlohmann::json j;
  j["n"] = A.n;
  for (std::size_t c = 0; c < A.statements.size(); ++c) {
    nlohmann::json col;
    col["statement"] = render(A.statements[c]);
    col["imset"] = nlohmann::json::parse(imset_to_json(A.columns[c]));
    j["columns"].push_back(col);
  }
  return j.dump();
}

std::optional<CIStatement> recognize_semi_elementary(const Imset& u) {
  // Pattern: +1 at IJK and K, -1 at IK and JK, zero elsewhere.
  std::vector<SetMask> plus, minus;
  for (SetMask s = 0; s < (1u << u.n); ++s) {
    if (u[s] == 1) plus.push_back(s);
    else if (u[s] == -1) minus.push_back(s);
    else if (u[s] != 0) return std::nullopt;
    if (plus.size() > 2 || minus.size() > 2) return std::nullopt;
  }
  if (plus.size() != 2 || minus.size() != 2) return std::nullopt;
  SetMask top, bottom;
  if ((plus[0] & plus[1]) == plus[0]) { bottom = plus[0]; top = plus[1]; }
  else if ((plus[0] & plus[1]) == plus[1]) { bottom = plus[1]; top = plus[0]; }
  else return std::nullopt;
  SetMask m1 = minus[0], m2 = minus[1];
  if ((m1 & m2) != bottom || (m1 | m2) != top) return std::nullopt;
  SetMask I = static_cast<SetMask>(m1 & ~bottom);
  SetMask J = static_cast<SetMask>(m2 & ~bottom);
  if (I == 0 || J == 0) return std::nullopt;
  return CIStatement(I, J, bottom);
}

Imset sum_imsets(const RelationSide& side, int n) {
  Imset total(n);
  for (const auto& t : side.terms) total += semi_elementary_imset(t, n);
  return total;
}

VerificationReport verify_relation(const CIRelation& r) {
  VerificationReport rep;
  for (const auto& side : r.sides) rep.side_images.push_back(sum_imsets(side, r.n));
  rep.sides_equal = true;
  for (std::size_t i = 1; i < rep.side_images.size(); ++i)
    if (!(rep.side_images[i] == rep.side_images[0])) rep.sides_equal = false;
  if (rep.sides_equal) rep.recognized = recognize_semi_elementary(rep.side_images[0]);
  if (r.target)
    rep.target_matches =
        rep.sides_equal &&
        rep.side_images[0] == semi_elementary_imset(*r.target, r.n);
  rep.valid = rep.sides_equal && (!r.target || *rep.target_matches);
  return rep;
}

namespace {

void decompose_search(const Imset& remaining, int terms_left,
                      const std::vector<CIStatement>& elems,
                      const std::vector<Imset>& elem_imsets,
                      std::vector<CIStatement>& chosen,
                      std::set<std::vector<CIStatement>>& results) {
  if (remaining.is_zero()) {
    if (chosen.size() >= 2) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      results.insert(std::move(sorted));
    }
    return;
  }
  if (terms_left == 0) return;
  // Any nonzero partial remainder has a negative coordinate (coordinates of
  // every elementary imset sum to zero).  Branch on the most negative one:
  // some chosen term must contribute -1 there.
  SetMask pivot = 0;
  long long best = 0;
  for (SetMask s = 0; s < (1u << remaining.n); ++s)
    if (remaining[s] < best) { best = remaining[s]; pivot = s; }
  if (best == 0) return;  // nonzero but nonnegative: impossible, dead end
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elem_imsets[i][pivot] != -1) continue;
    Imset next = remaining;
    next -= elem_imsets[i];
    chosen.push_back(elems[i]);
    decompose_search(next, terms_left - 1, elems, elem_imsets, chosen, results);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Decomposition> decompose(const CIStatement& target, int n,
                                     int max_terms) {
  if (target.elementary())
    throw std::invalid_argument("decompose expects a non-elementary target");
  if (max_terms < 2) throw std::invalid_argument("max_terms must be >= 2");
  auto elems = enumerate_elementary(n);
  std::vector<Imset> elem_imsets;
  for (const auto& s : elems) elem_imsets.push_back(elementary_imset(s, n));
  Imset goal = semi_elementary_imset(target, n);
  std::set<std::vector<CIStatement>> results;
  std::vector<CIStatement> chosen;
  decompose_search(goal, max_terms, elems, elem_imsets, chosen, results);
  std::vector<Decomposition> out;
  for (const auto& parts : results) out.push_back({target, parts});
  return out;
}

std::optional<CIRelation> extend_quadratic_binomial(const BinomialExpr& b, int n) {
  if (b.plus.size() != 2 || b.minus.size() != 2)
    throw std::invalid_argument("extend_quadratic_binomial expects a quadratic");
  Imset lhs = sum_imsets({b.plus}, n);
  Imset rhs = sum_imsets({b.minus}, n);
  if (!(lhs == rhs)) return std::nullopt;
  auto target = recognize_semi_elementary(lhs);
  if (!target) return std::nullopt;
  CIRelation rel;
  rel.sides.push_back({b.plus});
  rel.sides.push_back({b.minus});
  rel.sides.push_back({{*target}});
  rel.target = *target;
  rel.n = n;
  return rel;
}

}  // namespace imset
