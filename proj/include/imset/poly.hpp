#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace imset {

// A polynomial ring over Q with named variables.  Variable order in `vars`
// fixes the meaning of exponent vectors; vars[0] is the greatest variable
// under every order below.
struct Ring {
  std::vector<std::string> vars;
  std::size_t size() const { return vars.size(); }
};

using Exp = std::vector<int>;

enum class OrderType { Lex, Grevlex, Elim };

// Monomial order.  Elim compares the leading `elim_block` variables by
// grevlex first (so their block is eliminated), then the rest by grevlex.
struct MonOrder {
  OrderType type = OrderType::Grevlex;
  std::size_t elim_block = 0;

  // <0, 0, >0 as a < b, a == b, a > b.
  int cmp(const Exp& a, const Exp& b) const;
  bool less(const Exp& a, const Exp& b) const { return cmp(a, b) < 0; }

  bool operator==(const MonOrder&) const = default;
  auto operator<=>(const MonOrder&) const = default;
};

struct Term {
  Exp m;
  mpq_class c;
};

// Terms sorted strictly decreasing under the order the polynomial was
// normalized with; no zero coefficients.
struct Polynomial {
  std::vector<Term> t;

  bool zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  bool operator==(const Polynomial& o) const;
};

Polynomial normalize(std::vector<Term> terms, const MonOrder& ord);
Polynomial p_add(const Polynomial& a, const Polynomial& b, const MonOrder& ord);
Polynomial p_sub(const Polynomial& a, const Polynomial& b, const MonOrder& ord);
Polynomial p_mul(const Polynomial& a, const Polynomial& b, const MonOrder& ord);
Polynomial p_mul_term(const Polynomial& a, const Term& t, const MonOrder& ord);
Polynomial p_monic(Polynomial a);
bool is_homogeneous(const Polynomial& a);

// Sparse human-readable text, e.g. "p111*p221 - p121*p211" or "2*x^3 - 1".
std::string render(const Polynomial& p, const Ring& ring);
Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            const MonOrder& ord);

}  // namespace imset
