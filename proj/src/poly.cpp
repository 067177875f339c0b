#include "imset/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace imset {

namespace {

int total_deg(const Exp& a, std::size_t lo, std::size_t hi) {
  int d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += a[i];
  return d;
}

// Grevlex on the variable range [lo, hi).
int grevlex_cmp(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi) {
  int da = total_deg(a, lo, hi), db = total_deg(b, lo, hi);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger last exp = smaller
  return 0;
}

}  // namespace

int MonOrder::cmp(const Exp& a, const Exp& b) const {
  switch (type) {
    case OrderType::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderType::Grevlex:
      return grevlex_cmp(a, b, 0, a.size());
    case OrderType::Elim: {
      int c = grevlex_cmp(a, b, 0, elim_block);
      if (c != 0) return c;
      return grevlex_cmp(a, b, elim_block, a.size());
    }
  }
  return 0;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (t.size() != o.t.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].m != o.t[i].m || t[i].c != o.t[i].c) return false;
  return true;
}

Polynomial normalize(std::vector<Term> terms, const MonOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.t.empty() && out.t.back().m == t.m)
      out.t.back().c += t.c;
    else
      out.t.push_back(std::move(t));
    if (!out.t.empty() && out.t.back().c == 0) out.t.pop_back();
  }
  return out;
}

Polynomial p_add(const Polynomial& a, const Polynomial& b, const MonOrder& ord) {
  Polynomial out;
  std::size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    int c = i == a.t.size()   ? -1
            : j == b.t.size() ? 1
                              : ord.cmp(a.t[i].m, b.t[j].m);
    if (c > 0)
      out.t.push_back(a.t[i++]);
    else if (c < 0)
      out.t.push_back(b.t[j++]);
    else {
      mpq_class s = a.t[i].c + b.t[j].c;
      if (s != 0) out.t.push_back({a.t[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  return out;
}

Polynomial p_sub(const Polynomial& a, const Polynomial& b, const MonOrder& ord) {
  Polynomial nb = b;
  for (auto& t : nb.t) t.c = -t.c;
  return p_add(a, nb, ord);
}

Polynomial p_mul_term(const Polynomial& a, const Term& t, const MonOrder& ord) {
  (void)ord;  // multiplication by a term preserves the term order
  Polynomial out;
  if (t.c == 0) return out;
  out.t.reserve(a.t.size());
  for (const auto& u : a.t) {
    Exp m = u.m;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += t.m[i];
    out.t.push_back({std::move(m), u.c * t.c});
  }
  return out;
}

Polynomial p_mul(const Polynomial& a, const Polynomial& b, const MonOrder& ord) {
  Polynomial out;
  for (const auto& t : b.t) out = p_add(out, p_mul_term(a, t, ord), ord);
  return out;
}

Polynomial p_monic(Polynomial a) {
  if (a.zero()) return a;
  mpq_class lc = a.t.front().c;
  for (auto& t : a.t) t.c /= lc;
  return a;
}

bool is_homogeneous(const Polynomial& a) {
  if (a.zero()) return true;
  int d = total_deg(a.t.front().m, 0, a.t.front().m.size());
  for (const auto& t : a.t)
    if (total_deg(t.m, 0, t.m.size()) != d) return false;
  return true;
}

std::string render(const Polynomial& p, const Ring& ring) {
  if (p.zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.t.size(); ++i) {
    const Term& t = p.t[i];
    mpq_class c = t.c;
    if (i == 0) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool any = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < t.m.size(); ++v) {
      if (t.m[v] == 0) continue;
      if (any) mono << "*";
      mono << ring.vars[v];
      if (t.m[v] > 1) mono << "^" << t.m[v];
      any = true;
    }
    if (!any) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            const MonOrder& ord) {
  std::map<std::string, int> var_of;
  for (std::size_t i = 0; i < ring.vars.size(); ++i)
    var_of[ring.vars[i]] = int(i);
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("parse_polynomial: expected + or - at " +
                                  std::to_string(i));
    }
    first = false;
    Term t{Exp(ring.size(), 0), sign};
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit((unsigned char)text[i])) {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isdigit((unsigned char)text[j]) || text[j] == '/'))
          ++j;
        t.c *= mpq_class(text.substr(i, j - i));
        i = j;
        saw_factor = true;
      } else if (i < text.size() &&
                 (std::isalpha((unsigned char)text[i]) || text[i] == '_')) {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum((unsigned char)text[j]) || text[j] == '_'))
          ++j;
        std::string name = text.substr(i, j - i);
        auto it = var_of.find(name);
        if (it == var_of.end())
          throw std::invalid_argument("parse_polynomial: unknown variable " +
                                      name);
        i = j;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
          if (k == i)
            throw std::invalid_argument("parse_polynomial: bad exponent");
          e = std::stoi(text.substr(i, k - i));
          i = k;
        }
        t.m[it->second] += e;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor)
      throw std::invalid_argument("parse_polynomial: empty term");
    terms.push_back(std::move(t));
    skip_ws();
  }
  if (terms.empty())
    throw std::invalid_argument("parse_polynomial: empty input");
  return normalize(std::move(terms), ord);
}

}  // namespace imset
