#include "imset/toric.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "imset/intmat.hpp"

namespace imset {

std::vector<int> ToricBinomial::plus() const {
  std::vector<int> p(vec.size(), 0);
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec[i] > 0) p[i] = vec[i];
  return p;
}

std::vector<int> ToricBinomial::minus() const {
  std::vector<int> m(vec.size(), 0);
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec[i] < 0) m[i] = -vec[i];
  return m;
}

int ToricBinomial::degree_plus() const {
  int d = 0;
  for (int x : vec)
    if (x > 0) d += x;
  return d;
}

int ToricBinomial::degree_minus() const {
  int d = 0;
  for (int x : vec)
    if (x < 0) d -= x;
  return d;
}

int ToricBinomial::total_degree() const {
  return std::max(degree_plus(), degree_minus());
}

bool ToricBinomial::is_homogeneous() const {
  return degree_plus() == degree_minus();
}

bool ToricBinomial::is_multilinear() const {
  return std::all_of(vec.begin(), vec.end(),
                     [](int x) { return x >= -1 && x <= 1; });
}

void ToricBinomial::canonicalize() {
  for (int x : vec) {
    if (x > 0) return;
    if (x < 0) {
      for (int& y : vec) y = -y;
      return;
    }
  }
}

std::string render(const ToricBinomial& b, const std::vector<CIStatement>& stmts) {
  auto side = [&](const std::vector<int>& exp) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (std::size_t i = 0; i < exp.size(); ++i)
      for (int k = 0; k < exp[i]; ++k) {
        if (!first) out << " * ";
        out << render(stmts[i]);
        first = false;
      }
    out << "]";
    return out.str();
  };
  return side(b.plus()) + " - " + side(b.minus());
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  Clock::time_point start = Clock::now();
  double limit_secs = 0.0;  // 0 = unlimited
  void check(const char* where) const {
    if (limit_secs <= 0) return;
    double e = std::chrono::duration<double>(Clock::now() - start).count();
    if (e > limit_secs)
      throw BudgetExceeded(std::string(where) + ": time budget exceeded");
  }
};

}  // namespace

std::vector<std::vector<long long>> kernel_basis(const ImsetMatrix& A) {
  std::size_t rows = std::size_t(1) << A.n;
  std::size_t cols = A.columns.size();
  IntMat m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m.at(r, c) = static_cast<long>(A.columns[c].coeffs[r]);
  std::vector<std::vector<long long>> out;
  for (const auto& v : integer_kernel(m)) {
    std::vector<long long> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].fits_slong_p()) throw std::overflow_error("kernel entry overflow");
      w[i] = v[i].get_si();
    }
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graver basis: Pottier completion with conformal reduction.
// ---------------------------------------------------------------------------

namespace {

struct GravElem {
  std::vector<int> v;
  std::uint64_t pos = 0, neg = 0;  // signed support over the first 64 coords
  int norm = 0;
};

GravElem make_elem(std::vector<int> v) {
  GravElem e;
  e.v = std::move(v);
  for (std::size_t i = 0; i < e.v.size(); ++i) {
    if (e.v[i] > 0) {
      if (i < 64) e.pos |= std::uint64_t(1) << i;
      e.norm += e.v[i];
    } else if (e.v[i] < 0) {
      if (i < 64) e.neg |= std::uint64_t(1) << i;
      e.norm -= e.v[i];
    }
  }
  return e;
}

// g conformally divides s: same sign pattern, |g_i| <= |s_i| everywhere.
bool conf_div(const GravElem& g, const GravElem& s) {
  if ((g.pos & ~s.pos) || (g.neg & ~s.neg)) return false;
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    if (g.v[i] > 0 && g.v[i] > s.v[i]) return false;
    if (g.v[i] < 0 && g.v[i] < s.v[i]) return false;
  }
  return true;
}

bool conf_div_neg(const GravElem& g, const GravElem& s) {  // -g divides s
  if ((g.neg & ~s.pos) || (g.pos & ~s.neg)) return false;
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    if (g.v[i] > 0 && -g.v[i] < s.v[i]) return false;
    if (g.v[i] < 0 && -g.v[i] > s.v[i]) return false;
  }
  return true;
}

// Fully conformally reduce s against G (and negatives); empty result = 0.
bool normal_form(GravElem& s, const std::vector<GravElem>& G) {
  bool reduced = true;
  while (reduced && s.norm > 0) {
    reduced = false;
    for (const auto& g : G) {
      if (g.norm > s.norm) continue;
      if (conf_div(g, s)) {
        std::vector<int> w(s.v.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = s.v[i] - g.v[i];
        s = make_elem(std::move(w));
        reduced = true;
        break;
      }
      if (conf_div_neg(g, s)) {
        std::vector<int> w(s.v.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = s.v[i] + g.v[i];
        s = make_elem(std::move(w));
        reduced = true;
        break;
      }
    }
  }
  return s.norm > 0;
}

}  // namespace

std::vector<ToricBinomial> graver_basis(const ImsetMatrix& A, double budget_secs) {
  Budget budget{Clock::now(), budget_secs};
  std::vector<GravElem> G;
  for (auto& b : kernel_basis(A)) {
    ToricBinomial t{std::vector<int>(b.begin(), b.end())};
    t.canonicalize();
    G.push_back(make_elem(t.vec));
  }
  // Pair queue; (i, j) considers G[i] +/- G[j].
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pending.emplace_back(i, j);
  std::size_t head = 0;
  while (head < pending.size()) {
    if ((head & 0x3ff) == 0) budget.check("graver_basis");
    auto [i, j] = pending[head++];
    // Copies: the push_back below may reallocate G.
    const GravElem u = G[i];
    const GravElem v = G[j];
    for (int sign = 0; sign < 2; ++sign) {
      // Skip conformal combinations: they reduce to zero trivially.
      if (sign == 0 && !(u.pos & v.neg) && !(u.neg & v.pos)) {
        bool cross = false;
        for (std::size_t k = 0; k < u.v.size() && !cross; ++k)
          cross = (u.v[k] > 0 && v.v[k] < 0) || (u.v[k] < 0 && v.v[k] > 0);
        if (!cross) continue;
      }
      if (sign == 1 && !(u.pos & v.pos) && !(u.neg & v.neg)) {
        bool cross = false;
        for (std::size_t k = 0; k < u.v.size() && !cross; ++k)
          cross = (u.v[k] > 0 && v.v[k] > 0) || (u.v[k] < 0 && v.v[k] < 0);
        if (!cross) continue;
      }
      std::vector<int> w(u.v.size());
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = u.v[k] + (sign == 0 ? v.v[k] : -v.v[k]);
      GravElem s = make_elem(std::move(w));
      if (s.norm == 0) continue;
      if (!normal_form(s, G)) continue;
      ToricBinomial t{s.v};
      t.canonicalize();
      s = make_elem(t.vec);
      for (std::size_t k = 0; k < G.size(); ++k) pending.emplace_back(k, G.size());
      G.push_back(std::move(s));
    }
  }
  // Keep only primitive elements: nothing else conformally divides them.
  std::vector<ToricBinomial> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < G.size() && minimal; ++j) {
      if (j == i) continue;
      if (conf_div(G[j], G[i]) || conf_div_neg(G[j], G[i])) {
        // Break ties between exact duplicates by index.
        if (G[j].v == G[i].v) minimal = j > i;
        else minimal = false;
      }
    }
    if (minimal) out.push_back(ToricBinomial{G[i].v});
  }
  std::sort(out.begin(), out.end(),
            [](const ToricBinomial& a, const ToricBinomial& b) {
              int da = a.total_degree(), db = b.total_degree();
              return std::tie(da, a.vec) < std::tie(db, b.vec);
            });
  return out;
}

// ---------------------------------------------------------------------------
// Markov basis: degree-ordered fiber connectivity.
// ---------------------------------------------------------------------------

namespace {

using Monomial = std::vector<int>;

// All monomials u >= 0 of total degree `deg` with A u = target, by DFS over
// columns.  last_col[s] is the last column with a nonzero entry at subset s;
// once the walk passes it, a nonzero residue at s is unfixable.
void enumerate_fiber(const ImsetMatrix& A, const std::vector<int>& last_col,
                     std::vector<long long>& target, std::size_t col, int deg,
                     Monomial& current, std::vector<Monomial>& out) {
  for (std::size_t s = 0; s < target.size(); ++s) {
    if (target[s] == 0) continue;
    if (deg == 0 || std::llabs(target[s]) > deg) return;
    if (last_col[s] < static_cast<int>(col)) return;
  }
  if (deg == 0) {
    out.push_back(current);
    return;
  }
  if (col == A.columns.size()) return;
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) {
      current[col] = k;
      for (std::size_t s = 0; s < target.size(); ++s)
        target[s] -= A.columns[col].coeffs[s];
    }
    enumerate_fiber(A, last_col, target, col + 1, deg - k, current, out);
  }
  for (std::size_t s = 0; s < target.size(); ++s)
    target[s] += deg * A.columns[col].coeffs[s];
  current[col] = 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t k) : parent(k) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<ToricBinomial> markov_basis(const ImsetMatrix& A, double budget_secs) {
  Budget budget{Clock::now(), budget_secs};
  auto graver = graver_basis(A, budget_secs);
  std::size_t nsub = std::size_t(1) << A.n;
  std::vector<int> last_col(nsub, -1);
  for (std::size_t c = 0; c < A.columns.size(); ++c)
    for (std::size_t s = 0; s < nsub; ++s)
      if (A.columns[c].coeffs[s] != 0) last_col[s] = static_cast<int>(c);

  // Group Graver elements by A-degree b = A u+; these are the only degrees
  // where new generators can be needed, and the fiber elements of the Graver
  // basis are enough to bridge any disconnected fiber.
  std::map<std::pair<int, std::vector<long long>>, std::vector<ToricBinomial>>
      degrees;
  for (const auto& g : graver) {
    std::vector<long long> b(nsub, 0);
    auto p = g.plus();
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c])
        for (std::size_t s = 0; s < nsub; ++s)
          b[s] += static_cast<long long>(p[c]) * A.columns[c].coeffs[s];
    degrees[{g.degree_plus(), std::move(b)}].push_back(g);
  }

  std::vector<ToricBinomial> moves;
  for (auto& [key, candidates] : degrees) {
    budget.check("markov_basis");
    const auto& [deg, b] = key;
    std::vector<long long> target = b;
    Monomial current(A.columns.size(), 0);
    std::vector<Monomial> fiber;
    enumerate_fiber(A, last_col, target, 0, deg, current, fiber);
    std::sort(fiber.begin(), fiber.end());
    if (fiber.size() < 2) continue;
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = int(i);

    UnionFind uf(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (const auto& m : moves) {
        bool ok = true;
        Monomial w = fiber[i];
        for (std::size_t c = 0; c < w.size() && ok; ++c) {
          w[c] += m.vec[c];
          ok = w[c] >= 0;
        }
        if (!ok) continue;
        auto it = index.find(w);
        if (it != index.end()) uf.unite(int(i), it->second);
      }
    }
    // One new generator per missing bridge, chosen greedily from the
    // Graver elements of this fiber in canonical order.
    for (const auto& cand : candidates) {
      int u = index.at(cand.plus());
      int v = index.at(cand.minus());
      if (uf.find(u) == uf.find(v)) continue;
      uf.unite(u, v);
      moves.push_back(cand);
    }
    for (std::size_t i = 1; i < fiber.size(); ++i)
      if (uf.find(int(i)) != uf.find(0))
        throw std::logic_error("markov_basis: fiber not bridgeable");
  }
  std::sort(moves.begin(), moves.end(),
            [](const ToricBinomial& a, const ToricBinomial& b) {
              int da = a.total_degree(), db = b.total_degree();
              return std::tie(da, a.vec) < std::tie(db, b.vec);
            });
  return moves;
}

// ---------------------------------------------------------------------------
// Binomial Groebner engine (pure-difference binomials, integer exponents).
// ---------------------------------------------------------------------------

namespace {

// Grevlex with a variable priority permutation: priority[0] is the most
// expensive variable index, priority.back() the cheapest.
struct MonOrder {
  std::vector<int> priority;

  // >0 if a > b, <0 if a < b, 0 if equal.
  int cmp(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    for (auto it = priority.rbegin(); it != priority.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    return 0;
  }
};

struct GBino {
  Monomial lead, tail;
  std::uint64_t lead_mask = 0;
  int lead_deg = 0;
};

std::uint64_t mono_mask(const Monomial& m) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < m.size() && i < 64; ++i)
    if (m[i]) x |= std::uint64_t(1) << i;
  return x;
}

int mono_deg(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const GBino& g, const Monomial& m, std::uint64_t mask) {
  if (g.lead_mask & ~mask) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (g.lead[i] > m[i]) return false;
  return true;
}

// Orient (a, b) as a binomial with lead > tail; false if a == b.
bool orient(Monomial a, Monomial b, const MonOrder& ord, GBino& out) {
  int c = ord.cmp(a, b);
  if (c == 0) return false;
  if (c < 0) std::swap(a, b);
  out.lead = std::move(a);
  out.tail = std::move(b);
  out.lead_mask = mono_mask(out.lead);
  out.lead_deg = mono_deg(out.lead);
  return true;
}

// Full normal form of the pure difference x^a - x^b against G.
bool reduce_binomial(Monomial a, Monomial b, const std::vector<GBino>& G,
                     const MonOrder& ord, GBino& out) {
  auto reduce_side = [&](Monomial& m, const Monomial& other) {
    bool changed = true;
    while (changed) {
      if (m == other) return;
      changed = false;
      std::uint64_t mask = mono_mask(m);
      for (const auto& g : G) {
        if (g.lead_deg > mono_deg(m)) continue;
        if (!divides(g, m, mask)) continue;
        for (std::size_t i = 0; i < m.size(); ++i)
          m[i] += g.tail[i] - g.lead[i];
        changed = true;
        break;
      }
    }
  };
  // Each side's irreducibility depends only on itself, so one pass per side
  // suffices; rewriting strictly decreases a monomial in the order.
  reduce_side(a, b);
  reduce_side(b, a);
  return orient(std::move(a), std::move(b), ord, out);
}

std::vector<GBino> buchberger(std::vector<GBino> basis, const MonOrder& ord,
                              const Budget& budget) {
  struct Pair {
    int i, j, lcm_deg;
  };
  auto lcm_deg = [](const GBino& f, const GBino& g) {
    int d = 0;
    for (std::size_t k = 0; k < f.lead.size(); ++k)
      d += std::max(f.lead[k], g.lead[k]);
    return d;
  };
  auto coprime = [](const GBino& f, const GBino& g) {
    if (f.lead_mask & g.lead_mask) {
      for (std::size_t k = 0; k < f.lead.size(); ++k)
        if (f.lead[k] && g.lead[k]) return false;
    }
    return true;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](int jnew) {
    for (int i = 0; i < jnew; ++i) {
      if (coprime(basis[i], basis[jnew])) continue;  // product criterion
      pairs.push_back({i, jnew, lcm_deg(basis[i], basis[jnew])});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  int steps = 0;
  while (!pairs.empty()) {
    if ((++steps & 0xff) == 0) budget.check("buchberger");
    // Normal strategy: smallest lcm degree first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].lcm_deg < pairs[best].lcm_deg) best = k;
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    const GBino& f = basis[p.i];
    const GBino& g = basis[p.j];
    // S-binomial: x^(lcm-lead_f) * tail_f - x^(lcm-lead_g) * tail_g.
    Monomial a(f.lead.size()), b(f.lead.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      int l = std::max(f.lead[k], g.lead[k]);
      a[k] = l - f.lead[k] + f.tail[k];
      b[k] = l - g.lead[k] + g.tail[k];
    }
    GBino r;
    if (!reduce_binomial(std::move(a), std::move(b), basis, ord, r)) continue;
    basis.push_back(std::move(r));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }
  return basis;
}

std::vector<GBino> reduced_basis(std::vector<GBino> gb, const MonOrder& ord,
                                 const Budget& budget) {
  gb = buchberger(std::move(gb), ord, budget);
  // Drop elements whose lead is divisible by another lead.
  std::vector<GBino> keep;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gb.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(gb[j], gb[i].lead, gb[i].lead_mask))
        redundant = gb[j].lead != gb[i].lead || j < i;
    }
    if (!redundant) keep.push_back(gb[i]);
  }
  // Tail-reduce each against the others.
  std::vector<GBino> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<GBino> others;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    GBino r;
    if (reduce_binomial(keep[i].lead, keep[i].tail, others, ord, r))
      out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const GBino& x, const GBino& y) {
    return std::tie(x.lead, x.tail) < std::tie(y.lead, y.tail);
  });
  return out;
}

std::vector<GBino> to_gbinos(const std::vector<ToricBinomial>& gens,
                             int nvars, const MonOrder& ord) {
  std::vector<GBino> out;
  for (const auto& t : gens) {
    if (static_cast<int>(t.vec.size()) != nvars)
      throw std::invalid_argument("binomial has wrong variable count");
    GBino g;
    if (orient(t.plus(), t.minus(), ord, g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<ToricBinomial> toric_ideal_generators(const ImsetMatrix& A,
                                                  double budget_secs) {
  Budget budget{Clock::now(), budget_secs};
  int nvars = static_cast<int>(A.columns.size());
  std::vector<ToricBinomial> gens;
  for (auto& b : kernel_basis(A)) {
    ToricBinomial t{std::vector<int>(b.begin(), b.end())};
    t.canonicalize();
    gens.push_back(std::move(t));
  }
  MonOrder ord;
  ord.priority.resize(nvars);
  std::iota(ord.priority.begin(), ord.priority.end(), 0);
  std::vector<GBino> cur = to_gbinos(gens, nvars, ord);
  for (int v = 0; v < nvars; ++v) {
    // Grevlex with x_v cheapest: a Groebner basis then saturates by x_v
    // after dividing each element by its x_v power.
    MonOrder satord;
    for (int i = 0; i < nvars; ++i)
      if (i != v) satord.priority.push_back(i);
    satord.priority.push_back(v);
    // Reorient for the new order.
    std::vector<GBino> work;
    for (auto& g : cur) {
      GBino h;
      if (orient(g.lead, g.tail, satord, h)) work.push_back(std::move(h));
    }
    work = buchberger(std::move(work), satord, budget);
    std::set<std::pair<Monomial, Monomial>> seen;
    std::vector<GBino> next;
    for (auto& g : work) {
      // Divide out every common variable factor: sound here because the
      // final target is saturated by all variables.
      for (std::size_t c = 0; c < g.lead.size(); ++c) {
        int m = std::min(g.lead[c], g.tail[c]);
        g.lead[c] -= m;
        g.tail[c] -= m;
      }
      GBino h;
      if (!orient(g.lead, g.tail, satord, h)) continue;
      if (seen.insert({h.lead, h.tail}).second) next.push_back(std::move(h));
    }
    cur = std::move(next);
  }
  std::vector<ToricBinomial> out;
  for (const auto& g : cur) {
    ToricBinomial t;
    t.vec.resize(nvars);
    for (int i = 0; i < nvars; ++i) t.vec[i] = g.lead[i] - g.tail[i];
    t.canonicalize();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const ToricBinomial& a, const ToricBinomial& b) {
              int da = a.total_degree(), db = b.total_degree();
              return std::tie(da, a.vec) < std::tie(db, b.vec);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ToricBinomial> binomial_reduced_groebner(
    const std::vector<ToricBinomial>& gens, int nvars, double budget_secs) {
  Budget budget{Clock::now(), budget_secs};
  MonOrder ord;
  ord.priority.resize(nvars);
  std::iota(ord.priority.begin(), ord.priority.end(), 0);
  auto gb = reduced_basis(to_gbinos(gens, nvars, ord), ord, budget);
  std::vector<ToricBinomial> out;
  for (const auto& g : gb) {
    ToricBinomial t;
    t.vec.resize(nvars);
    for (int i = 0; i < nvars; ++i) t.vec[i] = g.lead[i] - g.tail[i];
    out.push_back(std::move(t));
  }
  return out;
}

bool same_binomial_ideal(const std::vector<ToricBinomial>& a,
                         const std::vector<ToricBinomial>& b, int nvars) {
  return binomial_reduced_groebner(a, nvars) ==
         binomial_reduced_groebner(b, nvars);
}

std::vector<BinomialClassification> classify(
    const std::vector<ToricBinomial>& binomials, int n) {
  std::vector<BinomialClassification> out(binomials.size());
  auto stmts = enumerate_elementary(n);
  std::map<CIStatement, int> stmt_index;
  for (std::size_t i = 0; i < stmts.size(); ++i) stmt_index[stmts[i]] = int(i);
  auto act = [&](const ToricBinomial& b, const Permutation& g) {
    ToricBinomial r;
    r.vec.resize(b.vec.size());
    for (std::size_t i = 0; i < b.vec.size(); ++i)
      r.vec[stmt_index.at(apply_permutation(stmts[i], g))] = b.vec[i];
    r.canonicalize();
    return r;
  };
  auto classes = orbit_partition(binomials, act, n);
  std::map<ToricBinomial, int> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c]) class_of[m] = int(c);
  for (std::size_t i = 0; i < binomials.size(); ++i) {
    const auto& b = binomials[i];
    out[i].total_degree = b.total_degree();
    out[i].homogeneous = b.is_homogeneous();
    out[i].multilinear = b.is_multilinear();
    out[i].symmetry_class = class_of.at(b);
  }
  return out;
}

std::vector<CIRelation> quadratics_to_relations(
    const std::vector<ToricBinomial>& binomials, int n) {
  auto stmts = enumerate_elementary(n);
  std::vector<CIRelation> out;
  for (const auto& b : binomials) {
    if (b.total_degree() != 2 || !b.is_homogeneous() || !b.is_multilinear())
      continue;
    BinomialExpr expr;
    for (std::size_t i = 0; i < b.vec.size(); ++i) {
      if (b.vec[i] > 0) expr.plus.push_back(stmts[i]);
      if (b.vec[i] < 0) expr.minus.push_back(stmts[i]);
    }
    auto rel = extend_quadratic_binomial(expr, n);
    if (!rel)
      throw std::runtime_error("quadratic binomial does not extend: " +
                               render(b, stmts));
    out.push_back(std::move(*rel));
  }
  return out;
}

}  // namespace imset
