#include "imset/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace imset {

namespace {

using Poly1 = std::vector<mpz_class>;  // dense univariate over Z

void add_shifted(Poly1& a, const Poly1& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Drop generators divisible by another generator; sort for canonical keys.
std::vector<Exp> minimalize(std::vector<Exp> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exp> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < gens.size() && !drop; ++j)
      if (j != i && divides(gens[j], gens[i]) && gens[j] != gens[i])
        drop = true;
    if (!drop) out.push_back(gens[i]);
  }
  return out;
}

struct Hilbert {
  std::size_t nvars;
  std::map<std::vector<Exp>, Poly1> memo;

  Poly1 numerator(std::vector<Exp> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    for (const auto& g : gens) {
      bool constant = true;
      for (int e : g) constant &= (e == 0);
      if (constant) return {0};  // unit ideal
    }
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;

    // If every generator is a pure variable power, the ideal is a complete
    // intersection of monomials: N = prod (1 - t^a_i).
    bool all_pure = true;
    for (const auto& g : gens) {
      int support = 0;
      for (int e : g) support += (e > 0);
      if (support > 1) {
        all_pure = false;
        break;
      }
    }
    Poly1 result;
    if (all_pure) {
      result = {1};
      for (const auto& g : gens) {
        int a = 0;
        for (int e : g) a += e;
        Poly1 next(result.size() + a, 0);
        for (std::size_t i = 0; i < result.size(); ++i) {
          next[i] += result[i];
          next[i + a] -= result[i];
        }
        result = std::move(next);
      }
    } else {
      // Pivot on the most frequent variable: N(I) = N(I + <x>) + t*N(I : x).
      std::vector<int> freq(nvars, 0);
      for (const auto& g : gens) {
        int support = 0;
        for (int e : g) support += (e > 0);
        if (support > 1)
          for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] > 0) ++freq[v];
      }
      std::size_t x =
          std::max_element(freq.begin(), freq.end()) - freq.begin();
      std::vector<Exp> plus = gens;
      Exp xe(nvars, 0);
      xe[x] = 1;
      plus.push_back(xe);
      std::vector<Exp> colon;
      for (const auto& g : gens) {
        Exp h = g;
        if (h[x] > 0) --h[x];
        colon.push_back(std::move(h));
      }
      result = numerator(std::move(plus));
      add_shifted(result, numerator(std::move(colon)), 1);
    }
    while (!result.empty() && result.back() == 0) result.pop_back();
    memo.emplace(std::move(gens), result);
    return result;
  }
};

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Exp> gens,
                                         std::size_t nvars) {
  Hilbert h{nvars, {}};
  return h.numerator(std::move(gens));
}

DimDeg dim_degree(const IdealHandle& I, std::size_t nvars,
                  double budget_secs) {
  for (const auto& g : I.gens())
    if (!is_homogeneous(g))
      throw std::invalid_argument("dim_degree: non-homogeneous generator");
  MonOrder grevlex{};
  const auto& gb = I.basis(grevlex, budget_secs);
  std::vector<Exp> leads;
  for (const auto& g : gb) leads.push_back(g.lead().m);
  Poly1 num = hilbert_numerator(std::move(leads), nvars);
  if (num.empty()) return {-1, 0};  // unit ideal, empty variety
  // Divide out (1 - t)^e; the pole order nvars - e is the Krull dimension
  // and the quotient at t = 1 is the degree.
  std::size_t e = 0;
  for (;;) {
    mpz_class at1 = 0;
    for (const auto& c : num) at1 += c;
    if (at1 != 0) break;
    // num / (1 - t): synthetic division, q_i = sum_{j<=i} num_j.
    Poly1 q(num.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    ++e;
  }
  DimDeg out;
  out.krull_dim = int(nvars - e);
  out.degree = 0;
  for (const auto& c : num) out.degree += c;
  return out;
}

}  // namespace imset
