#include "imset/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "imset/toric.hpp"  // BudgetExceeded

namespace imset {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  Clock::time_point start = Clock::now();
  double secs = 0;
  void check(const char* where) const {
    if (secs <= 0) return;
    double e = std::chrono::duration<double>(Clock::now() - start).count();
    if (e > secs) throw BudgetExceeded(std::string(where) + ": time budget exceeded");
  }
};

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp lcm_exp(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int total_deg(const Exp& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonOrder& ord) {
  Polynomial rem;
  Polynomial cur = normalize(std::vector<Term>(f.t), ord);
  while (!cur.zero()) {
    const Term& lt = cur.lead();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.zero() || !divides(g.lead().m, lt.m)) continue;
      Term q;
      q.m.resize(lt.m.size());
      for (std::size_t i = 0; i < lt.m.size(); ++i)
        q.m[i] = lt.m[i] - g.lead().m[i];
      q.c = lt.c / g.lead().c;
      cur = p_sub(cur, p_mul_term(g, q, ord), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.t.push_back(lt);
      cur.t.erase(cur.t.begin());
    }
  }
  return rem;
}

std::vector<Polynomial> groebner(std::vector<Polynomial> gens,
                                 const MonOrder& ord, double budget_secs) {
  Budget budget{Clock::now(), budget_secs};
  std::vector<Polynomial> G;
  for (auto& g : gens) {
    Polynomial h = normalize(std::move(g.t), ord);
    if (!h.zero()) G.push_back(p_monic(std::move(h)));
  }
  if (G.empty()) return {};

  using Pair = std::pair<int, int>;
  // Pending S-pairs keyed by lcm for the normal selection strategy.
  std::set<std::pair<std::pair<int, Exp>, Pair>> pending;
  auto push_pair = [&](int i, int j) {
    Exp l = lcm_exp(G[i].lead().m, G[j].lead().m);
    pending.insert({{total_deg(l), std::move(l)}, {i, j}});
  };
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) push_pair(int(i), int(j));

  std::set<Pair> handled;
  while (!pending.empty()) {
    budget.check("groebner");
    auto it = pending.begin();
    auto [key, pr] = *it;
    pending.erase(it);
    auto [i, j] = pr;
    handled.insert(pr);
    const Exp& li = G[i].lead().m;
    const Exp& lj = G[j].lead().m;
    if (coprime(li, lj)) continue;  // product criterion
    // Chain criterion: some k with lt(k) | lcm(i,j) and both (i,k), (j,k)
    // already handled.
    Exp l = lcm_exp(li, lj);
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (int(k) == i || int(k) == j || !divides(G[k].lead().m, l)) continue;
      Pair a{std::min(i, int(k)), std::max(i, int(k))};
      Pair b{std::min(j, int(k)), std::max(j, int(k))};
      if (handled.count(a) && handled.count(b)) skip = true;
    }
    if (skip) continue;
    Term qi, qj;
    qi.m.resize(l.size());
    qj.m.resize(l.size());
    for (std::size_t v = 0; v < l.size(); ++v) {
      qi.m[v] = l[v] - li[v];
      qj.m[v] = l[v] - lj[v];
    }
    qi.c = 1;
    qj.c = 1;
    Polynomial s = p_sub(p_mul_term(G[i], qi, ord), p_mul_term(G[j], qj, ord), ord);
    Polynomial r = normal_form(s, G, ord);
    if (r.zero()) continue;
    G.push_back(p_monic(std::move(r)));
    for (std::size_t k = 0; k + 1 < G.size(); ++k)
      push_pair(int(k), int(G.size()) - 1);
  }

  // Minimalize: drop members whose lead is divisible by another lead.
  std::vector<Polynomial> mins;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j) continue;
      if (divides(G[j].lead().m, G[i].lead().m) &&
          (G[j].lead().m != G[i].lead().m || j < i))
        drop = true;
    }
    if (!drop) mins.push_back(G[i]);
  }
  // Reduce each member against the others.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < mins.size(); ++j)
      if (j != i) others.push_back(mins[j]);
    Polynomial r = normal_form(mins[i], others, ord);
    if (!r.zero()) out.push_back(p_monic(std::move(r)));
  }
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.cmp(a.lead().m, b.lead().m) < 0;
            });
  return out;
}

const std::vector<Polynomial>& IdealHandle::basis(const MonOrder& ord,
                                                  double budget_secs) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->cache.find(ord);
    if (it != state_->cache.end()) return it->second;
  }
  auto gb = groebner(state_->gens, ord, budget_secs);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->cache.emplace(ord, std::move(gb)).first->second;
}

bool ideal_membership(const Polynomial& f, const IdealHandle& I,
                      const MonOrder& ord) {
  return normal_form(f, I.basis(ord), ord).zero();
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J,
                 const MonOrder& ord) {
  return I.basis(ord) == J.basis(ord);
}

IdealHandle eliminate_prefix(const IdealHandle& I, std::size_t nvars_removed,
                             double budget_secs) {
  if (nvars_removed == 0) return IdealHandle(I.gens());
  MonOrder elim{OrderType::Elim, nvars_removed};
  auto gb = groebner(I.gens(), elim, budget_secs);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.t)
      for (std::size_t v = 0; v < nvars_removed && pure; ++v)
        if (t.m[v] != 0) pure = false;
    if (pure) kept.push_back(g);
  }
  return IdealHandle(std::move(kept));
}

IdealHandle saturate_variable(const IdealHandle& I, std::size_t var,
                              double budget_secs) {
  if (I.gens().empty()) return IdealHandle{};
  std::size_t n = I.gens().front().t.front().m.size();
  // Work in Q[t, x_1..x_n] with the inverse witness t*x_var - 1 and
  // eliminate t.
  std::vector<Polynomial> lifted;
  for (const auto& g : I.gens()) {
    Polynomial h;
    for (const auto& tm : g.t) {
      Exp m(n + 1, 0);
      for (std::size_t v = 0; v < n; ++v) m[v + 1] = tm.m[v];
      h.t.push_back({std::move(m), tm.c});
    }
    lifted.push_back(std::move(h));
  }
  Polynomial witness;
  {
    Exp m(n + 1, 0);
    m[0] = 1;
    m[var + 1] = 1;
    witness.t.push_back({std::move(m), 1});
    witness.t.push_back({Exp(n + 1, 0), -1});
  }
  lifted.push_back(std::move(witness));
  MonOrder elim{OrderType::Elim, 1};
  for (auto& g : lifted) g = normalize(std::move(g.t), elim);
  auto kept = eliminate_prefix(IdealHandle(std::move(lifted)), 1, budget_secs);
  std::vector<Polynomial> out;
  MonOrder grevlex{};
  for (const auto& g : kept.gens()) {
    Polynomial h;
    for (const auto& tm : g.t) {
      Exp m(n, 0);
      for (std::size_t v = 0; v < n; ++v) m[v] = tm.m[v + 1];
      h.t.push_back({std::move(m), tm.c});
    }
    out.push_back(normalize(std::move(h.t), grevlex));
  }
  return IdealHandle(std::move(out));
}

}  // namespace imset
