#include "imset/prob_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "imset/cone.hpp"
#include "imset/toric.hpp"  // BudgetExceeded

namespace imset {

namespace {

const MonOrder kGrevlex{};

std::vector<int> mask_vars(SetMask m) { return mask_to_list(m); }

// All assignments of values 1..r to the variables in `vars`, in
// lexicographic order.
std::vector<std::vector<int>> assignments(const std::vector<int>& vars,
                                          const StateVector& states) {
  std::vector<std::vector<int>> out{{}};
  for (int v : vars) {
    std::vector<std::vector<int>> next;
    for (const auto& a : out)
      for (int x = 1; x <= states.r[v - 1]; ++x) {
        auto b = a;
        b.push_back(x);
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

// Total comparison of normalized polynomials, for dedup.
bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    if (a.t[i].m != b.t[i].m) return a.t[i].m < b.t[i].m;
    if (a.t[i].c != b.t[i].c) return cmp(a.t[i].c, b.t[i].c) < 0;
  }
  return false;
}

}  // namespace

std::size_t ProbRing::var_index(const std::vector<int>& outcome) const {
  std::size_t idx = 0;
  for (int i = 0; i < states.n(); ++i) {
    if (outcome[i] < 1 || outcome[i] > states.r[i])
      throw std::invalid_argument("var_index: outcome out of range");
    idx = idx * states.r[i] + (outcome[i] - 1);
  }
  return reversed ? ring.size() - 1 - idx : idx;
}

ProbRing prob_ring(const StateVector& states, bool reversed) {
  if (states.n() == 0) throw std::invalid_argument("prob_ring: empty states");
  for (int r : states.r)
    if (r < 2) throw std::invalid_argument("prob_ring: states must be >= 2");
  ProbRing out;
  out.states = states;
  out.reversed = reversed;
  std::vector<int> all(states.n());
  for (int i = 0; i < states.n(); ++i) all[i] = i + 1;
  auto outs = assignments(all, states);
  if (reversed) std::reverse(outs.begin(), outs.end());
  for (const auto& o : outs) {
    std::string name = "p";
    for (int x : o) name += std::to_string(x);
    out.ring.vars.push_back(std::move(name));
  }
  return out;
}

IdealHandle ci_ideal(const CIStatement& s, const ProbRing& ring) {
  const StateVector& st = ring.states;
  SetMask full = full_mask(st.n());
  if ((s.lhs() | s.rhs() | s.cond()) & ~full)
    throw std::invalid_argument("ci_ideal: statement exceeds ring variables");
  auto iv = mask_vars(s.lhs()), jv = mask_vars(s.rhs()),
       kv = mask_vars(s.cond()),
       dv = mask_vars(SetMask(full & ~(s.lhs() | s.rhs() | s.cond())));
  auto ia = assignments(iv, st), ja = assignments(jv, st),
       ka = assignments(kv, st), da = assignments(dv, st);

  auto entry = [&](const std::vector<int>& a, const std::vector<int>& b,
                   const std::vector<int>& c) {
    Polynomial p;
    std::vector<Term> terms;
    for (const auto& d : da) {
      std::vector<int> outcome(st.n());
      for (std::size_t k = 0; k < iv.size(); ++k) outcome[iv[k] - 1] = a[k];
      for (std::size_t k = 0; k < jv.size(); ++k) outcome[jv[k] - 1] = b[k];
      for (std::size_t k = 0; k < kv.size(); ++k) outcome[kv[k] - 1] = c[k];
      for (std::size_t k = 0; k < dv.size(); ++k) outcome[dv[k] - 1] = d[k];
      Exp m(ring.ring.size(), 0);
      m[ring.var_index(outcome)] = 1;
      terms.push_back({std::move(m), 1});
    }
    return normalize(std::move(terms), kGrevlex);
  };

  std::vector<Polynomial> gens;
  for (const auto& c : ka) {
    // Slice matrix M[a][b]; all 2x2 minors.
    std::vector<std::vector<Polynomial>> M(ia.size(),
                                           std::vector<Polynomial>(ja.size()));
    for (std::size_t a = 0; a < ia.size(); ++a)
      for (std::size_t b = 0; b < ja.size(); ++b)
        M[a][b] = entry(ia[a], ja[b], c);
    for (std::size_t a = 0; a < ia.size(); ++a)
      for (std::size_t a2 = a + 1; a2 < ia.size(); ++a2)
        for (std::size_t b = 0; b < ja.size(); ++b)
          for (std::size_t b2 = b + 1; b2 < ja.size(); ++b2) {
            Polynomial minor =
                p_sub(p_mul(M[a][b], M[a2][b2], kGrevlex),
                      p_mul(M[a][b2], M[a2][b], kGrevlex), kGrevlex);
            if (!minor.zero()) gens.push_back(std::move(minor));
          }
  }
  return IdealHandle(std::move(gens));
}

IdealHandle sum_ideals(const std::vector<IdealHandle>& ideals) {
  std::vector<Polynomial> gens;
  std::set<std::vector<Polynomial>::size_type> dummy;
  std::vector<Polynomial> seen;
  for (const auto& I : ideals)
    for (const auto& g : I.gens()) {
      auto pos = std::lower_bound(seen.begin(), seen.end(), g, poly_less);
      if (pos != seen.end() && *pos == g) continue;
      seen.insert(pos, g);
      gens.push_back(g);
    }
  return IdealHandle(std::move(gens));
}

IdealHandle model_ideal(const std::vector<CIStatement>& model,
                        const ProbRing& ring) {
  std::vector<IdealHandle> parts;
  for (const auto& s : model) parts.push_back(ci_ideal(s, ring));
  return sum_ideals(parts);
}

IdealHandle permute_ring_ideal(const IdealHandle& I, const Permutation& g,
                               const ProbRing& ring) {
  const StateVector& st = ring.states;
  for (int i = 1; i <= st.n(); ++i)
    if (st.r[g(i) - 1] != st.r[i - 1])
      throw std::invalid_argument(
          "permute_ring_ideal: states not permutation-invariant");
  // Variable substitution table.
  std::vector<int> all(st.n());
  for (int i = 0; i < st.n(); ++i) all[i] = i + 1;
  auto outs = assignments(all, st);
  std::vector<std::size_t> image(ring.ring.size());
  for (const auto& x : outs) {
    std::vector<int> y(st.n());
    for (int i = 1; i <= st.n(); ++i) y[g(i) - 1] = x[i - 1];
    image[ring.var_index(x)] = ring.var_index(y);
  }
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) {
    std::vector<Term> terms;
    for (const auto& t : f.t) {
      Exp m(t.m.size(), 0);
      for (std::size_t v = 0; v < t.m.size(); ++v) m[image[v]] += t.m[v];
      terms.push_back({std::move(m), t.c});
    }
    gens.push_back(normalize(std::move(terms), kGrevlex));
  }
  return IdealHandle(std::move(gens));
}

ContainmentReport containment_report(const IdealHandle& inner,
                                     const IdealHandle& outer,
                                     double budget_secs) {
  ContainmentReport rep;
  const auto& ob = outer.basis(kGrevlex, budget_secs);
  const auto& ib = inner.basis(kGrevlex, budget_secs);
  rep.inner_subset = true;
  for (const auto& g : inner.gens()) {
    bool in = normal_form(g, ob, kGrevlex).zero();
    rep.inner_in_outer.push_back(in);
    rep.inner_subset &= in;
  }
  rep.outer_subset = true;
  for (const auto& g : outer.gens()) {
    bool in = normal_form(g, ib, kGrevlex).zero();
    rep.outer_in_inner.push_back(in);
    rep.outer_subset &= in;
  }
  return rep;
}

namespace {

CIStatement stmt(SetMask i, SetMask j, SetMask k) {
  return CIStatement(i, j, k);
}

std::string states_str(const StateVector& st) {
  std::string s = "(";
  for (int i = 0; i < st.n(); ++i)
    s += std::to_string(st.r[i]) + (i + 1 < st.n() ? "," : ")");
  return s;
}

struct NamedIdeal {
  std::string name;
  std::vector<CIStatement> stmts;
};

void dim_degree_cells(std::vector<TableCell>& cells, const NamedIdeal& ni,
                      const StateVector& st, int published_dim, int published_deg,
                      double budget) {
  auto ring = prob_ring(st);
  std::string computed_dim = "-", computed_deg = "-";
  std::string dim_status = "TIMEOUT", deg_status = "TIMEOUT";
  try {
    auto dd = dim_degree(model_ideal(ni.stmts, ring), ring.ring.size(), budget);
    computed_dim = std::to_string(dd.krull_dim);
    computed_deg = dd.degree.get_str();
    dim_status = dd.krull_dim == published_dim ? "MATCH" : "DISCREPANCY";
    deg_status = dd.degree == published_deg ? "MATCH" : "DISCREPANCY";
  } catch (const BudgetExceeded&) {
  }
  cells.push_back({ni.name, states_str(st), "dim", computed_dim,
                   std::to_string(published_dim), dim_status});
  cells.push_back({ni.name, states_str(st), "degree", computed_deg,
                   std::to_string(published_deg), deg_status});
}

void na_cell(std::vector<TableCell>& cells, const std::string& name,
             const std::string& states, const std::string& quantity,
             const std::string& published) {
  cells.push_back({name, states, quantity, "n/a (out of scope)", published, "N/A"});
}

std::vector<TableCell> table1(double budget) {
  // J1 = I(1_2|3) + I(1_2|e); J2 = I(1_3|2) + I(1_2|e); J3 = I(1_23|e).
  std::vector<NamedIdeal> ideals = {
      {"J1", {stmt(1, 2, 4), stmt(1, 2, 0)}},
      {"J2", {stmt(1, 4, 2), stmt(1, 2, 0)}},
      {"J3", {stmt(1, 6, 0)}},
  };
  std::vector<StateVector> states = {
      {{2, 2, 2}}, {{3, 2, 2}}, {{2, 3, 2}}, {{2, 2, 3}}};
  int published_dim[4][3] = {{9, 9, 5}, {7, 7, 6}, {7, 8, 7}, {8, 7, 7}};
  int published_deg[4][3] = {{2, 2, 4}, {6, 6, 10}, {6, 2, 6}, {2, 6, 6}};
  int published_primes[4][3] = {{3, 3, 1}, {3, 3, 1}, {3, 7, 1}, {7, 3, 1}};
  std::vector<TableCell> cells;
  for (int s = 0; s < 4; ++s)
    for (int i = 0; i < 3; ++i) {
      dim_degree_cells(cells, ideals[i], states[s], published_dim[s][i],
                       published_deg[s][i], budget);
      na_cell(cells, ideals[i].name, states_str(states[s]),
              "# minimal primes", std::to_string(published_primes[s][i]));
    }
  return cells;
}

std::vector<TableCell> table2(double budget) {
  // P1 is printed as I(1_2|e)+I(2_3|1); the relation it is attached to
  // involves 2_4|1 instead, so both candidate readings are reported
  // against the published row.
  std::vector<NamedIdeal> ideals = {
      {"P1", {stmt(1, 2, 0), stmt(2, 4, 1)}},
      {"P1 (2_4|1 reading)", {stmt(1, 2, 0), stmt(2, 8, 1)}},
      {"P2", {stmt(2, 8, 0), stmt(1, 4, 2)}},
      {"P3", {stmt(9, 2, 0)}},
      {"Q1", {stmt(4, 8, 1), stmt(2, 4, 9)}},
      {"Q2", {stmt(2, 4, 1), stmt(2, 8, 5)}},
      {"Q3", {stmt(10, 4, 1)}},
  };
  std::vector<StateVector> states = {{{2, 2, 2, 2}}, {{2, 3, 2, 2}}};
  int published_dim[2][7] = {{13, 13, 13, 13, 10, 10, 10},
                         {19, 19, 19, 18, 14, 17, 12}};
  int published_deg[2][7] = {{2, 2, 2, 4, 4, 4, 4}, {3, 3, 3, 10, 36, 4, 100}};
  int published_primes[2][7] = {{3, 3, 3, 1, 9, 9, 1}, {9, 9, 9, 1, 9, 49, 1}};
  std::vector<TableCell> cells;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < 7; ++i) {
      dim_degree_cells(cells, ideals[i], states[s], published_dim[s][i],
                       published_deg[s][i], budget);
      na_cell(cells, ideals[i].name, states_str(states[s]),
              "# minimal primes", std::to_string(published_primes[s][i]));
    }
  return cells;
}

bool marginal(const CIStatement& s) { return s.cond() == 0; }

std::vector<TableCell> table3(double budget) {
  // Binary n=3 imsetal models, one representative per symmetry class of
  // each face dimension, taken from the face lattice.
  Cone cone = build_cone(3);
  auto lat = face_lattice(cone);
  auto act = [&](const std::vector<CIStatement>& model, const Permutation& g) {
    std::vector<CIStatement> out;
    for (const auto& s : model) out.push_back(apply_permutation(s, g));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::vector<std::vector<std::vector<CIStatement>>>>
      classes_by_dim(4);
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::vector<CIStatement>> models;
    for (int idx : lat.by_dim[d])
      models.push_back(face_to_model(lat.faces[idx], cone));
    for (auto& m : models) std::sort(m.begin(), m.end());
    classes_by_dim[d] = orbit_partition(models, act, 3);
  }

  auto count_marginal = [](const std::vector<CIStatement>& m) {
    int k = 0;
    for (const auto& s : m)
      if (marginal(s)) ++k;
    return k;
  };
  // Representative per published row, located by class signature
  // (#statements, #marginal statements).
  auto find_class = [&](int d, int size, int marg) {
    for (const auto& cls : classes_by_dim[d]) {
      const auto& rep = cls.front();
      if (int(rep.size()) == size && count_marginal(rep) == marg) return rep;
    }
    throw std::logic_error("table3: expected model class not found");
  };
  struct Row {
    std::string name;
    std::vector<CIStatement> model;
    int dim, deg, primes;
    std::string prime, primes_dim;
  };
  std::vector<Row> rows = {
      {"I_M1^1", find_class(1, 1, 1), 7, 2, 1, "Yes", "7"},
      {"I_M1^6", find_class(1, 1, 0), 6, 4, 1, "No", "6"},
      {"I_M2^1", find_class(2, 2, 2), 6, 4, 2, "No", "6, 6"},
      {"I_M2^4", find_class(2, 2, 1), 5, 8, 2, "No", "5, 5"},
      {"I_M2^9", find_class(2, 2, 0), 5, 4, 3, "No", "4, 4, 5"},
      {"I_M3^1", find_class(3, 3, 3), 5, 8, 4, "No", "5, 5, 5, 5"},
      {"I_M3^2", find_class(3, 4, 2), 5, 4, 1, "Yes", "5"},
      {"I_M3^5", find_class(3, 3, 0), 4, 5, 4, "Yes", "2, 2, 2, 4"},
      {"I_M4", {}, 4, 6, 1, "Yes", "4"},
  };
  rows.back().model = cone.stmts;

  std::vector<TableCell> cells;
  StateVector binary{{2, 2, 2}};
  for (const auto& row : rows) {
    dim_degree_cells(cells, {row.name, row.model}, binary, row.dim, row.deg,
                     budget);
    na_cell(cells, row.name, states_str(binary), "Is Prime", row.prime);
    na_cell(cells, row.name, states_str(binary), "# minimal primes",
            std::to_string(row.primes));
    na_cell(cells, row.name, states_str(binary), "minimal primes dim",
            row.primes_dim);
  }
  return cells;
}

}  // namespace

std::vector<TableCell> table_report(int which, double cell_budget_secs) {
  switch (which) {
    case 1:
      return table1(cell_budget_secs);
    case 2:
      return table2(cell_budget_secs);
    case 3:
      return table3(cell_budget_secs);
    default:
      throw std::invalid_argument("table_report: which must be 1, 2 or 3");
  }
}

std::string table_report_text(const std::vector<TableCell>& cells) {
  std::ostringstream os;
  for (const auto& c : cells)
    os << c.ideal << " " << c.states << " " << c.quantity << ": computed "
       << c.computed << ", published " << c.published << " [" << c.status << "]\n";
  return os.str();
}

std::string table_report_json(const std::vector<TableCell>& cells) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : cells)
    j.push_back({{"ideal", c.ideal},
                 {"states", c.states},
                 {"quantity", c.quantity},
                 {"computed", c.computed},
                 {"published", c.published},
                 {"status", c.status}});
  return j.dump();
}

}  // namespace imset
