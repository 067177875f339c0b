#pragma once

#include <string>
#include <vector>

#include "imset/hilbert.hpp"
#include "imset/statement.hpp"

namespace imset {

// States per variable, r[i] >= 2 for variable i+1.
struct StateVector {
  std::vector<int> r;
  int n() const { return static_cast<int>(r.size()); }
};

// R[P_n]: one variable p_{x1..xn} per joint outcome.  Outcomes are ordered
// lexicographically with p_{1..1} greatest; `reversed` flips the order so
// p_{r1..rn} is greatest instead.
struct ProbRing {
  Ring ring;
  StateVector states;
  bool reversed = false;

  // outcome[i] in 1..r[i]; index into ring.vars.
  std::size_t var_index(const std::vector<int>& outcome) const;
};

ProbRing prob_ring(const StateVector& states, bool reversed = false);

// CI ideal of I _||_ J | K: for every K-assignment, the 2x2 minors of the
// conditional-slice flattening of the tensor marginalized over the variables
// outside I, J, K.
IdealHandle ci_ideal(const CIStatement& s, const ProbRing& ring);

IdealHandle sum_ideals(const std::vector<IdealHandle>& ideals);

IdealHandle model_ideal(const std::vector<CIStatement>& model,
                        const ProbRing& ring);

// Image under p_x -> p_{g.x}; requires g-invariant state counts.
IdealHandle permute_ring_ideal(const IdealHandle& I, const Permutation& g,
                               const ProbRing& ring);

struct ContainmentReport {
  std::vector<bool> inner_in_outer;  // per inner generator
  std::vector<bool> outer_in_inner;  // per outer generator
  bool inner_subset = false;
  bool outer_subset = false;
};

ContainmentReport containment_report(const IdealHandle& inner,
                                     const IdealHandle& outer,
                                     double budget_secs = 0);

struct TableCell {
  std::string ideal;     // e.g. "J1"
  std::string states;    // e.g. "(2,2,2)"
  std::string quantity;  // "dim" | "degree" | "# minimal primes" | ...
  std::string computed;  // value or "-"
  std::string published;
  std::string status;    // MATCH | DISCREPANCY | TIMEOUT | N/A
};

// which in {1, 2, 3}; cell_budget_secs bounds each dim/degree computation.
std::vector<TableCell> table_report(int which, double cell_budget_secs = 0);
std::string table_report_text(const std::vector<TableCell>& cells);
std::string table_report_json(const std::vector<TableCell>& cells);

}  // namespace imset
