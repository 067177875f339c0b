#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "imset/poly.hpp"

namespace imset {

// Remainder of f on division by G; no remainder term is divisible by any
// leading term of G.  Divisors are tried in list order (deterministic).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonOrder& ord);

// Reduced Groebner basis: monic, auto-reduced, sorted by leading monomial;
// unique for the order.
std::vector<Polynomial> groebner(std::vector<Polynomial> gens,
                                 const MonOrder& ord,
                                 double budget_secs = 0);

// Generators with a per-order cache of reduced Groebner bases.  Copies
// share the cache.
class IdealHandle {
 public:
  IdealHandle() : state_(std::make_shared<State>()) {}
  explicit IdealHandle(std::vector<Polynomial> gens)
      : state_(std::make_shared<State>()) {
    state_->gens = std::move(gens);
  }

  const std::vector<Polynomial>& gens() const { return state_->gens; }
  const std::vector<Polynomial>& basis(const MonOrder& ord,
                                       double budget_secs = 0) const;

 private:
  struct State {
    std::vector<Polynomial> gens;
    std::mutex mu;
    std::map<MonOrder, std::vector<Polynomial>> cache;
  };
  std::shared_ptr<State> state_;
};

bool ideal_membership(const Polynomial& f, const IdealHandle& I,
                      const MonOrder& ord);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J,
                 const MonOrder& ord);

// I intersected with the subring without the first `nvars_removed` variables
// (the removed variables must be a prefix of the ring).  The returned
// generators still live in the full exponent format.
IdealHandle eliminate_prefix(const IdealHandle& I, std::size_t nvars_removed,
                             double budget_secs = 0);

// (I : v^inf) for the ring variable with index `var`.
IdealHandle saturate_variable(const IdealHandle& I, std::size_t var,
                              double budget_secs = 0);

}  // namespace imset
