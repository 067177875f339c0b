#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace imset {

// Subsets of [n] are bitmasks: bit (i-1) set iff variable i is a member.
// n <= 9 throughout, so a 16-bit mask suffices.
using SetMask = std::uint16_t;

SetMask full_mask(int n);
std::vector<int> mask_to_list(SetMask m);
SetMask list_to_mask(const std::vector<int>& members);
std::string mask_to_string(SetMask m);  // "e" for the empty set, else digits

/// Number of elementary CI statements on n variables: C(n,2) * 2^(n-2).
long long sigma(int n);

// A CI statement I _||_ J | K with I, J, K pairwise disjoint, I and J
// nonempty.  Stored in canonical form: min(I) < min(J).
class CIStatement {
 public:
  CIStatement() = default;
  CIStatement(SetMask lhs, SetMask rhs, SetMask cond);

  SetMask lhs() const { return lhs_; }   // I
  SetMask rhs() const { return rhs_; }   // J
  SetMask cond() const { return cond_; }  // K

  bool elementary() const;
  int max_index() const;  // largest variable index mentioned

  bool operator==(const CIStatement&) const = default;
  // Canonical order: (min I, min J, K mask, I mask, J mask).
  std::strong_ordering operator<=>(const CIStatement& o) const;

 private:
  SetMask lhs_ = 1, rhs_ = 2, cond_ = 0;
};

enum class StructuralType { TypeI, TypeII, TypeIII, TypeIV };
std::string to_string(StructuralType t);

struct StructuralStatement {
  CIStatement stmt;
  std::optional<StructuralType> type;  // set for n = 4 only
};

// A bijection on [n]; images[i-1] = g(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  SetMask apply(SetMask m) const;
  Permutation inverse() const;
  Permutation after(const Permutation& first) const;  // this ∘ first

 private:
  std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int n);

std::vector<CIStatement> enumerate_elementary(int n);
std::vector<StructuralStatement> enumerate_structural(int n);  // n in {3,4}

CIStatement apply_permutation(const CIStatement& s, const Permutation& g);

// Partitions `items` into S_n-orbit classes under `act`.  Items land in the
// same class iff some group element maps one to the other.  Classes are
// sorted by their minimal member; members stay deduplicated and sorted.
template <typename T, typename Act>
std::vector<std::vector<T>> orbit_partition(std::vector<T> items, Act act,
                                            int n) {
  const auto group = all_permutations(n);
  if (!items.empty()) {
    // Sample sanity check of the action: identity fixes, composition agrees.
    const T& probe = items.front();
    if (act(probe, Permutation::identity(n)) != probe)
      throw std::logic_error("orbit_partition: identity does not act trivially");
    if (group.size() > 2) {
      const Permutation& g = group[1];
      const Permutation& h = group[2];
      if (act(probe, g.after(h)) != act(act(probe, h), g))
        throw std::logic_error("orbit_partition: action is not compatible");
    }
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  std::vector<std::vector<T>> classes;
  std::vector<bool> used(items.size(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (used[i]) continue;
    std::vector<T> orbit;
    for (const auto& g : group) {
      T image = act(items[i], g);
      auto it = std::lower_bound(items.begin(), items.end(), image);
      if (it != items.end() && *it == image) {
        auto idx = static_cast<std::size_t>(it - items.begin());
        if (!used[idx]) {
          used[idx] = true;
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace imset
