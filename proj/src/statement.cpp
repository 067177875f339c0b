#include "imset/statement.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace imset {

SetMask full_mask(int n) { return static_cast<SetMask>((1u << n) - 1u); }

std::vector<int> mask_to_list(SetMask m) {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (m & (1u << (i - 1))) out.push_back(i);
  return out;
}

SetMask list_to_mask(const std::vector<int>& members) {
  SetMask m = 0;
  for (int i : members) {
    if (i < 1 || i > 9) throw std::invalid_argument("variable index out of 1..9");
    m = static_cast<SetMask>(m | (1u << (i - 1)));
  }
  return m;
}

std::string mask_to_string(SetMask m) {
  if (m == 0) return "e";
  std::string s;
  for (int i : mask_to_list(m)) s += static_cast<char>('0' + i);
  return s;
}

long long sigma(int n) {
  if (n < 2) throw std::domain_error("sigma requires n >= 2");
  return static_cast<long long>(n) * (n - 1) / 2 * (1ll << (n - 2));
}

static int min_index(SetMask m) { return std::countr_zero(static_cast<unsigned>(m)) + 1; }

CIStatement::CIStatement(SetMask lhs, SetMask rhs, SetMask cond)
    : lhs_(lhs), rhs_(rhs), cond_(cond) {
  if (lhs_ == 0 || rhs_ == 0)
    throw std::invalid_argument("CI statement: I and J must be nonempty");
  if ((lhs_ & rhs_) || (lhs_ & cond_) || (rhs_ & cond_))
    throw std::invalid_argument("CI statement: I, J, K must be pairwise disjoint");
  if (min_index(lhs_) > min_index(rhs_)) std::swap(lhs_, rhs_);
}

bool CIStatement::elementary() const {
  return std::popcount(static_cast<unsigned>(lhs_)) == 1 &&
         std::popcount(static_cast<unsigned>(rhs_)) == 1;
}

int CIStatement::max_index() const {
  unsigned all = static_cast<unsigned>(lhs_ | rhs_ | cond_);
  return std::bit_width(all);
}

std::strong_ordering CIStatement::operator<=>(const CIStatement& o) const {
  auto key = [](const CIStatement& s) {
    return std::tuple(min_index(s.lhs_), min_index(s.rhs_), s.cond_, s.lhs_, s.rhs_);
  };
  return key(*this) <=> key(o);
}

std::string to_string(StructuralType t) {
  switch (t) {
    case StructuralType::TypeI: return "I";
    case StructuralType::TypeII: return "II";
    case StructuralType::TypeIII: return "III";
    case StructuralType::TypeIV: return "IV";
  }
  return "?";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

SetMask Permutation::apply(SetMask m) const {
  SetMask out = 0;
  for (int i : mask_to_list(m)) out = static_cast<SetMask>(out | (1u << ((*this)(i)-1)));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& first) const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= n(); ++i) im[i - 1] = (*this)(first(i));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<CIStatement> enumerate_elementary(int n) {
  if (n < 2) throw std::domain_error("enumerate_elementary requires n >= 2");
  std::vector<CIStatement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SetMask rest = static_cast<SetMask>(full_mask(n) & ~(1u << (i - 1)) & ~(1u << (j - 1)));
      // Every subset of the remaining variables conditions the pair.
      for (SetMask k = 0;; k = static_cast<SetMask>((k - rest) & rest)) {
        out.emplace_back(static_cast<SetMask>(1u << (i - 1)),
                         static_cast<SetMask>(1u << (j - 1)), k);
        if (k == rest) break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StructuralStatement> enumerate_structural(int n) {
  if (n != 3 && n != 4)
    throw std::domain_error("enumerate_structural supports n = 3, 4 only");
  std::vector<StructuralStatement> out;
  if (n == 3) {
    // One symmetry class: ij _||_ k | e.
    for (int k = 1; k <= 3; ++k) {
      SetMask pair = static_cast<SetMask>(full_mask(3) & ~(1u << (k - 1)));
      out.push_back({CIStatement(pair, static_cast<SetMask>(1u << (k - 1)), 0), std::nullopt});
    }
    return out;
  }
  // n = 4, enumerated by shape template.
  // Type I: ij _||_ kl | e — the three 2+2 partitions of {1,2,3,4}.
  for (int j = 2; j <= 4; ++j) {
    SetMask a = static_cast<SetMask>(1u | (1u << (j - 1)));
    out.push_back({CIStatement(a, static_cast<SetMask>(full_mask(4) & ~a), 0),
                   StructuralType::TypeI});
  }
  // Type II: ijk _||_ l | e.
  for (int l = 1; l <= 4; ++l) {
    SetMask s = static_cast<SetMask>(1u << (l - 1));
    out.push_back({CIStatement(static_cast<SetMask>(full_mask(4) & ~s), s, 0),
                   StructuralType::TypeII});
  }
  // Type III: ij _||_ k | e; Type IV: ij _||_ k | l.
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        if (i == k || j == k) continue;
        SetMask pair = static_cast<SetMask>((1u << (i - 1)) | (1u << (j - 1)));
        SetMask single = static_cast<SetMask>(1u << (k - 1));
        SetMask l = static_cast<SetMask>(full_mask(4) & ~pair & ~single);
        out.push_back({CIStatement(pair, single, 0), StructuralType::TypeIII});
        out.push_back({CIStatement(pair, single, l), StructuralType::TypeIV});
      }
  std::sort(out.begin(), out.end(),
            [](const StructuralStatement& a, const StructuralStatement& b) {
              return std::tuple(a.type, a.stmt) < std::tuple(b.type, b.stmt);
            });
  return out;
}

CIStatement apply_permutation(const CIStatement& s, const Permutation& g) {
  return CIStatement(g.apply(s.lhs()), g.apply(s.rhs()), g.apply(s.cond()));
}

}  // namespace imset
