#include <doctest.h>

#include <algorithm>
#include <random>

#include "imset/groebner.hpp"
#include "imset/hilbert.hpp"
#include "imset/imset.hpp"
#include "imset/poly.hpp"
#include "imset/toric.hpp"

using namespace imset;

namespace {

const MonOrder kLex{OrderType::Lex, 0};
const MonOrder kGrevlex{};

Polynomial P(const std::string& s, const Ring& r, const MonOrder& ord) {
  return parse_polynomial(s, r, ord);
}

}  // namespace

TEST_CASE("monomial orders") {
  // x > y > z.
  Exp x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, xy{1, 1, 0}, z2{0, 0, 2};
  CHECK(kLex.cmp(x, y) > 0);
  CHECK(kLex.cmp(y, z) > 0);
  CHECK(kLex.cmp(x, z2) > 0);     // lex ignores total degree
  CHECK(kGrevlex.cmp(x, z2) < 0); // grevlex compares degree first
  CHECK(kGrevlex.cmp(xy, z2) > 0);
  CHECK(kGrevlex.cmp(x, x) == 0);
  // Elimination of the first variable: any monomial containing x beats
  // any x-free monomial.
  MonOrder elim{OrderType::Elim, 1};
  CHECK(elim.cmp(x, z2) > 0);
  CHECK(elim.cmp(y, z2) < 0);
}

TEST_CASE("parse/render round trip") {
  Ring r{{"x", "y", "z"}};
  for (const std::string s :
       {"x^2 - y^2", "2*x^3 - 1", "x*y*z + 1/2*y^2 - 3*z",
        "-x + y", "x"}) {
    Polynomial p = P(s, r, kLex);
    CHECK(render(p, r) == s);
    CHECK(P(render(p, r), r, kLex) == p);
  }
  CHECK(p_sub(P("x - y", r, kLex), P("x - y", r, kLex), kLex).zero());
  CHECK(render(p_mul(P("x + y", r, kLex), P("x - y", r, kLex), kLex), r) ==
        "x^2 - y^2");
}

TEST_CASE("normal form") {
  Ring r{{"x", "y"}};
  Polynomial f = P("x^2 - y^2", r, kLex);
  CHECK(normal_form(f, {f}, kLex).zero());
  CHECK(normal_form(f, {P("x - y", r, kLex)}, kLex).zero());
  CHECK(normal_form(P("x", r, kLex), {P("y", r, kLex)}, kLex) ==
        P("x", r, kLex));
}

TEST_CASE("groebner basics") {
  Ring r{{"x", "y"}};
  // <x, x+y> lex -> {x, y}.
  auto gb = groebner({P("x", r, kLex), P("x + y", r, kLex)}, kLex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P("y", r, kLex));
  CHECK(gb[1] == P("x", r, kLex));
  // Principal ideal -> monic generator.
  auto gb2 = groebner({P("2*x^2 - 2*y^2", r, kLex)}, kLex);
  REQUIRE(gb2.size() == 1);
  CHECK(gb2[0] == P("x^2 - y^2", r, kLex));
  // Empty input.
  CHECK(groebner({}, kLex).empty());
}

TEST_CASE("reduced GB is order-of-generators independent and passes Buchberger post-check") {
  Ring r{{"x", "y", "z"}};
  std::vector<Polynomial> gens = {
      P("x^2 + y*z", r, kGrevlex), P("y^2 + x*z", r, kGrevlex),
      P("z^2 + x*y", r, kGrevlex), P("x*y + y*z + x*z", r, kGrevlex)};
  auto gb = groebner(gens, kGrevlex);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(groebner(shuffled, kGrevlex) == gb);
  }
  // Every S-polynomial of the basis reduces to zero.
  auto nv = r.size();
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Exp& a = gb[i].lead().m;
      const Exp& b = gb[j].lead().m;
      Exp la(nv, 0), lb(nv, 0);
      for (std::size_t v = 0; v < nv; ++v) {
        int l = std::max(a[v], b[v]);
        la[v] = l - a[v];
        lb[v] = l - b[v];
      }
      Polynomial s =
          p_sub(p_mul_term(gb[i], {la, gb[j].lead().c}, kGrevlex),
                p_mul_term(gb[j], {lb, gb[i].lead().c}, kGrevlex), kGrevlex);
      CHECK(normal_form(s, gb, kGrevlex).zero());
    }
}

TEST_CASE("membership and equality") {
  Ring r{{"x", "y"}};
  IdealHandle I({P("x^2 - y^2", r, kGrevlex), P("x*y", r, kGrevlex)});
  CHECK(ideal_membership(I.gens()[0], I, kGrevlex));
  CHECK(ideal_membership(P("x^3", r, kGrevlex), I, kGrevlex));
  CHECK_FALSE(ideal_membership(P("x", r, kGrevlex), I, kGrevlex));
  IdealHandle Ix({P("x", r, kGrevlex)});
  CHECK_FALSE(ideal_membership(P("1", r, kGrevlex), Ix, kGrevlex));
  CHECK(ideal_equal(I, I, kGrevlex));
  IdealHandle J({P("x*y", r, kGrevlex), P("y^2 - x^2", r, kGrevlex)});
  CHECK(ideal_equal(I, J, kGrevlex));
  CHECK_FALSE(ideal_equal(I, Ix, kGrevlex));
}

TEST_CASE("elimination") {
  Ring r{{"t", "x", "y"}};
  IdealHandle I({P("t*x - 1", r, kGrevlex), P("x - y", r, kGrevlex)});
  auto E = eliminate_prefix(I, 1);
  REQUIRE(E.gens().size() == 1);
  CHECK(E.gens()[0] == P("x - y", r, kGrevlex));
  // Eliminate nothing -> same ideal.
  auto E0 = eliminate_prefix(I, 0);
  CHECK(ideal_equal(E0, I, kGrevlex));
  // <t> eliminate {t} -> zero ideal.
  CHECK(eliminate_prefix(IdealHandle({P("t", r, kGrevlex)}), 1).gens().empty());
}

TEST_CASE("saturation") {
  Ring r{{"x", "y"}};
  // <x*y> : x^inf = <y>.
  auto S = saturate_variable(IdealHandle({P("x*y", r, kGrevlex)}), 0);
  REQUIRE(S.gens().size() == 1);
  CHECK(S.gens()[0] == P("y", r, kGrevlex));
  // x-regular ideal unchanged.
  IdealHandle I({P("x - y", r, kGrevlex)});
  CHECK(ideal_equal(saturate_variable(I, 0), I, kGrevlex));
}

TEST_CASE("lattice-basis ideal saturated by all variables equals the n=3 Markov ideal") {
  auto A = build_matrix(3);
  auto kern = kernel_basis(A);
  Ring r{{"e1", "e2", "e3", "e4", "e5", "e6"}};
  auto vec_to_binomial = [&](const std::vector<long long>& v) {
    Exp plus(6, 0), minus(6, 0);
    for (int i = 0; i < 6; ++i)
      (v[i] > 0 ? plus[i] : minus[i]) = int(std::abs(v[i]));
    return p_sub(normalize({{plus, 1}}, kGrevlex),
                 normalize({{minus, 1}}, kGrevlex), kGrevlex);
  };
  std::vector<Polynomial> gens;
  for (const auto& v : kern) gens.push_back(vec_to_binomial(v));
  IdealHandle I(std::move(gens));
  for (std::size_t v = 0; v < 6; ++v) I = saturate_variable(I, v);

  std::vector<Polynomial> markov_gens;
  for (const auto& b : markov_basis(A)) {
    Exp plus(6, 0), minus(6, 0);
    for (int i = 0; i < 6; ++i) {
      plus[i] = int(b.plus()[i]);
      minus[i] = int(b.minus()[i]);
    }
    markov_gens.push_back(p_sub(normalize({{plus, 1}}, kGrevlex),
                                normalize({{minus, 1}}, kGrevlex), kGrevlex));
  }
  REQUIRE(markov_gens.size() == 3);
  CHECK(ideal_equal(I, IdealHandle(std::move(markov_gens)), kGrevlex));
}

TEST_CASE("dim and degree") {
  // Zero ideal in 4 variables -> dim 4, degree 1.
  Ring r4{{"a", "b", "c", "d"}};
  CHECK(dim_degree(IdealHandle{}, 4) == DimDeg{4, 1});

  // Segre: 2x2 minors of a generic 2x2 / 3x3 matrix of variables.
  auto segre = [&](int r1, int r2) {
    Ring ring{{}};
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < r2; ++j)
        ring.vars.push_back("m" + std::to_string(i) + std::to_string(j));
    auto var = [&](int i, int j) {
      Exp m(ring.size(), 0);
      m[i * r2 + j] = 1;
      return normalize({{m, 1}}, kGrevlex);
    };
    std::vector<Polynomial> gens;
    for (int i = 0; i < r1; ++i)
      for (int i2 = i + 1; i2 < r1; ++i2)
        for (int j = 0; j < r2; ++j)
          for (int j2 = j + 1; j2 < r2; ++j2)
            gens.push_back(p_sub(p_mul(var(i, j), var(i2, j2), kGrevlex),
                                 p_mul(var(i, j2), var(i2, j), kGrevlex),
                                 kGrevlex));
    return dim_degree(IdealHandle(std::move(gens)), ring.size());
  };
  CHECK(segre(2, 2) == DimDeg{3, 2});
  CHECK(segre(3, 3) == DimDeg{5, 6});

  // Regular sequence of q quadrics in N variables: dim N-q, degree 2^q.
  Ring r3{{"x", "y", "z"}};
  IdealHandle R({P("x^2 - y*z", r3, kGrevlex), P("y^2 - x*z", r3, kGrevlex)});
  CHECK(dim_degree(R, 3) == DimDeg{1, 4});

  // Non-homogeneous input is rejected.
  CHECK_THROWS(dim_degree(IdealHandle({P("x^2 - y", r3, kGrevlex)}), 3));
}

TEST_CASE("membership linearity spot-check") {
  Ring r{{"x", "y", "z"}};
  IdealHandle I({P("x*y - z^2", r, kGrevlex), P("x^2 - y*z", r, kGrevlex)});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 2);
  auto rand_poly = [&] {
    std::vector<Term> t;
    for (int k = 0; k < 3; ++k) {
      Exp m{d(rng), d(rng), d(rng)};
      t.push_back({m, d(rng) - 1});
    }
    return normalize(std::move(t), kGrevlex);
  };
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = rand_poly(), g = rand_poly();
    // f*g1 + g*g2 is always a member.
    Polynomial h = p_add(p_mul(f, I.gens()[0], kGrevlex),
                         p_mul(g, I.gens()[1], kGrevlex), kGrevlex);
    CHECK(ideal_membership(h, I, kGrevlex));
  }
}
