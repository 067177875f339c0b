#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "imset/cone.hpp"
#include "imset/imset.hpp"
#include "imset/toric.hpp"

using namespace imset;

namespace {

CIStatement S(int a, int b, SetMask K) {
  return CIStatement(SetMask(1 << (a - 1)), SetMask(1 << (b - 1)), K);
}

int popcount(RayMask m) { return __builtin_popcount(m); }

const Face& lookup(const FaceLattice& lat, RayMask m) {
  for (const auto& f : lat.faces)
    if (f.incident_rays == m) return f;
  throw std::runtime_error("face not in lattice");
}

RayMask mask_of(const std::vector<CIStatement>& stmts, const Cone& cone) {
  RayMask m = 0;
  for (const auto& s : stmts) {
    auto it = std::find(cone.stmts.begin(), cone.stmts.end(), s);
    REQUIRE(it != cone.stmts.end());
    m |= RayMask(1) << (it - cone.stmts.begin());
  }
  return m;
}

}  // namespace

TEST_CASE("cone construction and facet basics") {
  for (int n : {2, 3, 4}) {
    Cone cone = build_cone(n);
    CHECK(cone.ambient_dim == (1 << n));
    CHECK(cone.lin_dim == (1 << n) - n - 1);
    CHECK(static_cast<long long>(cone.rays.size()) == sigma(n));
    CHECK(std::set<std::vector<int>>(cone.rays.begin(), cone.rays.end())
              .size() == cone.rays.size());

    auto fs = facets(cone);
    for (const auto& f : fs) {
      long long g = 0;
      for (long long x : f.normal) g = std::gcd(g, x);
      CHECK(g == 1);  // primitive normal
      for (std::size_t i = 0; i < cone.rays.size(); ++i) {
        long long v = 0;
        for (int c = 0; c < cone.ambient_dim; ++c)
          v += f.normal[c] * cone.rays[i][c];
        CHECK(v >= 0);  // inward
        CHECK((v == 0) == bool(f.incident_rays & (RayMask(1) << i)));
      }
    }
  }
}

TEST_CASE("n=2: one ray, the only facet is the apex") {
  Cone cone = build_cone(2);
  REQUIRE(cone.rays.size() == 1);
  CHECK(cone.lin_dim == 1);
  auto fs = facets(cone);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].incident_rays == 0);  // no proper facet above the apex
  auto lat = face_lattice(cone);
  CHECK(f_vector(lat) == std::vector<long long>{1, 1});
}

TEST_CASE("n=3 lattice: 5 facets, f-vector (1, 6, 9, 5, 1)") {
  Cone cone = build_cone(3);
  auto fs = facets(cone);
  CHECK(fs.size() == 5);
  auto lat = face_lattice(cone);
  CHECK(f_vector(lat) == std::vector<long long>{1, 6, 9, 5, 1});
  CHECK(lat.faces.size() == 22);

  // Apex and full cone.
  CHECK(lat.faces.front().incident_rays == 0);
  CHECK(lat.faces.front().dim == 0);
  CHECK(face_to_model(lat.faces.front(), cone).empty());
  CHECK(popcount(lat.faces.back().incident_rays) == 6);
  CHECK(lat.faces.back().dim == 4);
  CHECK(face_to_model(lat.faces.back(), cone).size() == 6);

  // Gradedness: every non-top face is covered, every non-apex face covers.
  std::vector<int> up(lat.faces.size(), 0), down(lat.faces.size(), 0);
  for (const auto& [lo, hi] : lat.hasse) {
    CHECK(lat.faces[hi].dim == lat.faces[lo].dim + 1);
    ++up[lo];
    ++down[hi];
  }
  for (std::size_t i = 0; i < lat.faces.size(); ++i) {
    if (lat.faces[i].dim < cone.lin_dim) CHECK(up[i] > 0);
    if (lat.faces[i].incident_rays != 0) CHECK(down[i] > 0);
  }

  // The semigraphoid quadruple spans a three-dimensional face ...
  std::vector<CIStatement> quad{S(1, 2, 4), S(1, 3, 0), S(1, 3, 2),
                                S(1, 2, 0)};
  CHECK(is_face(quad, cone));
  CHECK(lookup(lat, mask_of(quad, cone)).dim == 3);
  // ... but neither two-statement relation side is a face on its own.
  CHECK_FALSE(is_face({S(1, 2, 4), S(1, 3, 0)}, cone));
  CHECK_FALSE(is_face({S(1, 3, 2), S(1, 2, 0)}, cone));

  // Rays are extreme; the full set is the cone itself.
  for (const auto& s : cone.stmts) CHECK(is_face({s}, cone));
  CHECK(is_face(cone.stmts, cone));

  // Closure under intersection.
  std::set<RayMask> masks;
  for (const auto& f : lat.faces) masks.insert(f.incident_rays);
  for (const auto& a : lat.faces)
    for (const auto& b : lat.faces)
      CHECK(masks.count(a.incident_rays & b.incident_rays));

  // Exports.
  auto dot = lattice_to_dot(lat, cone);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') ==
        static_cast<long>(lat.hasse.size()));
  auto js = lattice_to_json(lat);
  CHECK(js.find("\"dim\":4") != std::string::npos);
}

TEST_CASE("n=4 lattice: 37 facets, 22108 faces, published per-dim counts") {
  Cone cone = build_cone(4);
  auto fs = facets(cone);
  CHECK(fs.size() == 37);
  auto lat = face_lattice(cone);
  CHECK(f_vector(lat) ==
        std::vector<long long>{1, 24, 228, 1128, 3212, 5560, 5980, 3985,
                               1596, 356, 37, 1});
  long long total = 0;
  for (long long k : f_vector(lat)) total += k;
  CHECK(total == 22108);

  // Every quadratic-binomial statement quadruple is a face of dimension 3.
  auto A = build_matrix(4);
  auto markov = markov_basis(A);
  int quads = 0;
  for (const auto& b : markov) {
    if (b.total_degree() != 2) continue;
    std::vector<CIStatement> stmts;
    for (std::size_t i = 0; i < b.vec.size(); ++i)
      if (b.vec[i] != 0) stmts.push_back(cone.stmts[i]);
    REQUIRE(stmts.size() == 4);
    CHECK(is_face(stmts, cone));
    CHECK(lookup(lat, mask_of(stmts, cone)).dim == 3);
    // Neither side alone spans a face.
    std::vector<CIStatement> plus, minus;
    for (std::size_t i = 0; i < b.vec.size(); ++i) {
      if (b.vec[i] > 0) plus.push_back(cone.stmts[i]);
      if (b.vec[i] < 0) minus.push_back(cone.stmts[i]);
    }
    CHECK_FALSE(is_face(plus, cone));
    CHECK_FALSE(is_face(minus, cone));
    ++quads;
  }
  CHECK(quads == 24);

  // Rays are extreme.
  for (const auto& s : cone.stmts) CHECK(is_face({s}, cone));
  CHECK(is_face(cone.stmts, cone));
}
