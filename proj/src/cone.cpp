#include "imset/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "imset/imset.hpp"
#include "imset/intmat.hpp"
#include "imset/relation.hpp"

namespace imset {

namespace {

using Vec = std::vector<mpz_class>;

mpz_class dot(const Vec& a, const Vec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(Vec& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Basis of the ray span: the nonzero rows of the row HNF of the ray matrix,
// together with their pivot columns.
struct SpanBasis {
  IntMat b;                 // lin_dim x 2^n
  std::vector<int> pivots;  // pivot column per basis row
};

SpanBasis span_basis(const Cone& cone) {
  IntMat m(cone.rays.size(), cone.ambient_dim);
  for (std::size_t r = 0; r < cone.rays.size(); ++r)
    for (int c = 0; c < cone.ambient_dim; ++c)
      m.at(r, c) = cone.rays[r][c];
  auto hnf = row_hnf(m);
  SpanBasis out;
  out.b = IntMat(hnf.rank, cone.ambient_dim);
  for (int r = 0; r < hnf.rank; ++r) {
    int p = -1;
    for (int c = 0; c < cone.ambient_dim; ++c) {
      out.b.at(r, c) = hnf.h.at(r, c);
      if (p < 0 && hnf.h.at(r, c) != 0) p = c;
    }
    out.pivots.push_back(p);
  }
  return out;
}

// Coordinates of an ambient lattice vector with respect to the HNF basis,
// by back-substitution on the pivot columns.
Vec project(const SpanBasis& sb, const std::vector<int>& v) {
  Vec rem(v.begin(), v.end());
  Vec coords(sb.b.rows);
  for (std::size_t r = 0; r < sb.b.rows; ++r) {
    mpz_class q, re;
    mpz_tdiv_qr(q.get_mpz_t(), re.get_mpz_t(),
                rem[sb.pivots[r]].get_mpz_t(),
                sb.b.at(r, sb.pivots[r]).get_mpz_t());
    if (re != 0) throw std::logic_error("project: vector outside lattice");
    coords[r] = q;
    for (std::size_t c = 0; c < sb.b.cols; ++c) rem[c] -= q * sb.b.at(r, c);
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("project: vector outside span");
  return coords;
}

// Double description: extreme rays of { f : f . p >= 0 for all p }, starting
// from the whole space.  Tight sets over processed constraints drive the
// combinatorial adjacency test.
struct DualRay {
  Vec v;
  std::uint64_t tight = 0;
};

std::vector<DualRay> dual_extreme_rays(const std::vector<Vec>& constraints,
                                       std::size_t dim) {
  if (constraints.size() > 64)
    throw std::invalid_argument("dual_extreme_rays: too many constraints");
  std::vector<Vec> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DualRay> rays;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const Vec& a = constraints[k];
    std::size_t hit = lineality.size();
    for (std::size_t j = 0; j < lineality.size(); ++j)
      if (dot(lineality[j], a) != 0) {
        hit = j;
        break;
      }
    if (hit < lineality.size()) {
      // Peel one lineality generator off into a ray; normalize the rest and
      // the existing rays into the hyperplane a = 0.
      Vec l0 = std::move(lineality[hit]);
      lineality.erase(lineality.begin() + hit);
      mpz_class d0 = dot(l0, a);
      if (d0 < 0)
        for (auto& x : l0) x = -x;
      d0 = abs(d0);
      for (auto& l : lineality) {
        mpz_class dl = dot(l, a);
        if (dl == 0) continue;
        for (std::size_t c = 0; c < dim; ++c) l[c] = d0 * l[c] - dl * l0[c];
        make_primitive(l);
      }
      for (auto& r : rays) {
        mpz_class dr = dot(r.v, a);
        if (dr != 0) {
          for (std::size_t c = 0; c < dim; ++c)
            r.v[c] = d0 * r.v[c] - dr * l0[c];
          make_primitive(r.v);
        }
        r.tight |= std::uint64_t(1) << k;
      }
      DualRay nr;
      nr.v = std::move(l0);
      nr.tight = (std::uint64_t(1) << k) - 1;  // tight on all previous
      rays.push_back(std::move(nr));
      continue;
    }
    std::vector<int> pos, neg, zero;
    std::vector<mpz_class> val(rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
      val[j] = dot(rays[j].v, a);
      if (val[j] > 0)
        pos.push_back(int(j));
      else if (val[j] < 0)
        neg.push_back(int(j));
      else
        zero.push_back(int(j));
    }
    if (neg.empty()) {
      for (int j : zero) rays[j].tight |= std::uint64_t(1) << k;
      continue;
    }
    std::vector<DualRay> next;
    for (int j : pos) next.push_back(rays[j]);
    for (int j : zero) {
      next.push_back(rays[j]);
      next.back().tight |= std::uint64_t(1) << k;
    }
    for (int p : pos)
      for (int q : neg) {
        std::uint64_t common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t j = 0; j < rays.size() && adjacent; ++j)
          if (int(j) != p && int(j) != q &&
              (common & ~rays[j].tight) == 0)
            adjacent = false;
        if (!adjacent) continue;
        DualRay w;
        w.v.resize(dim);
        for (std::size_t c = 0; c < dim; ++c)
          w.v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
        make_primitive(w.v);
        w.tight = common | (std::uint64_t(1) << k);
        next.push_back(std::move(w));
      }
    rays = std::move(next);
  }
  if (!lineality.empty())
    throw std::logic_error("dual_extreme_rays: dual cone not pointed");
  return rays;
}

int mask_dim(const Cone& cone, const SpanBasis& sb, RayMask mask) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < cone.rays.size(); ++i)
    if (mask & (RayMask(1) << i)) idx.push_back(int(i));
  if (idx.empty()) return 0;
  IntMat m(idx.size(), sb.b.rows);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    Vec coords = project(sb, cone.rays[idx[r]]);
    for (std::size_t c = 0; c < coords.size(); ++c)
      m.at(r, c) = coords[c];
  }
  return rank(m);
}

}  // namespace

Cone build_cone(int n) {
  if (sigma(n) > 32)
    throw std::invalid_argument("build_cone: supported for n <= 4 only");
  auto A = build_matrix(n);
  Cone cone;
  cone.n = n;
  cone.stmts = A.statements;
  cone.ambient_dim = 1 << n;
  for (const auto& col : A.columns)
    cone.rays.emplace_back(col.coeffs.begin(), col.coeffs.end());
  IntMat m(cone.rays.size(), cone.ambient_dim);
  for (std::size_t r = 0; r < cone.rays.size(); ++r)
    for (int c = 0; c < cone.ambient_dim; ++c)
      m.at(r, c) = cone.rays[r][c];
  cone.lin_dim = rank(m);
  return cone;
}

std::vector<Facet> facets(const Cone& cone) {
  if (cone.rays.empty()) throw std::invalid_argument("facets: no rays");
  // Pointedness certificate: the functional S -> |S|^2 evaluates to 2 on
  // every elementary imset, so no nonzero nonnegative combination vanishes.
  for (const auto& r : cone.rays) {
    long long w = 0;
    for (std::size_t s = 0; s < r.size(); ++s)
      w += r[s] * (long long)(__builtin_popcountll(s) *
                              __builtin_popcountll(s));
    if (w <= 0) throw std::invalid_argument("facets: cone is not pointed");
  }
  auto sb = span_basis(cone);
  std::vector<Vec> proj;
  for (const auto& r : cone.rays) proj.push_back(project(sb, r));
  auto dual = dual_extreme_rays(proj, sb.b.rows);

  std::vector<Facet> out;
  for (const auto& f : dual) {
    Facet fa;
    for (std::size_t i = 0; i < proj.size(); ++i)
      if (dot(f.v, proj[i]) == 0) fa.incident_rays |= RayMask(1) << i;
    // Lift the span-coordinate normal to the ambient space: solve B N = f.
    std::vector<mpq_class> rhs(f.v.begin(), f.v.end());
    auto sol = solve_rational(sb.b, rhs);
    if (!sol) throw std::logic_error("facets: lift failed");
    mpz_class lcm = 1;
    for (const auto& q : *sol)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              q.get_den().get_mpz_t());
    Vec lifted(sol->size());
    for (std::size_t c = 0; c < sol->size(); ++c) {
      mpq_class scaled = (*sol)[c] * lcm;
      lifted[c] = scaled.get_num();
    }
    make_primitive(lifted);
    for (const auto& x : lifted) fa.normal.push_back(x.get_si());
    for (std::size_t i = 0; i < cone.rays.size(); ++i) {
      long long s = 0;
      for (int c = 0; c < cone.ambient_dim; ++c)
        s += fa.normal[c] * cone.rays[i][c];
      if (s < 0 || (s == 0) != bool(fa.incident_rays & (RayMask(1) << i)))
        throw std::logic_error("facets: lifted normal inconsistent");
    }
    out.push_back(std::move(fa));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.incident_rays, a.normal) <
           std::tie(b.incident_rays, b.normal);
  });
  return out;
}

FaceLattice face_lattice(const Cone& cone) {
  auto fs = facets(cone);
  RayMask all = cone.rays.size() == 32
                    ? ~RayMask(0)
                    : (RayMask(1) << cone.rays.size()) - 1;
  // Every face is an intersection of facet ray-sets (the full cone included);
  // close the full set under intersection by BFS.
  std::set<RayMask> seen{all};
  std::vector<RayMask> queue{all};
  while (!queue.empty()) {
    RayMask m = queue.back();
    queue.pop_back();
    for (const auto& f : fs) {
      RayMask x = m & f.incident_rays;
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  auto sb = span_basis(cone);
  FaceLattice lat;
  for (RayMask m : seen) lat.faces.push_back({m, mask_dim(cone, sb, m)});
  std::sort(lat.faces.begin(), lat.faces.end(),
            [](const Face& a, const Face& b) {
              return std::tie(a.dim, a.incident_rays) <
                     std::tie(b.dim, b.incident_rays);
            });
  lat.by_dim.assign(cone.lin_dim + 1, {});
  for (std::size_t i = 0; i < lat.faces.size(); ++i)
    lat.by_dim[lat.faces[i].dim].push_back(int(i));
  // The lattice is graded by dimension, so covers join consecutive dims.
  for (int d = 0; d + 1 <= cone.lin_dim; ++d)
    for (int lo : lat.by_dim[d])
      for (int hi : lat.by_dim[d + 1])
        if ((lat.faces[lo].incident_rays & ~lat.faces[hi].incident_rays) == 0)
          lat.hasse.emplace_back(lo, hi);
  return lat;
}

std::vector<long long> f_vector(const FaceLattice& lattice) {
  std::vector<long long> f;
  for (const auto& bucket : lattice.by_dim)
    f.push_back(static_cast<long long>(bucket.size()));
  return f;
}

std::vector<CIStatement> face_to_model(const Face& f, const Cone& cone) {
  std::vector<CIStatement> out;
  for (std::size_t i = 0; i < cone.stmts.size(); ++i)
    if (f.incident_rays & (RayMask(1) << i)) out.push_back(cone.stmts[i]);
  return out;
}

bool is_face(const std::vector<CIStatement>& stmts, const Cone& cone) {
  std::map<CIStatement, int> idx;
  for (std::size_t i = 0; i < cone.stmts.size(); ++i) idx[cone.stmts[i]] = int(i);
  RayMask m = 0;
  for (const auto& s : stmts) {
    auto it = idx.find(s);
    if (it == idx.end())
      throw std::invalid_argument("is_face: statement is not elementary");
    m |= RayMask(1) << it->second;
  }
  // The smallest face containing m is the intersection of all facets whose
  // ray set contains m (the full cone if there is none).
  RayMask closure = cone.rays.size() == 32
                        ? ~RayMask(0)
                        : (RayMask(1) << cone.rays.size()) - 1;
  for (const auto& f : facets(cone))
    if ((m & ~f.incident_rays) == 0) closure &= f.incident_rays;
  return closure == m;
}

std::string lattice_to_dot(const FaceLattice& lattice, const Cone& cone) {
  std::ostringstream os;
  os << "digraph faces {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
    os << "  f" << i << " [label=\"d" << lattice.faces[i].dim << ":";
    bool first = true;
    for (std::size_t r = 0; r < cone.stmts.size(); ++r)
      if (lattice.faces[i].incident_rays & (RayMask(1) << r)) {
        if (!first) os << ",";
        os << r;
        first = false;
      }
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.hasse)
    os << "  f" << lo << " -> f" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_json(const FaceLattice& lattice) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : lattice.faces) {
    nlohmann::json jf;
    jf["dim"] = f.dim;
    auto rays = nlohmann::json::array();
    for (int r = 0; r < 32; ++r)
      if (f.incident_rays & (RayMask(1) << r)) rays.push_back(r);
    jf["rays"] = std::move(rays);
    j.push_back(std::move(jf));
  }
  return j.dump();
}

}  // namespace imset
