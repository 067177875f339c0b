#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imset/statement.hpp"

namespace imset {

// Bitset over ray indices; the cone machinery is limited to sigma(n) <= 32,
// i.e. n <= 4 (larger lattices are out of scope).
using RayMask = std::uint32_t;

// The polyhedral cone nonnegatively spanned by the elementary imsets of [n].
struct Cone {
  int n = 0;
  std::vector<CIStatement> stmts;          // stmts[i] labels rays[i]
  std::vector<std::vector<int>> rays;      // sigma(n) vectors in Z^(2^n)
  int ambient_dim = 0;                     // 2^n
  int lin_dim = 0;                         // rank of the ray span, 2^n - n - 1
};

Cone build_cone(int n);

// A facet of the cone inside its linear span.  The normal is a primitive
// integer vector in the ambient Z^(2^n), inward: <normal, ray> >= 0 for all
// rays, with equality exactly on incident_rays.
struct Facet {
  std::vector<long long> normal;
  RayMask incident_rays = 0;
};

std::vector<Facet> facets(const Cone& cone);

struct Face {
  RayMask incident_rays = 0;
  int dim = 0;
};

// Faces grouped by dimension plus the Hasse cover relation (indices into
// `faces`; edges point from the smaller face to the covering one).
struct FaceLattice {
  std::vector<Face> faces;                       // sorted by (dim, mask)
  std::vector<std::vector<int>> by_dim;          // by_dim[d] = face indices
  std::vector<std::pair<int, int>> hasse;
};

FaceLattice face_lattice(const Cone& cone);

// f-vector over dims 0..lin_dim, apex and full cone included.
std::vector<long long> f_vector(const FaceLattice& lattice);

// The elementary statements of the rays incident to the face.
std::vector<CIStatement> face_to_model(const Face& f, const Cone& cone);

// True iff `stmts` is exactly the ray set of some face of the cone.
bool is_face(const std::vector<CIStatement>& stmts, const Cone& cone);

std::string lattice_to_dot(const FaceLattice& lattice, const Cone& cone);
std::string lattice_to_json(const FaceLattice& lattice);

}  // namespace imset
