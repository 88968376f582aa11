#pragma once

// Exact convex polytopes in Q^3 and Voronoi cells of rank-3 lattices.

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "autfn/lattice.hpp"

namespace autfn {

struct Halfspace {
  Vec3 normal;
  Rational offset;  // { x : normal . x <= offset }
};

struct Polytope {
  std::vector<Vec3> vertices;
  // Vertex cycles, counter-clockwise seen from outside.
  std::vector<std::vector<std::size_t>> faces;
  // faces[i] lies on halfspaces[i].
  std::vector<Halfspace> halfspaces;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::array<std::size_t, 3> f_vector() const;
  long euler_characteristic() const;
  Rational volume() const;
};

struct VoronoiDiagnostics {
  int coefficient_bound = 0;            // box [-b, b]^3 over the reduced basis
  std::size_t candidate_count = 0;      // nonzero lattice points in the box
  std::size_t relevant_count = 0;       // facet-defining vectors
  bool vertices_verified = false;       // every vertex no closer to any candidate
  bool volume_matches = false;          // volume == |det basis|
};

// { x : |x| <= |x - a| for all a in L } for a rank-3 lattice. Throws
// PreconditionError for rank < 3.
Polytope voronoi_cell(Lattice const& lattice, VoronoiDiagnostics* diagnostics = nullptr);

struct FaceInfo {
  std::size_t vertex_count = 0;
  bool is_rhombus = false;
  std::optional<Rational> edge_sq;          // when all edges are equal
  std::optional<Rational> diagonal_ratio_sq;  // long^2 / short^2, quadrilaterals only
};

struct Classification {
  std::array<std::size_t, 3> f_vector{0, 0, 0};
  std::vector<FaceInfo> faces;
  bool is_rhombic_dodecahedron = false;
  bool is_cube = false;
};

// Throws PreconditionError on faces with fewer than three vertices or an
// empty polytope.
Classification classify(Polytope const& p);

// OFF with decimal coordinates rounded to `digits` fractional digits.
void write_off(std::ostream& os, Polytope const& p, int digits = 12);
// Exact sidecar: vertices as [[num, den] x3], faces, f-vector, volume.
nlohmann::json to_sidecar_json(Polytope const& p);
Polytope polytope_from_sidecar(nlohmann::json const& j);

nlohmann::json rational_to_json(Rational const& r);
Rational rational_from_json(nlohmann::json const& j);

}  // namespace autfn
