#include "autfn/polytope.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "autfn/error.hpp"

namespace autfn {

namespace {

// Sort the vertices of a planar convex polygon counter-clockwise as seen from
// the side `normal` points to. Coordinates are exact: (d0, d1) spans the
// plane with d1 = normal x d0.
void order_face(std::vector<std::size_t>& face, std::vector<Vec3> const& vertices, Vec3 const& normal) {
  Vec3 centroid;
  for (auto i : face) centroid = centroid + vertices[i];
  centroid = Rational(1, static_cast<long>(face.size())) * centroid;
  Vec3 d0 = vertices[face[0]] - centroid;
  Vec3 d1 = cross(normal, d0);

  struct Polar {
    std::size_t index;
    Rational x, y;
  };
  std::vector<Polar> pts;
  for (auto i : face) {
    Vec3 r = vertices[i] - centroid;
    pts.push_back({i, dot(r, d0), dot(r, d1)});
  }
  auto half = [](Polar const& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  std::sort(pts.begin(), pts.end(), [&](Polar const& a, Polar const& b) {
    int ha = half(a);
    int hb = half(b);
    if (ha != hb) return ha < hb;
    return a.x * b.y - a.y * b.x > 0;
  });
  for (std::size_t k = 0; k < pts.size(); ++k) face[k] = pts[k].index;
}

struct Candidate {
  Vec3 point;
  Rational norm;
  int parity;
};

struct Attempt {
  Polytope polytope;
  VoronoiDiagnostics diagnostics;
  bool ok = false;
};

Attempt voronoi_attempt(std::vector<Vec3> const& basis, Rational const& covolume, int bound) {
  Attempt out;
  out.diagnostics.coefficient_bound = bound;

  std::vector<Candidate> candidates;
  for (int i = -bound; i <= bound; ++i) {
    for (int j = -bound; j <= bound; ++j) {
      for (int k = -bound; k <= bound; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        Vec3 a = Rational(i) * basis[0] + Rational(j) * basis[1] + Rational(k) * basis[2];
        int parity = (i & 1) | ((j & 1) << 1) | ((k & 1) << 2);
        candidates.push_back({a, norm_sq(a), parity});
      }
    }
  }
  out.diagnostics.candidate_count = candidates.size();

  // Voronoi-relevant vectors: a is facet-defining iff +-a are the only
  // shortest vectors of the coset a + 2L.
  std::vector<Halfspace> planes;
  for (int cls = 1; cls < 8; ++cls) {
    std::optional<Rational> best;
    for (auto const& c : candidates) {
      if (c.parity == cls && (!best || c.norm < *best)) best = c.norm;
    }
    std::vector<Vec3 const*> minimal;
    for (auto const& c : candidates) {
      if (c.parity == cls && c.norm == *best) minimal.push_back(&c.point);
    }
    if (minimal.size() == 2) {
      for (auto const* p : minimal) planes.push_back({*p, norm_sq(*p) / 2});
    }
  }
  out.diagnostics.relevant_count = planes.size();

  auto inside_all = [&](Vec3 const& x) {
    for (auto const& c : candidates) {
      if (2 * dot(c.point, x) > c.norm) return false;
    }
    return true;
  };

  std::set<Vec3> vertex_set;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      for (std::size_t k = j + 1; k < planes.size(); ++k) {
        auto const& a = planes[i];
        auto const& b = planes[j];
        auto const& c = planes[k];
        Rational d = det3(a.normal, b.normal, c.normal);
        if (d == 0) continue;
        Vec3 x = (1 / d) * (a.offset * cross(b.normal, c.normal) + b.offset * cross(c.normal, a.normal)
                            + c.offset * cross(a.normal, b.normal));
        bool ok = true;
        for (auto const& h : planes) {
          if (dot(h.normal, x) > h.offset) {
            ok = false;
            break;
          }
        }
        if (ok) vertex_set.insert(x);
      }
    }
  }

  Polytope& p = out.polytope;
  p.vertices.assign(vertex_set.begin(), vertex_set.end());
  out.diagnostics.vertices_verified =
      !p.vertices.empty()
      && std::all_of(p.vertices.begin(), p.vertices.end(), [&](Vec3 const& v) { return inside_all(v); });

  bool faces_ok = true;
  for (auto const& h : planes) {
    std::vector<std::size_t> face;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      if (dot(h.normal, p.vertices[v]) == h.offset) face.push_back(v);
    }
    if (face.size() < 3) {
      faces_ok = false;
      continue;
    }
    order_face(face, p.vertices, h.normal);
    p.faces.push_back(std::move(face));
    p.halfspaces.push_back(h);
  }
  out.diagnostics.volume_matches = faces_ok && !p.faces.empty() && p.volume() == covolume;
  out.ok = out.diagnostics.vertices_verified && out.diagnostics.volume_matches
           && p.euler_characteristic() == 2;
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::set<std::pair<std::size_t, std::size_t>> set;
  for (auto const& f : faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::size_t a = f[k];
      std::size_t b = f[(k + 1) % f.size()];
      set.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {set.begin(), set.end()};
}

std::array<std::size_t, 3> Polytope::f_vector() const {
  return {vertices.size(), edges().size(), faces.size()};
}

long Polytope::euler_characteristic() const {
  auto f = f_vector();
  return static_cast<long>(f[0]) - static_cast<long>(f[1]) + static_cast<long>(f[2]);
}

Rational Polytope::volume() const {
  // Signed cone volumes from the origin; faces are oriented outward.
  Rational six_v = 0;
  for (auto const& f : faces) {
    for (std::size_t k = 1; k + 1 < f.size(); ++k) {
      six_v += det3(vertices[f[0]], vertices[f[k]], vertices[f[k + 1]]);
    }
  }
  return six_v / 6;
}

Polytope voronoi_cell(Lattice const& lattice, VoronoiDiagnostics* diagnostics) {
  if (lattice.rank() != 3) {
    throw PreconditionError("voronoi_cell needs a rank-3 lattice (got rank "
                            + std::to_string(lattice.rank()) + ")");
  }
  auto reduced = lll_reduce(lattice.basis());
  Rational covolume = lattice.covolume();
  Attempt last;
  for (int bound = 2; bound <= 4; ++bound) {
    last = voronoi_attempt(reduced, covolume, bound);
    if (last.ok) break;
  }
  if (diagnostics) *diagnostics = last.diagnostics;
  if (!last.ok) {
    throw std::logic_error("Voronoi cell failed its tiling check");
  }
  return std::move(last.polytope);
}

Classification classify(Polytope const& p) {
  if (p.vertices.empty() || p.faces.size() < 4) {
    throw PreconditionError("classify needs a 3-dimensional polytope");
  }
  Classification c;
  c.f_vector = p.f_vector();
  for (auto const& f : p.faces) {
    if (f.size() < 3) {
      throw PreconditionError("degenerate face with fewer than three vertices");
    }
    FaceInfo info;
    info.vertex_count = f.size();
    std::vector<Rational> edge_sq;
    for (std::size_t k = 0; k < f.size(); ++k) {
      edge_sq.push_back(norm_sq(p.vertices[f[k]] - p.vertices[f[(k + 1) % f.size()]]));
    }
    if (std::all_of(edge_sq.begin(), edge_sq.end(), [&](Rational const& e) { return e == edge_sq[0]; })) {
      info.edge_sq = edge_sq[0];
    }
    if (f.size() == 4) {
      info.is_rhombus = info.edge_sq.has_value() && *info.edge_sq != 0;
      Rational d1 = norm_sq(p.vertices[f[0]] - p.vertices[f[2]]);
      Rational d2 = norm_sq(p.vertices[f[1]] - p.vertices[f[3]]);
      if (d1 != 0 && d2 != 0) {
        info.diagonal_ratio_sq = std::max(d1, d2) / std::min(d1, d2);
      }
    }
    c.faces.push_back(info);
  }
  auto all_faces = [&](auto pred) { return std::all_of(c.faces.begin(), c.faces.end(), pred); };
  c.is_rhombic_dodecahedron = c.f_vector == std::array<std::size_t, 3>{14, 24, 12}
                              && all_faces([](FaceInfo const& f) {
                                   return f.is_rhombus && f.diagonal_ratio_sq == Rational(2);
                                 });
  c.is_cube = c.f_vector == std::array<std::size_t, 3>{8, 12, 6}
              && all_faces([&](FaceInfo const& f) {
                   return f.is_rhombus && f.diagonal_ratio_sq == Rational(1)
                          && f.edge_sq == c.faces[0].edge_sq;
                 });
  return c;
}

void write_off(std::ostream& os, Polytope const& p, int digits) {
  auto f = p.f_vector();
  os << "OFF\n" << f[0] << ' ' << f[2] << ' ' << f[1] << '\n';
  for (auto const& v : p.vertices) {
    os << to_decimal(v[0], digits) << ' ' << to_decimal(v[1], digits) << ' ' << to_decimal(v[2], digits)
       << '\n';
  }
  for (auto const& face : p.faces) {
    os << face.size();
    for (auto i : face) os << ' ' << i;
    os << '\n';
  }
}

nlohmann::json rational_to_json(Rational const& r) {
  auto part = [](Integer const& z) -> nlohmann::json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return nlohmann::json::array({part(r.get_num()), part(r.get_den())});
}

Rational rational_from_json(nlohmann::json const& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected [numerator, denominator]", 0);
  }
  auto part = [](nlohmann::json const& x) -> Integer {
    if (x.is_number_integer()) return Integer(x.get<long>());
    if (x.is_string()) return Integer(x.get<std::string>(), 10);
    throw ParseError("rational part must be an integer or a digit string", 0);
  };
  Integer den = part(j[1]);
  if (den == 0) {
    throw ParseError("zero denominator", 0);
  }
  Rational r(part(j[0]), den);
  r.canonicalize();
  return r;
}

nlohmann::json to_sidecar_json(Polytope const& p) {
  nlohmann::json j;
  j["format"] = "exact-rational-polytope";
  j["vertices"] = nlohmann::json::array();
  for (auto const& v : p.vertices) {
    j["vertices"].push_back({rational_to_json(v[0]), rational_to_json(v[1]), rational_to_json(v[2])});
  }
  j["faces"] = p.faces;
  j["normals"] = nlohmann::json::array();
  for (auto const& h : p.halfspaces) {
    j["normals"].push_back({rational_to_json(h.normal[0]), rational_to_json(h.normal[1]),
                            rational_to_json(h.normal[2]), rational_to_json(h.offset)});
  }
  auto f = p.f_vector();
  j["f_vector"] = {f[0], f[1], f[2]};
  j["volume"] = rational_to_json(p.volume());
  return j;
}

Polytope polytope_from_sidecar(nlohmann::json const& j) {
  Polytope p;
  for (auto const& v : j.at("vertices")) {
    p.vertices.push_back({rational_from_json(v.at(0)), rational_from_json(v.at(1)), rational_from_json(v.at(2))});
  }
  p.faces = j.at("faces").get<std::vector<std::vector<std::size_t>>>();
  for (auto const& h : j.at("normals")) {
    p.halfspaces.push_back({{rational_from_json(h.at(0)), rational_from_json(h.at(1)), rational_from_json(h.at(2))},
                            rational_from_json(h.at(3))});
  }
  for (auto const& f : p.faces) {
    for (auto i : f) {
      if (i >= p.vertices.size()) {
        throw ParseError("face references a missing vertex", 0);
      }
    }
  }
  return p;
}

}  // namespace autfn
