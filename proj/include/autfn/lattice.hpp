#pragma once

// Lattices in Q^3 given by up to four rational generators.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "autfn/rational.hpp"

namespace autfn {

struct Vec3 {
  std::array<Rational, 3> c{0, 0, 0};

  Vec3() = default;
  Vec3(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}

  Rational const& operator[](std::size_t i) const { return c[i]; }
  Rational& operator[](std::size_t i) { return c[i]; }

  friend bool operator==(Vec3 const& a, Vec3 const& b) { return a.c == b.c; }
  friend bool operator<(Vec3 const& a, Vec3 const& b) { return a.c < b.c; }
};

Vec3 operator+(Vec3 const& a, Vec3 const& b);
Vec3 operator-(Vec3 const& a, Vec3 const& b);
Vec3 operator-(Vec3 const& a);
Vec3 operator*(Rational const& s, Vec3 const& a);
Rational dot(Vec3 const& a, Vec3 const& b);
Rational norm_sq(Vec3 const& a);
Vec3 cross(Vec3 const& a, Vec3 const& b);
Rational det3(Vec3 const& a, Vec3 const& b, Vec3 const& c);
bool is_zero(Vec3 const& a);
std::string to_string(Vec3 const& v);
// "x,y,z" with rational or decimal coordinates.
Vec3 parse_vec3(std::string_view text);

using Mat3 = std::array<Vec3, 3>;  // rows
Vec3 apply(Mat3 const& m, Vec3 const& v);
// Rotation matrix of the quaternion a + bi + cj + dk, divided by its norm;
// rational and orthogonal with determinant 1.
Mat3 rotation_from_quaternion(long a, long b, long c, long d);

class Lattice {
 public:
  // Hermite normal form of the generator rows (after clearing a common
  // denominator). Throws PreconditionError on an empty generator list or more
  // than four generators.
  static Lattice from_generators(std::vector<Vec3> generators);

  std::vector<Vec3> const& generators() const noexcept { return generators_; }
  // Basis rows in Hermite normal form; generates the same Z-module as the
  // generators (verified on construction in both directions).
  std::vector<Vec3> const& basis() const noexcept { return basis_; }
  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  // basis()[i] = sum_j coefficients()[i][j] * generators()[j]
  std::vector<std::vector<Integer>> const& coefficients() const noexcept { return coefficients_; }

  // Integer coordinates of v over basis(), or nullopt when v is not in the lattice.
  std::optional<std::vector<Integer>> coordinates(Vec3 const& v) const;
  bool contains(Vec3 const& v) const { return coordinates(v).has_value(); }

  // Gram determinant (squared covolume) of the basis.
  Rational covolume_sq() const;
  // |det basis| for rank 3.
  Rational covolume() const;

 private:
  std::vector<Vec3> generators_;
  std::vector<Vec3> basis_;
  std::vector<std::vector<Integer>> coefficients_;
};

inline Lattice lattice_from(std::vector<Vec3> generators) {
  return Lattice::from_generators(std::move(generators));
}

// LLL-reduced basis (delta = 3/4), exact.
std::vector<Vec3> lll_reduce(std::vector<Vec3> basis);

struct OctoReport {
  Vec3 u1, u2, v1, v2;
  bool equal_norms = false;
  std::optional<Rational> common_norm_sq;  // set when all four norms agree and are nonzero
  bool sums_agree = false;                  // u1 + u2 = v1 + v2
  bool orthogonal_pairs = false;            // u1 . u2 = 0 and v1 . v2 = 0
  bool differences_orthogonal = false;      // (u1 - u2) . (v1 - v2) = 0
  bool pass() const {
    return equal_norms && common_norm_sq && sums_agree && orthogonal_pairs && differences_orthogonal;
  }
};

// Checks the four conditions under which the Z-span of u1, u2, v1, v2 has a
// rhombic dodecahedron as Voronoi cell. "Unit" is relaxed to a common
// nonzero squared norm.
OctoReport octo_check(Vec3 const& u1, Vec3 const& u2, Vec3 const& v1, Vec3 const& v2);

}  // namespace autfn
