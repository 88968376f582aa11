#include "autfn/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "autfn/error.hpp"

namespace autfn {

Vec3 operator+(Vec3 const& a, Vec3 const& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(Vec3 const& a, Vec3 const& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator-(Vec3 const& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 operator*(Rational const& s, Vec3 const& a) { return {s * a[0], s * a[1], s * a[2]}; }

Rational dot(Vec3 const& a, Vec3 const& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Rational norm_sq(Vec3 const& a) { return dot(a, a); }

Vec3 cross(Vec3 const& a, Vec3 const& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(Vec3 const& a, Vec3 const& b, Vec3 const& c) { return dot(a, cross(b, c)); }

bool is_zero(Vec3 const& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

std::string to_string(Vec3 const& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

Vec3 parse_vec3(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      parts.push_back(parse_rational(piece));
    } catch (ParseError const& e) {
      throw ParseError(std::string("bad coordinate in '") + std::string(text) + "'", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw ParseError("expected three comma-separated coordinates in '" + std::string(text) + "'", 0);
  }
  return {parts[0], parts[1], parts[2]};
}

Vec3 apply(Mat3 const& m, Vec3 const& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 rotation_from_quaternion(long a, long b, long c, long d) {
  Rational n = Rational(a * a + b * b + c * c + d * d);
  if (n == 0) {
    throw PreconditionError("zero quaternion");
  }
  Rational A = a, B = b, C = c, D = d;
  Mat3 r{Vec3{A * A + B * B - C * C - D * D, 2 * (B * C - A * D), 2 * (B * D + A * C)},
         Vec3{2 * (B * C + A * D), A * A - B * B + C * C - D * D, 2 * (C * D - A * B)},
         Vec3{2 * (B * D - A * C), 2 * (C * D + A * B), A * A - B * B - C * C + D * D}};
  for (auto& row : r) {
    row = (1 / n) * row;
  }
  return r;
}

namespace {

using IntRow = std::vector<Integer>;

// Row-style Hermite normal form of an m x 3 integer matrix, tracking the
// unimodular transform: transform * input = hnf. Zero rows end up last.
void hermite(std::vector<IntRow>& rows, std::vector<IntRow>& transform) {
  std::size_t m = rows.size();
  transform.assign(m, IntRow(m, 0));
  for (std::size_t i = 0; i < m; ++i) transform[i][i] = 1;

  auto combine = [&](std::size_t i, std::size_t j, Integer const& a, Integer const& b,
                     Integer const& c, Integer const& d) {
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j), ad - bc = +-1
    for (auto* mat : {&rows, &transform}) {
      auto& M = *mat;
      for (std::size_t k = 0; k < M[i].size(); ++k) {
        Integer x = M[i][k];
        Integer y = M[j][k];
        M[i][k] = a * x + b * y;
        M[j][k] = c * x + d * y;
      }
    }
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < 3 && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][col] == 0) continue;
      Integer x = rows[r][col];
      Integer y = rows[i][col];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [s t; -y/g x/g] has determinant (s x + t y)/g = 1.
      combine(r, i, s, t, -y / g, x / g);
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& x : rows[r]) x = -x;
      for (auto& x : transform[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= q * rows[r][k];
      for (std::size_t k = 0; k < m; ++k) transform[i][k] -= q * transform[r][k];
    }
    ++r;
  }
}

}  // namespace

Lattice Lattice::from_generators(std::vector<Vec3> generators) {
  if (generators.empty()) {
    throw PreconditionError("lattice_from needs at least one generator");
  }
  if (generators.size() > 4) {
    throw PreconditionError("lattice_from accepts at most four generators");
  }
  for (auto& g : generators) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (g[k].get_den() == 0) {
        throw PreconditionError("generator coordinate with zero denominator");
      }
      g[k].canonicalize();
    }
  }
  Integer denom = 1;
  for (auto const& g : generators) {
    for (std::size_t k = 0; k < 3; ++k) {
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), g[k].get_den().get_mpz_t());
    }
  }
  std::vector<IntRow> rows;
  for (auto const& g : generators) {
    IntRow row;
    for (std::size_t k = 0; k < 3; ++k) {
      row.push_back(g[k].get_num() * (denom / g[k].get_den()));
    }
    rows.push_back(std::move(row));
  }
  std::vector<IntRow> transform;
  hermite(rows, transform);

  Lattice lat;
  lat.generators_ = std::move(generators);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool zero = rows[i][0] == 0 && rows[i][1] == 0 && rows[i][2] == 0;
    if (zero) continue;
    Vec3 b;
    for (std::size_t k = 0; k < 3; ++k) {
      b[k] = Rational(rows[i][k], denom);
      b[k].canonicalize();
    }
    lat.basis_.push_back(b);
    lat.coefficients_.push_back(transform[i]);
  }

  // basis -> generators: the recorded integer combinations reproduce each row.
  for (std::size_t i = 0; i < lat.basis_.size(); ++i) {
    Vec3 sum;
    for (std::size_t j = 0; j < lat.generators_.size(); ++j) {
      sum = sum + Rational(lat.coefficients_[i][j]) * lat.generators_[j];
    }
    if (!(sum == lat.basis_[i])) {
      throw std::logic_error("lattice basis is not an integer combination of the generators");
    }
  }
  // generators -> basis
  for (auto const& g : lat.generators_) {
    if (!lat.contains(g)) {
      throw std::logic_error("generator not in the Z-span of the computed basis");
    }
  }
  return lat;
}

std::optional<std::vector<Integer>> Lattice::coordinates(Vec3 const& v) const {
  // Basis rows are in echelon form: eliminate pivot by pivot.
  Vec3 rest = v;
  std::vector<Integer> coords;
  for (auto const& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    Rational k = rest[pivot] / b[pivot];
    if (k.get_den() != 1) {
      return std::nullopt;
    }
    coords.push_back(k.get_num());
    rest = rest - k * b;
  }
  if (!is_zero(rest)) {
    return std::nullopt;
  }
  return coords;
}

Rational Lattice::covolume_sq() const {
  QMatrix gram(basis_.size(), QVector(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      gram[i][j] = dot(basis_[i], basis_[j]);
    }
  }
  return determinant(gram);
}

Rational Lattice::covolume() const {
  if (rank() != 3) {
    throw PreconditionError("covolume() needs a rank-3 lattice; use covolume_sq()");
  }
  return abs(det3(basis_[0], basis_[1], basis_[2]));
}

std::vector<Vec3> lll_reduce(std::vector<Vec3> b) {
  std::size_t n = b.size();
  if (n < 2) {
    return b;
  }
  Rational const delta(3, 4);
  std::vector<Vec3> star(n);
  std::vector<Rational> bn(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      star[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / bn[j];
        star[i] = star[i] - mu[i][j] * star[j];
      }
      bn[i] = norm_sq(star[i]);
      if (bn[i] == 0) {
        throw PreconditionError("lll_reduce needs linearly independent vectors");
      }
    }
  };
  auto nearest = [](Rational const& x) {
    Rational shifted = x + Rational(1, 2);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return f;
  };

  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = nearest(mu[k][jj]);
      if (q != 0) {
        b[k] = b[k] - Rational(q) * b[jj];
        gram_schmidt();
      }
    }
    if (bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

OctoReport octo_check(Vec3 const& u1, Vec3 const& u2, Vec3 const& v1, Vec3 const& v2) {
  OctoReport r;
  r.u1 = u1;
  r.u2 = u2;
  r.v1 = v1;
  r.v2 = v2;
  Rational n = norm_sq(u1);
  r.equal_norms = norm_sq(u2) == n && norm_sq(v1) == n && norm_sq(v2) == n;
  if (r.equal_norms && n != 0) {
    r.common_norm_sq = n;
  }
  r.sums_agree = u1 + u2 == v1 + v2;
  r.orthogonal_pairs = dot(u1, u2) == 0 && dot(v1, v2) == 0;
  r.differences_orthogonal = dot(u1 - u2, v1 - v2) == 0;
  return r;
}

}  // namespace autfn
