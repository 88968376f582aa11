#include <vector>

#include "autfn/error.hpp"
#include "autfn/flat.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace autfn;
using autfn::testing::uniform_int;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

QVector random_qvector(std::size_t n, int range = 4) {
  QVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(q(uniform_int(-range, range), uniform_int(1, 3)));
  return v;
}

// Signed permutation of k coordinates, arbitrary within one block.
AffineIsometry random_isometry(std::size_t k) {
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1))]);
  std::vector<int> signs;
  for (std::size_t i = 0; i < k; ++i) signs.push_back(uniform_int(0, 1) ? 1 : -1);
  return {k, perm, signs, random_qvector(k)};
}

CosetAction random_coset_action(std::size_t d, std::size_t k) {
  CosetAction a;
  for (std::size_t i = 0; i < d; ++i) a.perm.push_back(i);
  for (std::size_t i = d; i > 1; --i) std::swap(a.perm[i - 1], a.perm[static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1))]);
  for (std::size_t i = 0; i < d; ++i) a.cocycle.push_back(random_isometry(k));
  return a;
}

}  // namespace

TEST_CASE("translation actions") {
  TranslationAction a(2, {{1, 0}, {q(1, 2), 3}});
  CHECK(a.translation({2, -2}) == QVector{1, -6});
  CHECK_THROWS_AS(TranslationAction(2, {{1, 0, 0}}), PreconditionError);
  CHECK_THROWS_AS(a.translation({1}), PreconditionError);
}

TEST_CASE("isometry validation") {
  CHECK_THROWS_AS(AffineIsometry(1, {0, 0}, {1, 1}, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(AffineIsometry(1, {0, 1}, {1, 2}, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(AffineIsometry(2, {0, 1, 2}, {1, 1, 1}, {0, 0, 0}), PreconditionError);
  // Mixes blocks {0,1} and {2,3}.
  CHECK_THROWS_AS(AffineIsometry(2, {0, 2, 1, 3}, {1, 1, 1, 1}, {0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("matrix is orthogonal and matches the action") {
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_isometry(static_cast<std::size_t>(uniform_int(1, 4)));
    auto m = g.matrix();
    QMatrix mt(m.size(), QVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) mt[i][j] = m[j][i];
    CHECK(mat_mul(mt, m) == identity_matrix(m.size()));
    auto x = random_qvector(g.dim());
    CHECK(g(x) == mat_vec(m, x) + g.translation());
  }
}

TEST_CASE("composition, inverse and powers") {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = static_cast<std::size_t>(uniform_int(1, 4));
    auto f = random_isometry(k);
    auto g = random_isometry(k);
    auto x = random_qvector(k);
    CHECK(compose(f, g)(x) == f(g(x)));
    CHECK(compose(f, f.inverse()) == AffineIsometry::identity(k, k));
    CHECK(compose(f.inverse(), f) == AffineIsometry::identity(k, k));
    long m = uniform_int(-5, 5);
    AffineIsometry naive = AffineIsometry::identity(k, k);
    for (long i = 0; i < (m < 0 ? -m : m); ++i) naive = compose(naive, m < 0 ? f.inverse() : f);
    CHECK(f.pow(m) == naive);
    // linear order: O^order = I and no smaller positive power is.
    long order = f.linear_order();
    for (long j = 1; j <= order; ++j) {
      auto lin = f.pow(j);
      bool is_id = lin.perm() == AffineIsometry::identity(k, k).perm()
                   && lin.signs() == std::vector<int>(k, 1);
      CHECK(is_id == (j == order));
    }
  }
}

TEST_CASE("translation length examples") {
  auto t = trans_length_sq(AffineIsometry::translation_by({3, 4}));
  CHECK(t.length_sq == 25);

  auto swap = AffineIsometry(1, {1, 0}, {1, 1}, {0, 0});
  auto e = trans_length_sq(swap);
  CHECK(e.length_sq == 0);
  CHECK(swap(e.witness) == e.witness);

  Rational ell = q(5, 2);
  auto cyc = AffineIsometry::block_cycle(3, 1, {0, 0, ell});
  auto c = trans_length_sq(cyc);
  CHECK(c.length_sq == ell * ell / 3);
  CHECK(c.axis_translation == QVector{ell / 3, ell / 3, ell / 3});
}

TEST_CASE("translation length agrees with the periodic power") {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = static_cast<std::size_t>(uniform_int(1, 5));
    auto g = random_isometry(k);
    auto r = trans_length_sq(g);
    long m = g.linear_order();
    auto gm = g.pow(m);
    // g^m is a pure translation, and translation length is homogeneous.
    CHECK(gm.perm() == AffineIsometry::identity(k, k).perm());
    CHECK(dot(gm.translation(), gm.translation()) == Rational(m * m) * r.length_sq);
    CHECK(trans_length_sq(gm).length_sq == Rational(m * m) * r.length_sq);
    // The witness realizes the minimum displacement.
    auto disp = g(r.witness) - r.witness;
    CHECK(dot(disp, disp) == r.length_sq);
    for (int s = 0; s < 5; ++s) {
      auto x = random_qvector(k, 10);
      auto d = g(x) - x;
      CHECK(dot(d, d) >= r.length_sq);
    }
  }
}

TEST_CASE("pure translations scale quadratically") {
  for (int trial = 0; trial < 50; ++trial) {
    auto g = AffineIsometry::translation_by(random_qvector(3));
    long m = uniform_int(-6, 6);
    CHECK(trans_length_sq(g.pow(m)).length_sq == Rational(m * m) * trans_length_sq(g).length_sq);
  }
}

TEST_CASE("induction from index 3 in Z") {
  Rational ell = 7;
  auto base = AffineIsometry::translation_by({ell});
  auto g = induce(induce_cyclic(3, base));
  CHECK(trans_length_sq(g).length_sq == ell * ell / 3);
  auto cube = g.pow(3);
  CHECK(cube == AffineIsometry(1, {0, 1, 2}, {1, 1, 1}, {ell, ell, ell}));
  CHECK(trans_length_sq(cube).length_sq == 3 * ell * ell);
}

TEST_CASE("index one is the base action") {
  for (int trial = 0; trial < 20; ++trial) {
    auto base = random_isometry(static_cast<std::size_t>(uniform_int(1, 3)));
    CHECK(induce(induce_cyclic(1, base)) == base);
  }
}

TEST_CASE("induction is functorial") {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = static_cast<std::size_t>(uniform_int(1, 4));
    std::size_t k = static_cast<std::size_t>(uniform_int(1, 3));
    auto a = random_coset_action(d, k);
    auto b = random_coset_action(d, k);
    CHECK(induce(compose(a, b)) == compose(induce(a), induce(b)));
  }
}

TEST_CASE("subgroup acts on its own block through the base action") {
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = static_cast<std::size_t>(uniform_int(1, 4));
    auto base = random_isometry(static_cast<std::size_t>(uniform_int(1, 3)));
    auto g = induce(induce_cyclic(d, base));
    auto h = g.pow(static_cast<long>(d));
    for (std::size_t b = 0; b < d; ++b) {
      auto restricted = block_action(h, b);
      REQUIRE(restricted);
      CHECK(*restricted == base);
    }
    if (d > 1) CHECK_FALSE(block_action(g, 0).has_value());
  }
}

TEST_CASE("induction promotes hyperbolicity") {
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t k = static_cast<std::size_t>(uniform_int(1, 3));
      auto base = random_isometry(k);
      auto g = induce(induce_cyclic(d, base));
      Rational base_len = trans_length_sq(base).length_sq;
      Rational len = trans_length_sq(g).length_sq;
      // g^d acts on every block as the base element, so |g|^2 = |base|^2 / d.
      CHECK(len * Rational(static_cast<long>(d)) == base_len);
      if (base_len > 0) CHECK(len > 0);
    }
    Rational ell = q(uniform_int(1, 20), uniform_int(1, 7));
    CHECK(trans_length_sq(induce(induce_cyclic(d, AffineIsometry::translation_by({ell})))).length_sq > 0);
  }
}

TEST_CASE("coset action validation") {
  auto id = AffineIsometry::identity(1, 1);
  CHECK_THROWS_AS(induce({{0, 0}, {id, id}}), PreconditionError);
  CHECK_THROWS_AS(induce({{0, 1}, {id}}), PreconditionError);
  CHECK_THROWS_AS(induce({{1, 0}, {id, AffineIsometry::identity(2, 2)}}), PreconditionError);
}

TEST_CASE("equidistant certificate examples") {
  auto c = equidistant_forces_zero({1, 0}, 1, 2);
  CHECK(c.eliminant == 2);
  CHECK(validate(c));
  // Grid search over a in [-3,3]^2 with step 1/2: only a = 0 passes.
  for (int x = -6; x <= 6; ++x) {
    for (int y = -6; y <= 6; ++y) {
      QVector a{q(x, 2), q(y, 2)};
      CHECK(check_equidistant({1, 0}, 1, 2, a).both() == (x == 0 && y == 0));
    }
  }

  CHECK_THROWS_AS(equidistant_forces_zero({1, 0}, 2, 2), PreconditionError);
  CHECK_THROWS_AS(equidistant_forces_zero({1, 0}, 0, 2), PreconditionError);
  auto w = degenerate_witness({1, 0}, 2);
  CHECK_FALSE(is_zero(w));
  CHECK(check_equidistant({1, 0}, 2, 2, w).both());

  CHECK(validate(equidistant_forces_zero({0, 0, 0}, 1, 3)));
  CHECK_FALSE(check_equidistant({0, 0, 0}, 1, 3, {1, 0, 0}).both());
}

TEST_CASE("tampered certificates fail validation") {
  auto c = equidistant_forces_zero({1, 2}, 2, -3);
  CHECK(validate(c));
  auto bad = c;
  bad.eliminant += 1;
  CHECK_FALSE(validate(bad));
  bad = c;
  bad.multiplier_first = 1;
  CHECK_FALSE(validate(bad));
  bad = c;
  bad.q = bad.p;
  CHECK_FALSE(validate(bad));
}

TEST_CASE("random equidistant instances") {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = static_cast<std::size_t>(uniform_int(1, 3));
    QVector tau = random_qvector(k, 3);
    long p = 0, qq = 0;
    while (p == 0 || qq == 0 || p == qq) {
      p = uniform_int(-4, 4);
      qq = uniform_int(-4, 4);
    }
    auto cert = equidistant_forces_zero(tau, p, qq);
    CHECK(validate(cert));
    CHECK(cert.eliminant == Integer(p) * qq * (qq - p));
    // Grid in steps of 1/6 around the degenerate witnesses.
    for (int s = 0; s < 60; ++s) {
      QVector a;
      for (std::size_t i = 0; i < k; ++i) a.push_back(q(uniform_int(-12, 12), 6));
      if (uniform_int(0, 3) == 0) a = degenerate_witness(tau, uniform_int(0, 1) ? p : qq);
      if (check_equidistant(tau, p, qq, a).both()) CHECK(is_zero(a));
    }
    // Each constraint alone admits the degenerate witness.
    CHECK(check_equidistant(tau, p, p, degenerate_witness(tau, p)).both());
  }
}

TEST_CASE("Nielsen flat") {
  for (long s = 1; s <= 3; ++s) {
    auto r = nielsen_flat(s);
    CHECK(r.kernel_is_zero);
    CHECK(r.equal_lengths);
    CHECK(r.length_sq == 2 * s * s);
    CHECK(r.octo.pass());
    CHECK(r.lattice.rank() == 3);
    CHECK(r.lattice.covolume() == 2 * s * s * s);
    CHECK(r.cell.volume() == 2 * s * s * s);
    CHECK(r.classification.is_rhombic_dodecahedron);
    for (auto const& f : r.classification.faces) CHECK(f.diagonal_ratio_sq == Rational(2));
    CHECK(r.pass());
  }
  CHECK(nielsen_flat(2).cell.volume() == 16);
  CHECK_THROWS_AS(nielsen_flat(0), PreconditionError);

  // The lattice is that of the canonical quadruple: sign changes do not matter.
  auto r = nielsen_flat(1);
  auto fcc = lattice_from({Vec3{1, 1, 0}, Vec3{1, -1, 0}, Vec3{1, 0, 1}, Vec3{1, 0, -1}});
  CHECK(r.lattice.basis() == fcc.basis());
}
