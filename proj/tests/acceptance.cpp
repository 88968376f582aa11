// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "autfn/commands.hpp"
#include "autfn/error.hpp"
#include "autfn/flat.hpp"
#include "autfn/glrep.hpp"
#include "autfn/lattice.hpp"
#include "autfn/polytope.hpp"
#include "test_support.hpp"

using namespace autfn;
using namespace autfn::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, std::string const& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

bool has_passing(Report const& r, std::string const& name) {
  for (auto const& c : r.checks) {
    if (c.name == name) return c.pass;
  }
  return false;
}

void identity_suite(Outcome& o) {
  auto aut = cmd_verify_relations(RelationMode::Aut);
  auto out = cmd_verify_relations(RelationMode::Out);
  o.require(aut.pass(), "verify-relations (aut)");
  o.require(out.pass(), "verify-relations --mode out");
  for (auto const* name : {"[L23^-1, L31^-1] = L21^-1", "[R23^-1, R31^-1] = R21^-1", "E2 L21^-1 E2^-1 = R21",
                           "E2 R21 E2^-1 = L21^-1", "L21 R21 = R21 L21", "L21 L31 = L31 L21", "L21 R31 = R31 L21",
                           "R21 L31 = L31 R21", "R21 R31 = R31 R21", "L31 R31 = R31 L31"}) {
    o.require(has_passing(aut, name), name);
  }
  auto z4 = nielsen_z4_check();
  o.require(z4.sign() != 0, "product is ad(a1)^{+-1}");
  o.require(has_passing(aut, "L21^-1 R21 L31^-1 R31 = ad(" + std::string(z4.sign() > 0 ? "a1" : "a1^-1") + ")"),
            "inner-product identity");
  o.detail << aut.checks.size() << " aut checks, " << out.checks.size() << " out checks, sign " << z4.sign();
}

void gpq_embeddings(Outcome& o) {
  std::vector<std::pair<long, long>> pq = {{1, 2}, {2, 3}, {-1, 3}};
  int runs = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Word w = random_reduced(n - 2, static_cast<std::size_t>(uniform_int(1, 6)));
      for (auto [p, qq] : pq) {
        o.require(cmd_gpq(n, p, qq, format(w)).pass(),
                  "gpq n=" + std::to_string(n) + " w=" + format(w));
        ++runs;
      }
    }
  }
  for (auto [p, qq] : pq) {
    o.require(cmd_inner_gpq(p, qq).pass(), "inner-gpq p=" + std::to_string(p));
  }
  o.detail << runs << " gpq runs, " << pq.size() << " inner-gpq runs";
}

void representation(Outcome& o) {
  for (long p = 1; p <= 5; ++p) {
    IntMatrix m12 = mu(endo_of(AutExpr::left(3, 1, 2, p)));
    IntMatrix m21 = mu(endo_of(AutExpr::left(3, 2, 1, p)));
    o.require(m12 == IntMatrix{{1, 0}, {p, 1}}, "mu(L12^p)");
    o.require(m21 == IntMatrix{{1, p}, {0, 1}}, "mu(L21^p)");
    o.require(m12 == pow(mu(endo_of(AutExpr::left(3, 1, 2))), static_cast<unsigned long>(p)), "mu(L12)^p");
  }
  for (int trial = 0; trial < 100; ++trial) {
    Endo f = endo_of(random_stabilizing(6));
    Endo g = endo_of(random_stabilizing(6));
    o.require(mu(compose(f, g)) == mu(f) * mu(g), "mu multiplicative");
    o.require(ab5(compose(f, g)) == ab5(f) * ab5(g), "ab5 multiplicative");
  }
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_nu_zero(40);
    o.require(evaluate(rewrite(w)) == w, "rewrite round trip");
  }
  auto sanov = cmd_sanov(2, 8);
  o.require(sanov.pass(), "sanov p=2 L=8");
  o.detail << "p=1..5, 100 pairs, 500 round trips, "
           << sanov.checks.back().witness["words_checked"].get<std::size_t>() << " words searched";
}

void geometry(Outcome& o) {
  std::vector<Vec3> canon = {Vec3{1, 1, 0}, Vec3{1, -1, 0}, Vec3{1, 0, 1}, Vec3{1, 0, -1}};
  auto lat = lattice_from(canon);
  auto cell = voronoi_cell(lat);
  auto c = classify(cell);
  o.require(c.f_vector == std::array<std::size_t, 3>{14, 24, 12}, "f-vector");
  o.require(c.faces.size() == 12, "twelve faces");
  for (auto const& f : c.faces) {
    o.require(f.is_rhombus && f.diagonal_ratio_sq == Rational(2), "rhombic face with ratio 2");
  }
  auto const& b = lat.basis();
  o.require(cell.volume() == 2 && abs(det3(b[0], b[1], b[2])) == 2, "volume 2 = |det|");
  o.require(c.is_rhombic_dodecahedron, "canonical quadruple");

  int rotations = 0;
  while (rotations < 20) {
    long a = uniform_int(-5, 5), bq = uniform_int(-5, 5), cq = uniform_int(-5, 5), d = uniform_int(-5, 5);
    if (a == 0 && bq == 0 && cq == 0 && d == 0) continue;
    Mat3 r = rotation_from_quaternion(a, bq, cq, d);
    std::vector<Vec3> img;
    for (auto const& g : canon) img.push_back(autfn::apply(r, g));
    auto oc = octo_check(img[0], img[1], img[2], img[3]);
    o.require(oc.pass(), "octo_check on rotated quadruple");
    if (oc.pass()) {
      auto l = lattice_from(img);
      o.require(l.rank() == 3, "rotated rank 3");
      o.require(classify(voronoi_cell(l)).is_rhombic_dodecahedron, "rotated cell");
    }
    ++rotations;
  }
  o.detail << "f-vector (14,24,12), volume " << to_string(cell.volume()) << ", 20 rotations";
}

void nielsen_model(Outcome& o) {
  for (long s = 1; s <= 3; ++s) {
    auto r = nielsen_flat(s);
    o.require(r.lattice.rank() == 3, "rank 3");
    o.require(r.classification.is_rhombic_dodecahedron, "rhombic dodecahedron");
    o.require(r.kernel_is_zero && r.kernel_vector == std::vector<long>{-1, 1, -1, 1}, "kernel");
    o.require(cmd_nielsen_flat(s).report.pass(), "nielsen-flat report");
  }
  o.detail << "s = 1..3";
}

void degeneracy(Outcome& o) {
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = static_cast<std::size_t>(uniform_int(1, 3));
    QVector tau;
    for (std::size_t i = 0; i < k; ++i) tau.push_back(q(uniform_int(-5, 5), uniform_int(1, 4)));
    long p = 0, qq = 0;
    while (p == 0 || qq == 0 || p == qq) {
      p = uniform_int(-5, 5);
      qq = uniform_int(-5, 5);
    }
    auto r = cmd_lemma_pq(tau, p, qq);
    o.require(has_passing(r, "certificate validates"), "certificate");
    o.require(has_passing(r, "grid search finds only a = 0"), "grid search");
  }
  bool refused = false;
  try {
    cmd_lemma_pq({1, 0}, 2, 2);
  } catch (PreconditionError const&) {
    refused = true;
  }
  o.require(refused, "p = q refused");
  o.detail << "100 random instances, p = q refused";
}

void induction(Outcome& o) {
  int runs = 0;
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 10; ++trial) {
      Rational ell = q(uniform_int(1, 30) * (uniform_int(0, 1) ? 1 : -1), uniform_int(1, 9));
      auto g = induce(induce_cyclic(d, AffineIsometry::translation_by({ell})));
      auto len = trans_length_sq(g).length_sq;
      o.require(len == ell * ell / static_cast<long>(d), "trans_length_sq = ell^2/d");
      o.require(len > 0, "hyperbolic");
      o.require(cmd_induce(d, ell).pass(), "induce report");
      ++runs;
    }
  }
  o.detail << runs << " runs over d in {2,3,4}";
}

void word_algebra(Outcome& o) {
  int const cases = 1000;
  for (int i = 0; i < cases; ++i) {
    int rank = uniform_int(1, 5);
    auto raw = random_letters(rank, static_cast<std::size_t>(uniform_int(0, 30)));
    Word w(rank, raw);
    o.require(Word(rank, w.letters()) == w, "reduction idempotent");
    auto naive = naive_reduce(raw);
    o.require(std::vector<Letter>(w.letters().begin(), w.letters().end()) == naive, "agrees with naive reduction");
  }
  for (int i = 0; i < cases; ++i) {
    int rank = uniform_int(1, 5);
    Word a = random_word(rank, 20), b = random_word(rank, 20), c = random_word(rank, 20);
    o.require(mul(mul(a, b), c) == mul(a, mul(b, c)), "associativity");
  }
  for (int i = 0; i < cases; ++i) {
    int rank = uniform_int(1, 5);
    Word a = random_word(rank, 20);
    o.require(mul(a, inv(a)).empty() && mul(inv(a), a).empty() && inv(inv(a)) == a, "inverse laws");
  }
  for (int i = 0; i < cases; ++i) {
    int rank = uniform_int(1, 5);
    Word a = random_word(rank, 20), b = random_word(rank, 20);
    auto va = ab_vector(a), vb = ab_vector(b), vab = ab_vector(mul(a, b));
    bool hom = true;
    for (std::size_t k = 0; k < va.size(); ++k) hom = hom && vab[k] == va[k] + vb[k];
    o.require(hom, "ab_vector homomorphism");
  }
  o.detail << cases << " cases per property";
}

}  // namespace

int main() {
  struct Criterion {
    char const* label;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria = {
      {"1 identity suite", identity_suite},
      {"2 G_{p,q} embeddings", gpq_embeddings},
      {"3 representation mu", representation},
      {"4 geometry", geometry},
      {"5 Nielsen flat", nielsen_model},
      {"6 equidistance degeneracy", degeneracy},
      {"7 induction", induction},
      {"8 word algebra", word_algebra},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (std::exception const& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-28s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", c.label, o.detail.str().c_str(), ms);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
