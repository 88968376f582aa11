#include <vector>

#include "autfn/aut.hpp"
#include "autfn/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace autfn;
using autfn::testing::random_aut;
using autfn::testing::random_word;
using autfn::testing::uniform_int;

namespace {

Word w3(char const* text) { return parse_word(text, 3); }

// R_w on F_{n+1}, built directly from generator images (stored indices).
Endo direct_right_multiplier(int rank, int target, Word const& w) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    Word a = Word::generator(rank, i);
    images.push_back(i == target ? mul(a, w) : a);
  }
  return Endo(images);
}

Endo endo_pow(Endo const& e, long k) {
  Endo out = Endo::identity(e.rank());
  for (long i = 0; i < k; ++i) {
    out = compose(out, e);
  }
  return out;
}

}  // namespace

TEST_CASE("endo_of on elementary generators") {
  Endo l21 = endo_of(AutExpr::left(3, 2, 1));
  CHECK(l21.image(1) == w3("a1"));
  CHECK(l21.image(2) == w3("a1 a2"));
  CHECK(l21.image(3) == w3("a3"));

  CHECK(endo_of(AutExpr::inversion(3, 2, 2)) == Endo::identity(3));

  Endo r21inv = endo_of(AutExpr::right(3, 2, 1, -1));
  CHECK(r21inv.image(2) == w3("a2 a1^-1"));
  // Substituting back through R21 recovers the basis.
  CHECK(compose(endo_of(AutExpr::right(3, 2, 1)), r21inv) == Endo::identity(3));
  CHECK(compose(r21inv, endo_of(AutExpr::right(3, 2, 1))) == Endo::identity(3));

  Endo p12 = endo_of(AutExpr::transposition(3, 1, 2));
  CHECK(p12.image(1) == w3("a2"));
  CHECK(p12.image(2) == w3("a1"));
}

TEST_CASE("elementary generators reject bad indices") {
  CHECK_THROWS_AS(ElemAut::left(3, 2, 2), PreconditionError);
  CHECK_THROWS_AS(ElemAut::right(3, 4, 1), PreconditionError);
  CHECK_THROWS_AS(ElemAut::inversion(3, 0), PreconditionError);
  CHECK_THROWS_AS(AutExpr::left(3, 2, 1) * AutExpr::left(4, 2, 1), PreconditionError);
}

TEST_CASE("apply / compose / equal") {
  Endo l21 = endo_of(AutExpr::left(2, 2, 1));
  CHECK(apply(l21, parse_word("a2 a2", 2)) == parse_word("a1 a2 a1 a2", 2));

  Word a1 = Word::generator(3, 1);
  Word a2 = Word::generator(3, 2);
  CHECK(compose(inner(a1), inner(a2)) == inner(mul(a1, a2)));

  auto lr = endo_of(AutExpr::left(3, 2, 1) * AutExpr::right(3, 2, 1));
  auto rl = endo_of(AutExpr::right(3, 2, 1) * AutExpr::left(3, 2, 1));
  CHECK(equal(lr, rl));
  CHECK(lr.image(2) == w3("a1 a2 a1"));
  CHECK_THROWS_AS(compose(Endo::identity(2), Endo::identity(3)), PreconditionError);
  CHECK_THROWS_AS(apply(Endo::identity(2), w3("a1")), PreconditionError);
}

TEST_CASE("apply is a homomorphism and compose matches sequential application") {
  for (int trial = 0; trial < 100; ++trial) {
    Endo f = endo_of(random_aut(3, 6));
    Endo g = endo_of(random_aut(3, 6));
    Word u = random_word(3, 15);
    Word v = random_word(3, 15);
    CHECK(apply(f, mul(u, v)) == mul(apply(f, u), apply(f, v)));
    CHECK(apply(compose(f, g), u) == apply(f, apply(g, u)));
  }
}

TEST_CASE("syntactic inversion is sound") {
  for (int trial = 0; trial < 200; ++trial) {
    int rank = uniform_int(2, 4);
    AutExpr x = random_aut(rank, 10);
    CHECK(endo_of(x * x.inverse()) == Endo::identity(rank));
    CHECK(endo_of(x.inverse() * x) == Endo::identity(rank));
    CHECK(endo_of(x.pow(2)) == compose(endo_of(x), endo_of(x)));
  }
}

TEST_CASE("inner automorphisms") {
  CHECK(inner(Word(3)) == Endo::identity(3));
  CHECK(inner(w3("a1")).image(2) == w3("a1 a2 a1^-1"));

  for (int trial = 0; trial < 100; ++trial) {
    Word g = random_word(3, 12);
    CHECK(endo_of(inner_expr(g)) == inner(g));

    // phi ad_g phi^-1 = ad_{phi(g)}, checked as phi o ad_g = ad_{phi(g)} o phi.
    Endo phi = endo_of(random_aut(3, 6));
    CHECK(compose(phi, inner(g)) == compose(inner(apply(phi, g)), phi));
  }
}

TEST_CASE("is_inner") {
  CHECK(is_inner(Endo::identity(3)) == Word(3));
  CHECK(is_inner(inner(w3("a1 a2^-1"))) == w3("a1 a2^-1"));
  CHECK_FALSE(is_inner(endo_of(AutExpr::left(3, 2, 1))).has_value());
  CHECK_FALSE(is_inner(endo_of(AutExpr::inversion(3, 2))).has_value());
  CHECK(is_inner(Endo::identity(1)) == Word(1));
  CHECK_FALSE(is_inner(endo_of(AutExpr::inversion(1, 1))).has_value());

  for (int trial = 0; trial < 200; ++trial) {
    int rank = uniform_int(2, 4);
    Word g = random_word(rank, 20);
    auto found = is_inner(inner(g));
    REQUIRE(found.has_value());
    CHECK(inner(*found) == inner(g));
    CHECK(*found == g);
  }
}

TEST_CASE("AutExpr text form") {
  AutExpr x = parse_aut("L21 R31^-1 E2 P12^3", 3);
  REQUIRE(x.size() == 4);
  CHECK(x.factors()[0].gen == ElemAut::left(3, 2, 1));
  CHECK(x.factors()[1].gen == ElemAut::right(3, 3, 1));
  CHECK(x.factors()[1].exponent == -1);
  CHECK(x.factors()[2].gen == ElemAut::inversion(3, 2));
  CHECK(x.factors()[3].exponent == 3);
  CHECK(format(x) == "L21 R31^-1 E2 P12^3");
  CHECK(parse_aut("1", 3).size() == 0);
  CHECK(format(AutExpr(3)) == "1");

  AutExpr big = parse_aut("L10,2^2", 12);
  CHECK(big.factors()[0].gen == ElemAut::left(12, 10, 2));
  CHECK(format(big) == "L10,2^2");

  CHECK_THROWS_AS(parse_aut("L22", 3), ParseError);
  CHECK_THROWS_AS(parse_aut("L2", 3), ParseError);
  CHECK_THROWS_AS(parse_aut("X12", 3), ParseError);
  CHECK_THROWS_AS(parse_aut("L41", 3), ParseError);

  for (int trial = 0; trial < 100; ++trial) {
    AutExpr y = random_aut(4, 8);
    CHECK(parse_aut(format(y), 4) == y);
  }
}

TEST_CASE("relations among Nielsen moves in Aut(F_3)") {
  auto L = [](int i, int j) { return AutExpr::left(3, i, j); };
  auto R = [](int i, int j) { return AutExpr::right(3, i, j); };
  auto E = [](int i) { return AutExpr::inversion(3, i); };
  using M = RelationMode;

  CHECK(verify_relation(commutator(L(2, 3).inverse(), L(3, 1).inverse()), L(2, 1).inverse(), M::Aut));
  CHECK(verify_relation(commutator(R(2, 3).inverse(), R(3, 1).inverse()), R(2, 1).inverse(), M::Aut));
  CHECK(verify_relation(E(2) * L(2, 1).inverse() * E(2).inverse(), R(2, 1), M::Aut));
  CHECK(verify_relation(E(2) * L(3, 1) * E(2).inverse(), L(3, 1), M::Aut));
  // Negative control: dropping the inverse breaks the identity.
  CHECK_FALSE(verify_relation(commutator(L(2, 3).inverse(), L(3, 1).inverse()), L(2, 1), M::Aut));
  CHECK_FALSE(verify_relation(commutator(L(2, 3).inverse(), L(3, 1).inverse()), L(2, 1), M::Out));
}

TEST_CASE("L_ij and R_ij^-1 are conjugate by E_i for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        AutExpr e = AutExpr::inversion(n, i);
        CHECK(verify_relation(e * AutExpr::left(n, i, j) * e.inverse(),
                              AutExpr::right(n, i, j).inverse(), RelationMode::Aut));
      }
    }
  }
}

TEST_CASE("Out mode is implied by Aut mode") {
  for (int trial = 0; trial < 100; ++trial) {
    AutExpr x = random_aut(3, 6);
    AutExpr y = random_aut(3, 6);
    // x y (x y)^-1 ... build a true identity by rewriting the same map two ways.
    AutExpr lhs = x * y;
    AutExpr rhs = x * AutExpr::inversion(3, 1, 2) * y;
    REQUIRE(verify_relation(lhs, rhs, RelationMode::Aut));
    CHECK(verify_relation(lhs, rhs, RelationMode::Out));
    // Inner twists are invisible in Out but not in Aut.
    AutExpr twisted = lhs * inner_expr(random_word(3, 5));
    CHECK(verify_relation(twisted, rhs, RelationMode::Out));
  }
}

TEST_CASE("G_{p,q} relations under R_w and T") {
  auto all = [](GpqReport const& r) { return r.all_hold() && r.relations.size() == 3; };
  CHECK(all(gpq_check(4, 1, 2, parse_word("a1", 4))));
  CHECK(all(gpq_check(4, 3, 3, parse_word("a1", 4))));
  CHECK(all(gpq_check(5, 2, 3, parse_word("a1 a2^-1", 5))));
  CHECK(all(gpq_check(3, -1, 3, parse_word("a1^2", 3))));
  CHECK(all(gpq_check(4, 1, 2, Word(4))));

  CHECK_THROWS_AS(gpq_check(4, 1, 2, parse_word("a3", 4)), PreconditionError);
  CHECK_THROWS_AS(gpq_check(4, 0, 2, parse_word("a1", 4)), PreconditionError);
  CHECK_THROWS_AS(gpq_check(2, 1, 2, Word(2)), PreconditionError);
}

TEST_CASE("G_{p,q} relations via direct generator images") {
  // Independent of AutExpr: build the maps from images and compare
  // T alpha = alpha T, T beta = beta alpha^p T, T gamma = gamma alpha^q T.
  for (int n = 3; n <= 6; ++n) {
    int rank = n + 1;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {-1, 3}}) {
      for (int trial = 0; trial < 5; ++trial) {
        Word w = random_word(n - 2, 6);
        Word ws = shift(w, 1, rank);
        Endo alpha = direct_right_multiplier(rank, 1, ws);
        Endo beta = direct_right_multiplier(rank, 1, Word::generator(rank, n));
        Endo gamma = direct_right_multiplier(rank, 1, Word::generator(rank, n + 1));
        std::vector<Word> t_images;
        for (int i = 1; i <= rank; ++i) {
          Word a = Word::generator(rank, i);
          if (i == n) a = mul(a, pow(ws, p));
          if (i == n + 1) a = mul(a, pow(ws, q));
          t_images.push_back(a);
        }
        Endo t(t_images);
        auto alpha_pow = [&](long k) {
          // alpha^k for k possibly negative: alpha^-1 multiplies by w^-1.
          return k >= 0 ? endo_pow(alpha, k) : endo_pow(direct_right_multiplier(rank, 1, inv(ws)), -k);
        };
        CHECK(compose(t, alpha) == compose(alpha, t));
        CHECK(compose(t, beta) == compose(compose(beta, alpha_pow(p)), t));
        CHECK(compose(t, gamma) == compose(compose(gamma, alpha_pow(q)), t));

        auto report = gpq_check(n, p, q, embed(w, n));
        CHECK(report.all_hold());
      }
    }
  }
}

TEST_CASE("inner G_{p,q} relations") {
  CHECK(inner_gpq_check(1, 2).all_hold());
  CHECK(inner_gpq_check(3, 3).all_hold());
  CHECK(inner_gpq_check(-1, 4).all_hold());
  CHECK_THROWS_AS(inner_gpq_check(0, 1), PreconditionError);
}

TEST_CASE("Nielsen Z^4") {
  auto report = nielsen_z4_check();
  CHECK(report.commutations.size() == 6);
  for (auto const& c : report.commutations) {
    CHECK_MESSAGE(c.holds, c.name);
  }
  // Under f g = f o g the product is conjugation by a1^-1.
  CHECK_FALSE(report.equals_ad_a1);
  CHECK(report.equals_ad_a1_inverse);
  CHECK(report.sign() == -1);
  CHECK(report.conjugator == w3("a1^-1"));
  CHECK(report.trivial_in_out);
  CHECK(report.all_hold());
}

TEST_CASE("standard relation suite") {
  auto aut_only = standard_relation_suite(false);
  auto with_out = standard_relation_suite(true);
  CHECK(with_out.size() > aut_only.size());
  for (auto const& r : with_out) {
    CHECK_MESSAGE(r.holds, r.name);
  }
}
