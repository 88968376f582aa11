#pragma once

// Automorphisms of F_n: formal products of elementary generators (AutExpr)
// and their realization as generator images (Endo).
//
// Conventions, fixed once for the whole library:
//   * composition is (f g)(x) = f(g(x)), so an AutExpr f1 f2 ... fk acts by
//     applying fk first;
//   * ad_g(x) = g x g^-1, hence ad_{gh} = ad_g ad_h;
//   * [f, g] = f g f^-1 g^-1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autfn/word.hpp"

namespace autfn {

enum class ElemKind {
  NielsenLeft,    // L_ij : a_i -> a_j a_i
  NielsenRight,   // R_ij : a_i -> a_i a_j
  Inversion,      // E_i  : a_i -> a_i^-1
  Transposition,  // P_ij : a_i <-> a_j
};

struct ElemAut {
  ElemKind kind = ElemKind::Inversion;
  int i = 1;
  int j = 0;  // unused for Inversion
  int rank = 1;

  static ElemAut left(int rank, int i, int j);
  static ElemAut right(int rank, int i, int j);
  static ElemAut inversion(int rank, int i);
  static ElemAut transposition(int rank, int i, int j);

  friend bool operator==(ElemAut const&, ElemAut const&) = default;
};

struct Factor {
  ElemAut gen;
  long exponent = 1;

  friend bool operator==(Factor const&, Factor const&) = default;
};

class AutExpr {
 public:
  explicit AutExpr(int rank);
  AutExpr(int rank, std::vector<Factor> factors);

  static AutExpr identity(int rank) { return AutExpr(rank); }
  static AutExpr of(ElemAut g, long exponent = 1);
  static AutExpr left(int rank, int i, int j, long exponent = 1);
  static AutExpr right(int rank, int i, int j, long exponent = 1);
  static AutExpr inversion(int rank, int i, long exponent = 1);
  static AutExpr transposition(int rank, int i, int j, long exponent = 1);

  int rank() const noexcept { return rank_; }
  std::vector<Factor> const& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }

  // Syntactic: reverse the factors and negate exponents.
  AutExpr inverse() const;
  AutExpr pow(long k) const;

  friend AutExpr operator*(AutExpr const& a, AutExpr const& b);
  friend bool operator==(AutExpr const&, AutExpr const&) = default;

 private:
  int rank_;
  std::vector<Factor> factors_;
};

AutExpr commutator(AutExpr const& a, AutExpr const& b);

// Text form: tokens L21, R21, E2, P12 with optional ^k; indices >= 10 use a
// comma ("L10,2"). The identity is "1".
std::string format(AutExpr const& x);
AutExpr parse_aut(std::string_view text, int rank);

// An endomorphism of F_n given by the images of a1..an.
class Endo {
 public:
  explicit Endo(std::vector<Word> images);

  static Endo identity(int rank);

  int rank() const noexcept { return rank_; }
  // Image of a_i, 1-based.
  Word const& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  std::vector<Word> const& images() const noexcept { return images_; }

  // Equality of maps: images of the basis agree as reduced words.
  friend bool operator==(Endo const&, Endo const&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

Endo endo_of(ElemAut const& g, long exponent = 1);
Endo endo_of(AutExpr const& x);

Word apply(Endo const& e, Word const& w);
// compose(f, g) = f o g
Endo compose(Endo const& f, Endo const& g);
bool equal(Endo const& f, Endo const& g);

// ad_g : x -> g x g^-1
Endo inner(Word const& g);
// ad_g written as a product of Nielsen moves, using ad_{a_i} = prod_{j != i} L_ji R_ji^-1.
AutExpr inner_expr(Word const& g);

// Returns g with e = ad_g, or nullopt. The conjugator is unique for rank >= 2;
// for rank 1 the only inner automorphism is the identity and the empty word
// is returned.
std::optional<Word> is_inner(Endo const& e);

// a_target -> a_target w, other generators fixed, as a product of right
// Nielsen moves. w must not involve a_target.
AutExpr right_multiplier(int rank, int target, Word const& w);

enum class RelationMode { Aut, Out };

struct RelationResult {
  std::string name;
  AutExpr lhs;
  AutExpr rhs;
  RelationMode mode = RelationMode::Aut;
  bool holds = false;
  // Out mode: the conjugator g with lhs rhs^-1 = ad_g, when it exists.
  std::optional<Word> conjugator;
};

bool verify_relation(AutExpr const& lhs, AutExpr const& rhs, RelationMode mode);
RelationResult check_relation(std::string name, AutExpr const& lhs, AutExpr const& rhs,
                              RelationMode mode = RelationMode::Aut);

// Images of the defining relations of
//   G_{p,q} = < alpha, beta, gamma, t | [t, alpha], t beta t^-1 = beta alpha^p,
//                                       t gamma t^-1 = gamma alpha^q >.
struct GpqReport {
  int n = 0;
  long p = 0;
  long q = 0;
  Word w;
  std::vector<RelationResult> relations;

  bool all_hold() const;
};

// F_{n+1} with basis a_0..a_n (stored as a1..a(n+1)), w in <a_1..a_{n-2}>
// given with its own indices (a1 means a_1). Builds alpha = R_w,
// beta = R_{a_{n-1}}, gamma = R_{a_n} and
// T : a_{n-1} -> a_{n-1} w^p, a_n -> a_n w^q.
GpqReport gpq_check(int n, long p, long q, Word const& w);

// alpha = ad_a, beta = ad_b, gamma = ad_c, t = tau : b -> b a^p, c -> c a^q
// in Aut(F_3) with (a, b, c) = (a1, a2, a3).
GpqReport inner_gpq_check(long p, long q);

struct NielsenZ4Report {
  std::vector<RelationResult> commutations;
  // The product L21^-1 R21 L31^-1 R31 compared with ad_{a1} and ad_{a1}^-1.
  AutExpr product{3};
  bool equals_ad_a1 = false;
  bool equals_ad_a1_inverse = false;
  std::optional<Word> conjugator;
  bool trivial_in_out = false;

  // +1 / -1 when the product is ad_{a1}^{+-1}, 0 otherwise.
  int sign() const { return equals_ad_a1 ? 1 : (equals_ad_a1_inverse ? -1 : 0); }
  bool all_hold() const;
};

NielsenZ4Report nielsen_z4_check();

// The full identity suite over Aut(F_3); Out-mode identities are appended
// when include_out is set.
std::vector<RelationResult> standard_relation_suite(bool include_out);

}  // namespace autfn
