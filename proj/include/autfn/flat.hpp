#pragma once

// Euclidean models: translation actions of Z^r, affine isometries with a
// signed-permutation linear part, induced actions on products, and the flat
// built from the four Nielsen moves L21, R21, L31, R31.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "autfn/lattice.hpp"
#include "autfn/polytope.hpp"
#include "autfn/rational.hpp"

namespace autfn {

// Z^r acting on Q^k: (n_1..n_r) translates by sum n_i vectors[i].
class TranslationAction {
 public:
  TranslationAction(std::size_t dim, std::vector<QVector> vectors);

  std::size_t rank() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  std::vector<QVector> const& vectors() const noexcept { return vectors_; }

  QVector translation(std::vector<long> const& exponents) const;

 private:
  std::size_t dim_;
  std::vector<QVector> vectors_;
};

// x -> O x + t with O e_i = signs[i] e_{perm[i]}. O must carry each block of
// `block` consecutive coordinates onto a block.
class AffineIsometry {
 public:
  AffineIsometry(std::size_t block, std::vector<std::size_t> perm, std::vector<int> signs, QVector translation);

  static AffineIsometry identity(std::size_t dim, std::size_t block);
  static AffineIsometry translation_by(QVector t);
  // Cyclic shift of d blocks of size k (block i -> block i+1 mod d) followed
  // by translation t.
  static AffineIsometry block_cycle(std::size_t d, std::size_t k, QVector t);

  std::size_t dim() const noexcept { return perm_.size(); }
  std::size_t block() const noexcept { return block_; }
  std::size_t block_count() const noexcept { return dim() / block_; }
  std::vector<std::size_t> const& perm() const noexcept { return perm_; }
  std::vector<int> const& signs() const noexcept { return signs_; }
  QVector const& translation() const noexcept { return translation_; }

  QVector linear(QVector const& x) const;
  QVector operator()(QVector const& x) const;
  QMatrix matrix() const;
  // Smallest m >= 1 with O^m = I.
  long linear_order() const;

  AffineIsometry inverse() const;
  AffineIsometry pow(long m) const;

  friend bool operator==(AffineIsometry const&, AffineIsometry const&) = default;

 private:
  std::size_t block_;
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
  QVector translation_;
};

// compose(f, g) = f o g
AffineIsometry compose(AffineIsometry const& f, AffineIsometry const& g);

struct TranslationLength {
  Rational length_sq;
  QVector axis_translation;  // g.x - x for x in Min(g)
  QVector witness;           // a point of Min(g)
};

// Squared translation length |P t|^2 where P projects onto Fix(O).
TranslationLength trans_length_sq(AffineIsometry const& g);

// How one element x of G acts on the cosets g_1 H .. g_d H:
// x g_i = g_{perm[i]} h_i, with cocycle[i] the image of h_i in the base action.
struct CosetAction {
  std::vector<std::size_t> perm;
  std::vector<AffineIsometry> cocycle;
};

// The induced isometry of the d-fold product: (x.p)_{perm[i]} = h_i p_i.
AffineIsometry induce(CosetAction const& a);
// compose(a, b) describes the product a b.
CosetAction compose(CosetAction const& a, CosetAction const& b);
// G = Z = <x>, H = <x^d>, coset representatives x^0..x^{d-1}; `base` is the
// action of x^d.
CosetAction induce_cyclic(std::size_t d, AffineIsometry const& base);
// The restriction of g to one block, when g maps that block to itself.
std::optional<AffineIsometry> block_action(AffineIsometry const& g, std::size_t block_index);

// From |tau + p a|^2 = |tau|^2 and |tau + q a|^2 = |tau|^2:
//   2p (tau.a) + p^2 |a|^2 = 0,   2q (tau.a) + q^2 |a|^2 = 0.
// p * second - q * first eliminates tau.a and leaves pq(q - p) |a|^2 = 0.
struct Constraint {
  Integer dot_coefficient;   // of tau.a
  Integer norm_coefficient;  // of |a|^2
};

struct EquidistantCertificate {
  QVector tau;
  long p = 0;
  long q = 0;
  Constraint first;
  Constraint second;
  Integer multiplier_first;   // -q
  Integer multiplier_second;  // p
  Integer eliminant;          // coefficient of |a|^2 after elimination
  std::string conclusion;     // "a = 0"
};

EquidistantCertificate equidistant_forces_zero(QVector const& tau, long p, long q);
// Recomputes every coefficient and checks that tau.a cancels and the
// eliminant is nonzero.
bool validate(EquidistantCertificate const& c);

struct EquidistantCheck {
  bool first_holds = false;   // |tau + p a|^2 = |tau|^2
  bool second_holds = false;  // |tau + q a|^2 = |tau|^2
  bool both() const { return first_holds && second_holds; }
};

EquidistantCheck check_equidistant(QVector const& tau, long p, long q, QVector const& a);
// For p = q the constraints coincide and a = -(2/p) tau satisfies both.
QVector degenerate_witness(QVector const& tau, long p);

struct NielsenFlatReport {
  long scale = 1;
  std::array<std::string, 4> labels{"L21", "R21", "L31", "R31"};
  TranslationAction action{3, {}};
  std::vector<long> kernel_vector{-1, 1, -1, 1};
  bool kernel_is_zero = false;
  bool equal_lengths = false;
  Rational length_sq;
  // The quadruple (alpha1, alpha2, beta1^-1, beta2^-1) with alpha1 = L21^-1,
  // alpha2 = R21, beta1 = L31^-1, beta2 = R31.
  OctoReport octo;
  Lattice lattice;
  Polytope cell;
  Classification classification;

  bool pass() const;
};

NielsenFlatReport nielsen_flat(long scale);

}  // namespace autfn
