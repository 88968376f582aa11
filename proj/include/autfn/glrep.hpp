#pragma once

// The index-2 subgroup H = ker(nu) of F_3, where nu : F_3 -> Z/2 sends
// a1, a2 -> 0 and a3 -> 1, together with the action of its stabilizer on
// H_1(H) and on the (-1)-eigenspace of the deck involution.
//
// Free basis of H (Schreier transversal {1, a3}):
//   x1 = a1, x2 = a2, x3 = a3^2, x4 = a3 a1 a3^-1, x5 = a3 a2 a3^-1.
// Matrices act on column vectors; ab5(f o g) = ab5(f) ab5(g).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "autfn/aut.hpp"
#include "autfn/int_matrix.hpp"
#include "autfn/word.hpp"

namespace autfn {

inline constexpr int kCoverRank = 5;

// x1..x5 as words in F_3.
std::array<Word, 5> const& subgroup_basis();

int nu(Word const& w);
bool stabilizes(Endo const& e);

// Reidemeister-Schreier rewrite of w (nu(w) = 0) over x1..x5, as a word of
// rank 5. Throws PreconditionError when nu(w) = 1.
Word rewrite(Word const& w);
// Substitute x_i -> subgroup_basis()[i] and reduce in F_3.
Word evaluate(Word const& x_word);

IntMatrix ab5(Endo const& e);
// The deck involution, i.e. ab5(ad_{a3}).
IntMatrix galois_involution();
// Integer basis (as columns of a 5x2 matrix) of the (-1)-eigenspace of the
// deck involution, computed by exact kernel extraction and normalized to a
// positive leading entry. Equals e1 = x1 - x4, e2 = x2 - x5.
IntMatrix minus_eigenspace();
IntMatrix mu(Endo const& e);

// {a^i b a^-i : 0 <= i <= k-2} followed by a^(k-1), in F_2 = <a, b> = <a1, a2>.
std::vector<Word> lk_basis(int k);

struct ShortRelationSearch {
  int max_length = 0;
  bool none_found = true;
  // First relation found, as a word in x1 = M1, x2 = M2.
  std::optional<Word> relation;
  std::size_t words_checked = 0;
};

// Exhaustive search for a nonempty freely reduced word of length <= max_length
// in M1^{+-1}, M2^{+-1} that evaluates to the identity.
ShortRelationSearch search_short_relation(IntMatrix const& m1, IntMatrix const& m2, int max_length);
bool no_short_relation(IntMatrix const& m1, IntMatrix const& m2, int max_length);

}  // namespace autfn
