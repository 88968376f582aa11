#include "autfn/glrep.hpp"

#include <stdexcept>

#include "autfn/error.hpp"
#include "autfn/rational.hpp"

namespace autfn {

namespace {

void require_f3(Word const& w) {
  if (w.rank() != 3) {
    throw PreconditionError("expected a word in F_3");
  }
}

// Schreier generator for coset state `coset` (0 = H, 1 = a3 H) read by the
// positive letter a_index; 0 marks the trivial generator (tree edge).
int schreier_generator(int coset, int index) {
  static constexpr int table[2][3] = {
      {1, 2, 0},  // 1 . a1 = x1, 1 . a2 = x2, 1 . a3 . a3^-1 = 1
      {4, 5, 3},  // a3 a1 a3^-1 = x4, a3 a2 a3^-1 = x5, a3 a3 = x3
  };
  return table[coset][index - 1];
}

void require_stabilizing(Endo const& e) {
  if (e.rank() != 3) {
    throw PreconditionError("expected an automorphism of F_3");
  }
  if (!stabilizes(e)) {
    throw PreconditionError("automorphism does not stabilize ker(nu)");
  }
}

}  // namespace

std::array<Word, 5> const& subgroup_basis() {
  static std::array<Word, 5> const basis = {
      parse_word("a1", 3),
      parse_word("a2", 3),
      parse_word("a3^2", 3),
      parse_word("a3 a1 a3^-1", 3),
      parse_word("a3 a2 a3^-1", 3),
  };
  return basis;
}

int nu(Word const& w) {
  require_f3(w);
  long e = ab_vector(w)[2];
  return static_cast<int>(((e % 2) + 2) % 2);
}

bool stabilizes(Endo const& e) {
  if (e.rank() != 3) {
    return false;
  }
  for (int i = 1; i <= 3; ++i) {
    if (nu(e.image(i)) != nu(Word::generator(3, i))) {
      return false;
    }
  }
  return true;
}

Word rewrite(Word const& w) {
  require_f3(w);
  if (nu(w) != 0) {
    throw PreconditionError("rewrite: word " + format(w) + " is not in ker(nu)");
  }
  WordBuilder out(kCoverRank);
  int coset = 0;
  for (Letter l : w.letters()) {
    int flip = (l.index == 3) ? 1 : 0;
    if (l.sign > 0) {
      if (int x = schreier_generator(coset, l.index)) {
        out.push({x, 1});
      }
      coset ^= flip;
    } else {
      // Reading a^-1 from coset c lands in c' with c' . a = c.
      coset ^= flip;
      if (int x = schreier_generator(coset, l.index)) {
        out.push({x, -1});
      }
    }
  }
  return std::move(out).build();
}

Word evaluate(Word const& x_word) {
  if (x_word.rank() != kCoverRank) {
    throw PreconditionError("evaluate expects a word over x1..x5");
  }
  WordBuilder out(3);
  auto const& basis = subgroup_basis();
  for (Letter l : x_word.letters()) {
    auto const& x = basis[static_cast<std::size_t>(l.index - 1)];
    if (l.sign > 0) {
      out.append(x);
    } else {
      out.append_inverse(x);
    }
  }
  return std::move(out).build();
}

IntMatrix ab5(Endo const& e) {
  require_stabilizing(e);
  IntMatrix m(kCoverRank, kCoverRank);
  auto const& basis = subgroup_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    m.set_column(i, ab_vector(rewrite(apply(e, basis[i]))));
  }
  return m;
}

IntMatrix galois_involution() {
  return ab5(inner(Word::generator(3, 3)));
}

IntMatrix minus_eigenspace() {
  static IntMatrix const cached = [] {
    IntMatrix sigma = galois_involution();
    if (sigma * sigma != IntMatrix::identity(kCoverRank)) {
      throw std::logic_error("deck transformation is not an involution on H_1");
    }
    QMatrix shifted(kCoverRank, QVector(kCoverRank));
    for (std::size_t r = 0; r < kCoverRank; ++r) {
      for (std::size_t c = 0; c < kCoverRank; ++c) {
        shifted[r][c] = sigma(r, c) + (r == c ? 1 : 0);
      }
    }
    auto ker = kernel(shifted);
    IntMatrix basis(kCoverRank, ker.size());
    for (std::size_t k = 0; k < ker.size(); ++k) {
      // Clear denominators, divide by the content, make the leading entry positive.
      Integer lcm = 1;
      for (auto const& x : ker[k]) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
      }
      std::vector<Integer> v;
      Integer g = 0;
      for (auto const& x : ker[k]) {
        Integer y = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
        v.push_back(y);
      }
      int lead_sign = 0;
      for (auto const& y : v) {
        if (y != 0) {
          lead_sign = sgn(y);
          break;
        }
      }
      for (std::size_t r = 0; r < kCoverRank; ++r) {
        basis(r, k) = Integer(v[r] / g).get_si() * lead_sign;
      }
    }
    IntMatrix expected{{1, 0}, {0, 1}, {0, 0}, {-1, 0}, {0, -1}};
    if (basis != expected) {
      throw std::logic_error("(-1)-eigenspace basis differs from {x1 - x4, x2 - x5}");
    }
    return basis;
  }();
  return cached;
}

IntMatrix mu(Endo const& e) {
  IntMatrix m = ab5(e);
  IntMatrix basis = minus_eigenspace();
  QMatrix b(kCoverRank, QVector(basis.cols()));
  for (std::size_t r = 0; r < kCoverRank; ++r) {
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      b[r][c] = basis(r, c);
    }
  }
  IntMatrix out(basis.cols(), basis.cols());
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    auto image = m * basis.column(k);
    QVector rhs(image.begin(), image.end());
    auto coords = solve(b, rhs);
    if (!coords) {
      throw PreconditionError("mu: the (-1)-eigenspace is not preserved");
    }
    for (std::size_t r = 0; r < coords->size(); ++r) {
      Rational const& c = (*coords)[r];
      if (c.get_den() != 1) {
        throw PreconditionError("mu: non-integral coordinates on the eigenspace");
      }
      out(r, k) = c.get_num().get_si();
    }
  }
  return out;
}

std::vector<Word> lk_basis(int k) {
  if (k < 2) {
    throw PreconditionError("lk_basis needs k >= 2");
  }
  Word b = Word::generator(2, 2);
  std::vector<Word> out;
  for (int i = 0; i <= k - 2; ++i) {
    out.push_back(conj(b, Word::power_of(2, 1, i)));
  }
  out.push_back(Word::power_of(2, 1, k - 1));
  return out;
}

ShortRelationSearch search_short_relation(IntMatrix const& m1, IntMatrix const& m2, int max_length) {
  if (max_length < 0) {
    throw PreconditionError("max_length must be non-negative");
  }
  // Letters: 0 = x1, 1 = x1^-1, 2 = x2, 3 = x2^-1.
  std::array<IntMatrix, 4> gens = {m1, inverse_gl2(m1), m2, inverse_gl2(m2)};
  IntMatrix const id = IntMatrix::identity(2);
  ShortRelationSearch result;
  result.max_length = max_length;

  std::vector<int> stack;
  std::vector<IntMatrix> products = {id};
  // Depth-first enumeration of reduced words; products[d] is the value of
  // the first d letters.
  auto dfs = [&](auto&& self) -> bool {
    int depth = static_cast<int>(stack.size());
    if (depth == max_length) {
      return false;
    }
    for (int letter = 0; letter < 4; ++letter) {
      if (!stack.empty() && (stack.back() ^ 1) == letter) {
        continue;
      }
      stack.push_back(letter);
      products.push_back(products.back() * gens[static_cast<std::size_t>(letter)]);
      ++result.words_checked;
      if (products.back() == id) {
        return true;
      }
      if (self(self)) {
        return true;
      }
      stack.pop_back();
      products.pop_back();
    }
    return false;
  };
  if (dfs(dfs)) {
    std::vector<Letter> letters;
    for (int l : stack) {
      letters.push_back({l / 2 + 1, (l % 2) ? -1 : 1});
    }
    result.none_found = false;
    result.relation = Word(2, letters);
  }
  return result;
}

bool no_short_relation(IntMatrix const& m1, IntMatrix const& m2, int max_length) {
  return search_short_relation(m1, m2, max_length).none_found;
}

}  // namespace autfn
