#pragma once

// Reduced words in a free group F_n on generators a1..an.

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autfn {

struct Letter {
  int index = 1;  // generator index, 1-based
  int sign = 1;   // +1 or -1

  Letter inverse() const noexcept { return {index, -sign}; }
  bool cancels(Letter other) const noexcept {
    return index == other.index && sign == -other.sign;
  }
  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

inline Letter gen(int index, int sign = 1) { return {index, sign}; }

// A freely reduced word of fixed rank. Immutable once built; every
// constructor reduces its input.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  Word(int rank, std::span<Letter const> raw);
  Word(int rank, std::initializer_list<Letter> raw);

  // The generator a_i (or its inverse) as a one-letter word.
  static Word generator(int rank, int index, int sign = 1);
  // a_i^k
  static Word power_of(int rank, int index, long k);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<Letter const> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(Word const&, Word const&) = default;
  // Shortlex-free lexicographic order; only used for canonical containers.
  friend auto operator<=>(Word const& a, Word const& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend class WordBuilder;
  int rank_ = 1;
  std::vector<Letter> letters_;
};

// Accumulates letters with cancellation at the seam, so that the result is
// always reduced. Used by every operation that concatenates words.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}

  void push(Letter l);
  void append(Word const& w);
  void append_inverse(Word const& w);
  void reserve(std::size_t n) { stack_.reserve(n); }
  Word build() &&;

 private:
  int rank_;
  std::vector<Letter> stack_;
};

// Free reduction by a single stack pass. Throws PreconditionError on an
// index outside 1..rank or a sign other than +-1.
Word reduce(int rank, std::span<Letter const> raw);

Word mul(Word const& u, Word const& v);
Word inv(Word const& w);
// g w g^-1
Word conj(Word const& w, Word const& g);
Word pow(Word const& w, long k);
// [u, v] = u v u^-1 v^-1
Word commutator(Word const& u, Word const& v);

// Exponent sum of each generator.
std::vector<long> ab_vector(Word const& w);

// View w in F_{new_rank} via the inclusion a_i -> a_i. new_rank >= rank.
Word embed(Word const& w, int new_rank);
// Rename generators through a_i -> a_{i + offset} inside F_{new_rank}.
Word shift(Word const& w, int offset, int new_rank);

// Largest generator index occurring in w (0 for the empty word).
int max_index(Word const& w);

// Writes w = u c u^-1 with c cyclically reduced; returns {u, c}.
std::pair<Word, Word> cyclic_decomposition(Word const& w);

// Text form: "a1 a2^-1 a3^2"; the empty word is "1".
std::string format(Word const& w);
// Accepts tokens a<k>, a<k>^<e>, a<k>^-<e>, and A<k> (= a<k>^-1, also
// with an exponent). "1" or "" parse to the empty word.
Word parse_word(std::string_view text, int rank);

std::ostream& operator<<(std::ostream& os, Word const& w);

}  // namespace autfn
