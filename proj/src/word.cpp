#include "autfn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "autfn/error.hpp"

namespace autfn {

namespace {

void check_letter(int rank, Letter l) {
  if (l.index < 1 || l.index > rank) {
    throw PreconditionError("generator index " + std::to_string(l.index)
                            + " outside 1.." + std::to_string(rank));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw PreconditionError("letter sign must be +1 or -1");
  }
}

void check_rank(int rank) {
  if (rank < 1) {
    throw PreconditionError("free group rank must be positive");
  }
}

void same_rank(Word const& u, Word const& v) {
  if (u.rank() != v.rank()) {
    throw PreconditionError("rank mismatch: F_" + std::to_string(u.rank())
                            + " vs F_" + std::to_string(v.rank()));
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<Letter const> raw) : Word(reduce(rank, raw)) {}

Word::Word(int rank, std::initializer_list<Letter> raw)
    : Word(reduce(rank, std::span<Letter const>(raw.begin(), raw.size()))) {}

Word Word::generator(int rank, int index, int sign) {
  Letter l{index, sign};
  return Word(rank, std::span<Letter const>(&l, 1));
}

Word Word::power_of(int rank, int index, long k) {
  check_rank(rank);
  check_letter(rank, {index, 1});
  Word w(rank);
  w.letters_.assign(static_cast<std::size_t>(std::labs(k)), Letter{index, k < 0 ? -1 : 1});
  return w;
}

void WordBuilder::push(Letter l) {
  if (!stack_.empty() && stack_.back().cancels(l)) {
    stack_.pop_back();
  } else {
    stack_.push_back(l);
  }
}

void WordBuilder::append(Word const& w) {
  if (w.rank() != rank_) {
    throw PreconditionError("rank mismatch while concatenating words");
  }
  auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size() && !stack_.empty() && stack_.back().cancels(letters[i])) {
    stack_.pop_back();
    ++i;
  }
  stack_.insert(stack_.end(), letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end());
}

void WordBuilder::append_inverse(Word const& w) {
  if (w.rank() != rank_) {
    throw PreconditionError("rank mismatch while concatenating words");
  }
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    push(it->inverse());
  }
}

Word WordBuilder::build() && {
  Word w(rank_);
  w.letters_ = std::move(stack_);
  return w;
}

Word reduce(int rank, std::span<Letter const> raw) {
  check_rank(rank);
  WordBuilder b(rank);
  b.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(rank, l);
    b.push(l);
  }
  return std::move(b).build();
}

Word mul(Word const& u, Word const& v) {
  same_rank(u, v);
  WordBuilder b(u.rank());
  b.reserve(u.length() + v.length());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word inv(Word const& w) {
  WordBuilder b(w.rank());
  b.reserve(w.length());
  b.append_inverse(w);
  return std::move(b).build();
}

Word conj(Word const& w, Word const& g) {
  same_rank(w, g);
  WordBuilder b(w.rank());
  b.append(g);
  b.append(w);
  b.append_inverse(g);
  return std::move(b).build();
}

Word pow(Word const& w, long k) {
  WordBuilder b(w.rank());
  for (long i = 0; i < std::labs(k); ++i) {
    if (k > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

Word commutator(Word const& u, Word const& v) {
  same_rank(u, v);
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  b.append_inverse(v);
  return std::move(b).build();
}

std::vector<long> ab_vector(Word const& w) {
  std::vector<long> v(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) {
    v[static_cast<std::size_t>(l.index - 1)] += l.sign;
  }
  return v;
}

Word embed(Word const& w, int new_rank) {
  return shift(w, 0, new_rank);
}

Word shift(Word const& w, int offset, int new_rank) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (auto& l : letters) {
    l.index += offset;
  }
  // Renaming generators never creates cancellation, but reduce() also
  // validates the new indices.
  return reduce(new_rank, letters);
}

int max_index(Word const& w) {
  int m = 0;
  for (Letter l : w.letters()) {
    m = std::max(m, l.index);
  }
  return m;
}

std::pair<Word, Word> cyclic_decomposition(Word const& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  Word u(w.rank(), letters.subspan(0, lo));
  Word c(w.rank(), letters.subspan(lo, hi - lo));
  return {std::move(u), std::move(c)};
}

std::string format(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream os;
  auto letters = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    long exponent = static_cast<long>(j - i) * letters[i].sign;
    if (!first) {
      os << ' ';
    }
    first = false;
    os << 'a' << letters[i].index;
    if (exponent != 1) {
      os << '^' << exponent;
    }
    i = j;
  }
  return os.str();
}

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto read_number = [&](long& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ParseError("expected digits", start);
    }
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, out);
    if (ec != std::errc()) {
      throw ParseError("number out of range", start);
    }
  };

  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") {
    return Word(rank);
  }
  while (true) {
    skip_space();
    if (pos == text.size()) {
      break;
    }
    std::size_t token_start = pos;
    char c = text[pos];
    if (c != 'a' && c != 'A') {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    int sign = (c == 'a') ? 1 : -1;
    ++pos;
    long index = 0;
    read_number(index);
    if (index < 1 || index > rank) {
      throw ParseError("generator a" + std::to_string(index) + " outside rank "
                           + std::to_string(rank),
                       token_start);
    }
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      read_number(exponent);
      if (negative) {
        exponent = -exponent;
      }
    }
    Letter l{static_cast<int>(index), exponent < 0 ? -sign : sign};
    raw.insert(raw.end(), static_cast<std::size_t>(std::labs(exponent)), l);
  }
  return reduce(rank, raw);
}

std::ostream& operator<<(std::ostream& os, Word const& w) {
  return os << format(w);
}

}  // namespace autfn
