#include "autfn/aut.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "autfn/error.hpp"

namespace autfn {

namespace {

void check_index(int rank, int i) {
  if (i < 1 || i > rank) {
    throw PreconditionError("generator index " + std::to_string(i) + " outside 1.."
                            + std::to_string(rank));
  }
}

ElemAut make_pair_gen(ElemKind kind, int rank, int i, int j) {
  check_index(rank, i);
  check_index(rank, j);
  if (i == j) {
    throw PreconditionError("elementary automorphism needs distinct indices");
  }
  return {kind, i, j, rank};
}

void same_rank(int a, int b) {
  if (a != b) {
    throw PreconditionError("rank mismatch: Aut(F_" + std::to_string(a) + ") vs Aut(F_"
                            + std::to_string(b) + ")");
  }
}

char kind_letter(ElemKind k) {
  switch (k) {
    case ElemKind::NielsenLeft: return 'L';
    case ElemKind::NielsenRight: return 'R';
    case ElemKind::Inversion: return 'E';
    case ElemKind::Transposition: return 'P';
  }
  return '?';
}

}  // namespace

ElemAut ElemAut::left(int rank, int i, int j) {
  return make_pair_gen(ElemKind::NielsenLeft, rank, i, j);
}

ElemAut ElemAut::right(int rank, int i, int j) {
  return make_pair_gen(ElemKind::NielsenRight, rank, i, j);
}

ElemAut ElemAut::inversion(int rank, int i) {
  check_index(rank, i);
  return {ElemKind::Inversion, i, 0, rank};
}

ElemAut ElemAut::transposition(int rank, int i, int j) {
  return make_pair_gen(ElemKind::Transposition, rank, i, j);
}

AutExpr::AutExpr(int rank) : rank_(rank) {
  if (rank < 1) {
    throw PreconditionError("free group rank must be positive");
  }
}

AutExpr::AutExpr(int rank, std::vector<Factor> factors) : AutExpr(rank) {
  factors_.reserve(factors.size());
  for (auto& f : factors) {
    same_rank(rank, f.gen.rank);
    if (f.exponent != 0) {
      factors_.push_back(f);
    }
  }
}

AutExpr AutExpr::of(ElemAut g, long exponent) {
  return AutExpr(g.rank, {Factor{g, exponent}});
}

AutExpr AutExpr::left(int rank, int i, int j, long exponent) {
  return of(ElemAut::left(rank, i, j), exponent);
}

AutExpr AutExpr::right(int rank, int i, int j, long exponent) {
  return of(ElemAut::right(rank, i, j), exponent);
}

AutExpr AutExpr::inversion(int rank, int i, long exponent) {
  return of(ElemAut::inversion(rank, i), exponent);
}

AutExpr AutExpr::transposition(int rank, int i, int j, long exponent) {
  return of(ElemAut::transposition(rank, i, j), exponent);
}

AutExpr AutExpr::inverse() const {
  AutExpr out(rank_);
  out.factors_.assign(factors_.rbegin(), factors_.rend());
  for (auto& f : out.factors_) {
    f.exponent = -f.exponent;
  }
  return out;
}

AutExpr AutExpr::pow(long k) const {
  AutExpr base = k < 0 ? inverse() : *this;
  AutExpr out(rank_);
  for (long i = 0; i < std::labs(k); ++i) {
    out.factors_.insert(out.factors_.end(), base.factors_.begin(), base.factors_.end());
  }
  return out;
}

AutExpr operator*(AutExpr const& a, AutExpr const& b) {
  same_rank(a.rank_, b.rank_);
  AutExpr out = a;
  out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  return out;
}

AutExpr commutator(AutExpr const& a, AutExpr const& b) {
  return a * b * a.inverse() * b.inverse();
}

std::string format(AutExpr const& x) {
  if (x.factors().empty()) {
    return "1";
  }
  std::ostringstream os;
  bool first = true;
  for (auto const& f : x.factors()) {
    if (!first) {
      os << ' ';
    }
    first = false;
    os << kind_letter(f.gen.kind);
    if (f.gen.kind == ElemKind::Inversion) {
      os << f.gen.i;
    } else if (f.gen.i < 10 && f.gen.j < 10) {
      os << f.gen.i << f.gen.j;
    } else {
      os << f.gen.i << ',' << f.gen.j;
    }
    if (f.exponent != 1) {
      os << '^' << f.exponent;
    }
  }
  return os.str();
}

AutExpr parse_aut(std::string_view text, int rank) {
  AutExpr result(rank);
  std::vector<Factor> factors;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto read_digits = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ParseError("expected digits", start);
    }
    return text.substr(start, pos - start);
  };
  auto to_long = [](std::string_view digits, std::size_t at) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc()) {
      throw ParseError("number out of range", at);
    }
    return v;
  };

  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos || text.substr(first, last - first + 1) == "1") {
    return result;
  }
  while (true) {
    skip_space();
    if (pos == text.size()) {
      break;
    }
    std::size_t token_start = pos;
    char c = text[pos++];
    ElemKind kind;
    switch (c) {
      case 'L': kind = ElemKind::NielsenLeft; break;
      case 'R': kind = ElemKind::NielsenRight; break;
      case 'E': kind = ElemKind::Inversion; break;
      case 'P': kind = ElemKind::Transposition; break;
      default:
        throw ParseError(std::string("unknown generator '") + c + "'", token_start);
    }
    std::size_t digits_at = pos;
    std::string_view d1 = read_digits();
    long i = 0;
    long j = 0;
    if (kind == ElemKind::Inversion) {
      i = to_long(d1, digits_at);
    } else if (pos < text.size() && text[pos] == ',') {
      ++pos;
      i = to_long(d1, digits_at);
      std::size_t at = pos;
      j = to_long(read_digits(), at);
    } else if (d1.size() == 2) {
      i = d1[0] - '0';
      j = d1[1] - '0';
    } else {
      throw ParseError("expected two indices, e.g. L21 or L10,2", digits_at);
    }
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) {
        ++pos;
      }
      std::size_t at = pos;
      exponent = to_long(read_digits(), at);
      if (negative) {
        exponent = -exponent;
      }
    }
    try {
      ElemAut g = kind == ElemKind::Inversion
                      ? ElemAut::inversion(rank, static_cast<int>(i))
                      : make_pair_gen(kind, rank, static_cast<int>(i), static_cast<int>(j));
      factors.push_back({g, exponent});
    } catch (PreconditionError const& e) {
      throw ParseError(e.what(), token_start);
    }
  }
  return AutExpr(rank, std::move(factors));
}

Endo::Endo(std::vector<Word> images) : rank_(static_cast<int>(images.size())), images_(std::move(images)) {
  if (rank_ < 1) {
    throw PreconditionError("endomorphism needs at least one generator image");
  }
  for (auto const& w : images_) {
    same_rank(rank_, w.rank());
  }
}

Endo Endo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    images.push_back(Word::generator(rank, i));
  }
  return Endo(std::move(images));
}

Endo endo_of(ElemAut const& g, long exponent) {
  int n = g.rank;
  std::vector<Word> images;
  for (int k = 1; k <= n; ++k) {
    images.push_back(Word::generator(n, k));
  }
  auto& target = images[static_cast<std::size_t>(g.i - 1)];
  switch (g.kind) {
    case ElemKind::NielsenLeft:
      target = mul(Word::power_of(n, g.j, exponent), target);
      break;
    case ElemKind::NielsenRight:
      target = mul(target, Word::power_of(n, g.j, exponent));
      break;
    case ElemKind::Inversion:
      if (exponent % 2 != 0) {
        target = inv(target);
      }
      break;
    case ElemKind::Transposition:
      if (exponent % 2 != 0) {
        std::swap(images[static_cast<std::size_t>(g.i - 1)],
                  images[static_cast<std::size_t>(g.j - 1)]);
      }
      break;
  }
  return Endo(std::move(images));
}

Endo endo_of(AutExpr const& x) {
  Endo result = Endo::identity(x.rank());
  for (auto const& f : x.factors()) {
    result = compose(result, endo_of(f.gen, f.exponent));
  }
  return result;
}

Word apply(Endo const& e, Word const& w) {
  same_rank(e.rank(), w.rank());
  WordBuilder b(e.rank());
  for (Letter l : w.letters()) {
    if (l.sign > 0) {
      b.append(e.image(l.index));
    } else {
      b.append_inverse(e.image(l.index));
    }
  }
  return std::move(b).build();
}

Endo compose(Endo const& f, Endo const& g) {
  same_rank(f.rank(), g.rank());
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (auto const& w : g.images()) {
    images.push_back(apply(f, w));
  }
  return Endo(std::move(images));
}

bool equal(Endo const& f, Endo const& g) {
  same_rank(f.rank(), g.rank());
  return f == g;
}

Endo inner(Word const& g) {
  std::vector<Word> images;
  for (int i = 1; i <= g.rank(); ++i) {
    images.push_back(conj(Word::generator(g.rank(), i), g));
  }
  return Endo(std::move(images));
}

AutExpr inner_expr(Word const& g) {
  int n = g.rank();
  AutExpr out(n);
  for (Letter l : g.letters()) {
    AutExpr ad(n);
    for (int j = 1; j <= n; ++j) {
      if (j != l.index) {
        ad = ad * AutExpr::left(n, j, l.index) * AutExpr::right(n, j, l.index, -1);
      }
    }
    out = out * (l.sign > 0 ? ad : ad.inverse());
  }
  return out;
}

std::optional<Word> is_inner(Endo const& e) {
  int n = e.rank();
  Word a1 = Word::generator(n, 1);
  if (n == 1) {
    return e.image(1) == a1 ? std::optional<Word>(Word(1)) : std::nullopt;
  }
  // e(a1) = g a1 g^-1 forces g = u a1^k where e(a1) = u a1 u^-1 is the
  // cyclic decomposition.
  auto [u, core] = cyclic_decomposition(e.image(1));
  if (core != a1) {
    return std::nullopt;
  }
  // u^-1 e(a2) u must be a1^k a2 a1^-k; k is the leading a1-power.
  Word x = mul(mul(inv(u), e.image(2)), u);
  long k = 0;
  for (Letter l : x.letters()) {
    if (l.index != 1) {
      break;
    }
    k += l.sign;
  }
  Word g = mul(u, Word::power_of(n, 1, k));
  if (inner(g) != e) {
    return std::nullopt;
  }
  return g;
}

AutExpr right_multiplier(int rank, int target, Word const& w) {
  if (w.rank() != rank) {
    throw PreconditionError("right_multiplier: word rank differs from automorphism rank");
  }
  check_index(rank, target);
  // R_{t,i1}^{s1} o R_{t,i2}^{s2} sends a_t to a_t a_{i1}^{s1} a_{i2}^{s2}.
  std::vector<Factor> factors;
  for (Letter l : w.letters()) {
    if (l.index == target) {
      throw PreconditionError("right_multiplier: word involves the target generator");
    }
    factors.push_back({ElemAut::right(rank, target, l.index), l.sign});
  }
  return AutExpr(rank, std::move(factors));
}

bool verify_relation(AutExpr const& lhs, AutExpr const& rhs, RelationMode mode) {
  return check_relation("", lhs, rhs, mode).holds;
}

RelationResult check_relation(std::string name, AutExpr const& lhs, AutExpr const& rhs,
                              RelationMode mode) {
  same_rank(lhs.rank(), rhs.rank());
  RelationResult r{std::move(name), lhs, rhs, mode, false, std::nullopt};
  if (mode == RelationMode::Aut) {
    r.holds = equal(endo_of(lhs), endo_of(rhs));
  } else {
    r.conjugator = is_inner(endo_of(lhs * rhs.inverse()));
    r.holds = r.conjugator.has_value();
  }
  return r;
}

bool GpqReport::all_hold() const {
  for (auto const& r : relations) {
    if (!r.holds) {
      return false;
    }
  }
  return !relations.empty();
}

GpqReport gpq_check(int n, long p, long q, Word const& w) {
  if (n < 3) {
    throw PreconditionError("gpq_check needs n >= 3 so that the free factor has rank >= 1");
  }
  if (p == 0 || q == 0) {
    throw PreconditionError("gpq_check needs nonzero p and q");
  }
  if (max_index(w) > n - 2) {
    throw PreconditionError("w must lie in <a1..a" + std::to_string(n - 2)
                            + ">; it touches a" + std::to_string(max_index(w)));
  }
  // a_k (k = 0..n) is stored as generator k + 1 of F_{n+1}.
  int const rank = n + 1;
  auto stored = [](int k) { return k + 1; };
  Word ws = shift(w, 1, rank);

  AutExpr alpha = right_multiplier(rank, stored(0), ws);
  AutExpr beta = AutExpr::right(rank, stored(0), stored(n - 1));
  AutExpr gamma = AutExpr::right(rank, stored(0), stored(n));
  AutExpr t = right_multiplier(rank, stored(n - 1), pow(ws, p))
              * right_multiplier(rank, stored(n), pow(ws, q));

  GpqReport report{n, p, q, w, {}};
  AutExpr id(rank);
  report.relations.push_back(check_relation("[t, alpha] = 1", commutator(t, alpha), id));
  report.relations.push_back(
      check_relation("t beta t^-1 = beta alpha^p", t * beta * t.inverse(), beta * alpha.pow(p)));
  report.relations.push_back(check_relation("t gamma t^-1 = gamma alpha^q",
                                            t * gamma * t.inverse(), gamma * alpha.pow(q)));
  return report;
}

GpqReport inner_gpq_check(long p, long q) {
  if (p == 0 || q == 0) {
    throw PreconditionError("inner_gpq_check needs nonzero p and q");
  }
  int const rank = 3;
  AutExpr alpha = inner_expr(Word::generator(rank, 1));
  AutExpr beta = inner_expr(Word::generator(rank, 2));
  AutExpr gamma = inner_expr(Word::generator(rank, 3));
  AutExpr tau = AutExpr::right(rank, 2, 1, p) * AutExpr::right(rank, 3, 1, q);

  GpqReport report{3, p, q, Word(rank), {}};
  AutExpr id(rank);
  report.relations.push_back(check_relation("[t, alpha] = 1", commutator(tau, alpha), id));
  report.relations.push_back(check_relation("t beta t^-1 = beta alpha^p",
                                            tau * beta * tau.inverse(), beta * alpha.pow(p)));
  report.relations.push_back(check_relation("t gamma t^-1 = gamma alpha^q",
                                            tau * gamma * tau.inverse(), gamma * alpha.pow(q)));
  return report;
}

bool NielsenZ4Report::all_hold() const {
  for (auto const& r : commutations) {
    if (!r.holds) {
      return false;
    }
  }
  return sign() != 0 && trivial_in_out;
}

NielsenZ4Report nielsen_z4_check() {
  int const rank = 3;
  std::vector<std::pair<std::string, AutExpr>> gens = {
      {"L21", AutExpr::left(rank, 2, 1)},
      {"R21", AutExpr::right(rank, 2, 1)},
      {"L31", AutExpr::left(rank, 3, 1)},
      {"R31", AutExpr::right(rank, 3, 1)},
  };
  NielsenZ4Report report;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto const& [na, x] = gens[a];
      auto const& [nb, y] = gens[b];
      report.commutations.push_back(check_relation(na + " " + nb + " = " + nb + " " + na,
                                                   x * y, y * x));
    }
  }
  report.product = gens[0].second.inverse() * gens[1].second * gens[2].second.inverse()
                   * gens[3].second;
  Endo product = endo_of(report.product);
  Word a1 = Word::generator(rank, 1);
  report.equals_ad_a1 = product == inner(a1);
  report.equals_ad_a1_inverse = product == inner(inv(a1));
  report.conjugator = is_inner(product);
  report.trivial_in_out = report.conjugator.has_value();
  return report;
}

std::vector<RelationResult> standard_relation_suite(bool include_out) {
  int const n = 3;
  auto L = [](int i, int j) { return AutExpr::left(n, i, j); };
  auto R = [](int i, int j) { return AutExpr::right(n, i, j); };
  auto E = [](int i) { return AutExpr::inversion(n, i); };

  std::vector<RelationResult> suite;
  suite.push_back(check_relation("[L23^-1, L31^-1] = L21^-1",
                                 commutator(L(2, 3).inverse(), L(3, 1).inverse()),
                                 L(2, 1).inverse()));
  suite.push_back(check_relation("[R23^-1, R31^-1] = R21^-1",
                                 commutator(R(2, 3).inverse(), R(3, 1).inverse()),
                                 R(2, 1).inverse()));
  suite.push_back(check_relation("L23 R21 = R21 L23", L(2, 3) * R(2, 1), R(2, 1) * L(2, 3)));
  suite.push_back(check_relation("L31 R21 = R21 L31", L(3, 1) * R(2, 1), R(2, 1) * L(3, 1)));
  suite.push_back(check_relation("R23 L21 = L21 R23", R(2, 3) * L(2, 1), L(2, 1) * R(2, 3)));
  suite.push_back(check_relation("R31 L21 = L21 R31", R(3, 1) * L(2, 1), L(2, 1) * R(3, 1)));
  suite.push_back(check_relation("E2 L21^-1 E2^-1 = R21", E(2) * L(2, 1).inverse() * E(2).inverse(),
                                 R(2, 1)));
  suite.push_back(check_relation("E2 R21 E2^-1 = L21^-1", E(2) * R(2, 1) * E(2).inverse(),
                                 L(2, 1).inverse()));
  suite.push_back(check_relation("E2 L31 E2^-1 = L31", E(2) * L(3, 1) * E(2).inverse(), L(3, 1)));
  suite.push_back(check_relation("E2 R31 E2^-1 = R31", E(2) * R(3, 1) * E(2).inverse(), R(3, 1)));
  {
    AutExpr x = L(2, 1).inverse() * R(2, 1).inverse();
    suite.push_back(check_relation("E2 (L21^-1 R21^-1) E2^-1 = (L21^-1 R21^-1)^-1",
                                   E(2) * x * E(2).inverse(), x.inverse()));
  }

  auto z4 = nielsen_z4_check();
  for (auto& c : z4.commutations) {
    suite.push_back(std::move(c));
  }
  {
    // The product equals ad_{a1}^{sign}; the sign is reported by the caller.
    Word a1 = Word::generator(n, 1);
    Word conjugator = z4.sign() >= 0 ? a1 : inv(a1);
    suite.push_back(check_relation("L21^-1 R21 L31^-1 R31 = ad(" + format(conjugator) + ")",
                                   z4.product, inner_expr(conjugator)));
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        continue;
      }
      std::string ij = std::to_string(i) + std::to_string(j);
      suite.push_back(check_relation("E" + std::to_string(i) + " L" + ij + " E" + std::to_string(i)
                                         + "^-1 = R" + ij + "^-1",
                                     E(i) * L(i, j) * E(i).inverse(), R(i, j).inverse()));
    }
  }

  // phi ad_g phi^-1 = ad_{phi(g)}
  std::vector<std::pair<AutExpr, Word>> samples = {
      {L(2, 1), parse_word("a2", n)},
      {R(3, 2) * L(1, 3).inverse(), parse_word("a1 a3^-1", n)},
      {E(2) * L(2, 3) * R(1, 2), parse_word("a2 a3 a1^2", n)},
  };
  for (auto const& [phi, g] : samples) {
    Word image = apply(endo_of(phi), g);
    suite.push_back(check_relation("(" + format(phi) + ") ad(" + format(g) + ") (" + format(phi)
                                       + ")^-1 = ad(" + format(image) + ")",
                                   phi * inner_expr(g) * phi.inverse(), inner_expr(image)));
  }

  if (include_out) {
    AutExpr id(n);
    suite.push_back(check_relation("L21^-1 R21 L31^-1 R31 = 1", z4.product, id, RelationMode::Out));
    suite.push_back(check_relation("(L21^-1 R21) = (L31^-1 R31)^-1",
                                   L(2, 1).inverse() * R(2, 1), (L(3, 1).inverse() * R(3, 1)).inverse(),
                                   RelationMode::Out));
    suite.push_back(check_relation("[L23^-1, L31^-1] = L21^-1",
                                   commutator(L(2, 3).inverse(), L(3, 1).inverse()),
                                   L(2, 1).inverse(), RelationMode::Out));
    suite.push_back(check_relation("[R23^-1, R31^-1] = R21^-1",
                                   commutator(R(2, 3).inverse(), R(3, 1).inverse()),
                                   R(2, 1).inverse(), RelationMode::Out));
    suite.push_back(check_relation("E2 L21^-1 E2^-1 = R21",
                                   E(2) * L(2, 1).inverse() * E(2).inverse(), R(2, 1),
                                   RelationMode::Out));
  }
  return suite;
}

}  // namespace autfn
