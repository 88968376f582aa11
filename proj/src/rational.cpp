#include "autfn/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "autfn/error.hpp"

namespace autfn {

std::string to_string(Rational const& r) {
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError("empty number", 0);
  }
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') {
    s.erase(0, 1);
  }
  auto dot_pos = s.find('.');
  try {
    if (dot_pos != std::string::npos) {
      std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
      std::size_t frac = s.size() - dot_pos - 1;
      if (digits.empty() || digits == "-") {
        throw ParseError("malformed decimal '" + s + "'", first);
      }
      for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
          throw ParseError("malformed decimal '" + s + "'", first);
        }
      }
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      Rational r(Integer(digits, 10), den);
      r.canonicalize();
      return r;
    }
    Rational r(s, 10);
    if (r.get_den() == 0) {
      throw ParseError("zero denominator in '" + s + "'", first);
    }
    r.canonicalize();
    return r;
  } catch (std::invalid_argument const&) {
    throw ParseError("malformed number '" + s + "'", first);
  }
}

std::string to_decimal(Rational const& r, int digits) {
  if (digits < 0) {
    throw PreconditionError("decimal precision must be non-negative");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(r.get_num()) * scale * 2 + r.get_den();
  Integer den = r.get_den() * 2;
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = sgn(r) < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

Rational dot(QVector const& a, QVector const& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("dimension mismatch in dot product");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

QVector operator+(QVector const& a, QVector const& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("dimension mismatch in vector sum");
  }
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

QVector operator-(QVector const& a, QVector const& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("dimension mismatch in vector difference");
  }
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

QVector operator-(QVector const& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = -a[i];
  }
  return out;
}

QVector operator*(Rational const& s, QVector const& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = s * a[i];
  }
  return out;
}

bool is_zero(QVector const& a) {
  for (auto const& x : a) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

QVector mat_vec(QMatrix const& m, QVector const& v) {
  QVector out;
  out.reserve(m.size());
  for (auto const& row : m) {
    out.push_back(dot(row, v));
  }
  return out;
}

QMatrix mat_mul(QMatrix const& a, QMatrix const& b) {
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  QMatrix out(a.size(), QVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) {
      throw PreconditionError("dimension mismatch in matrix product");
    }
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
  }
  return m;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) {
    return pivots;
  }
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[r], m[p]);
    Rational lead = m[r][c];
    for (auto& x : m[r]) {
      x /= lead;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(QMatrix m) {
  return rref(m).size();
}

std::vector<QVector> kernel(QMatrix const& m) {
  if (m.empty()) {
    return {};
  }
  std::size_t cols = m[0].size();
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) {
    is_pivot[c] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(QMatrix const& m, QVector const& b) {
  if (m.size() != b.size()) {
    throw PreconditionError("dimension mismatch in linear solve");
  }
  if (m.empty()) {
    return QVector{};
  }
  std::size_t cols = m[0].size();
  QMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].push_back(b[i]);
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) {
    return std::nullopt;
  }
  QVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

Rational determinant(QMatrix m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) {
      throw PreconditionError("determinant of a non-square matrix");
    }
    std::size_t p = c;
    while (p < n && m[p][c] == 0) {
      ++p;
    }
    if (p == n) {
      return 0;
    }
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) {
        m[i][j] -= f * m[c][j];
      }
    }
  }
  return det;
}

}  // namespace autfn
