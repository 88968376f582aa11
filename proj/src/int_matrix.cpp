#include "autfn/int_matrix.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

#include "autfn/error.hpp"

namespace autfn {

namespace {

long checked_mul(long a, long b) {
  long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer matrix entry overflow");
  }
  return out;
}

long checked_add(long a, long b) {
  long out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer matrix entry overflow");
  }
  return out;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw PreconditionError("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::upper(long k) { return {{1, k}, {0, 1}}; }
IntMatrix IntMatrix::lower(long k) { return {{1, 0}, {k, 1}}; }

std::vector<long> IntMatrix::column(std::size_t c) const {
  std::vector<long> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

void IntMatrix::set_column(std::size_t c, std::vector<long> const& v) {
  if (v.size() != rows_) {
    throw PreconditionError("column length mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, c) = v[r];
  }
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out[r][c] = (*this)(r, c);
    }
  }
  return out;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw PreconditionError("dimension mismatch in matrix product");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError("dimension mismatch in matrix sum");
  }
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = checked_add(a(i, j), b(i, j));
    }
  }
  return out;
}

std::vector<long> operator*(IntMatrix const& a, std::vector<long> const& v) {
  if (a.cols() != v.size()) {
    throw PreconditionError("dimension mismatch in matrix-vector product");
  }
  std::vector<long> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
    }
  }
  return out;
}

IntMatrix pow(IntMatrix const& m, unsigned long k) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("power of a non-square matrix");
  }
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1UL) {
      result = result * base;
    }
    k >>= 1;
    if (k > 0) {
      base = base * base;
    }
  }
  return result;
}

long det(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("determinant of a non-square matrix");
  }
  std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m(i, j);
    }
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1] * sign;
  if (d > __int128(LONG_MAX) || d < __int128(LONG_MIN)) {
    throw std::overflow_error("determinant overflow");
  }
  return static_cast<long>(d);
}

IntMatrix inverse_gl2(IntMatrix const& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw PreconditionError("inverse_gl2 needs a 2x2 matrix");
  }
  long d = det(m);
  if (d != 1 && d != -1) {
    throw PreconditionError("matrix is not invertible over the integers (det = "
                            + std::to_string(d) + ")");
  }
  // d^-1 = d for d = +-1.
  return {{d * m(1, 1), -d * m(0, 1)}, {-d * m(1, 0), d * m(0, 0)}};
}

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace autfn
