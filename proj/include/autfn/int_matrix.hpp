#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace autfn {

// Small dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Elementary 2x2 matrices [[1, k], [0, 1]] and [[1, 0], [k, 1]].
  static IntMatrix upper(long k);
  static IntMatrix lower(long k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<long> column(std::size_t c) const;
  void set_column(std::size_t c, std::vector<long> const& v);
  std::vector<std::vector<long>> to_rows() const;

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
std::vector<long> operator*(IntMatrix const& a, std::vector<long> const& v);
IntMatrix pow(IntMatrix const& m, unsigned long k);
// Exact (Bareiss) determinant of a square matrix.
long det(IntMatrix const& m);
// Inverse of a 2x2 matrix with determinant +-1.
IntMatrix inverse_gl2(IntMatrix const& m);

std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

}  // namespace autfn
