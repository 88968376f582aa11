#pragma once

// Exact rationals (GMP) and small dense linear algebra over them.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autfn {

using Rational = mpq_class;
using Integer = mpz_class;

// A dense vector / row-major matrix over Q.
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

// "p/q" or "p"; always canonical.
std::string to_string(Rational const& r);
// Accepts "p", "p/q" and finite decimals such as "-0.25".
Rational parse_rational(std::string_view text);
// Rounded (half away from zero) decimal with `digits` fractional digits.
std::string to_decimal(Rational const& r, int digits);

Rational dot(QVector const& a, QVector const& b);
QVector operator+(QVector const& a, QVector const& b);
QVector operator-(QVector const& a, QVector const& b);
QVector operator-(QVector const& a);
QVector operator*(Rational const& s, QVector const& a);
bool is_zero(QVector const& a);

QVector mat_vec(QMatrix const& m, QVector const& v);
QMatrix mat_mul(QMatrix const& a, QMatrix const& b);
QMatrix identity_matrix(std::size_t n);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank_of(QMatrix m);
// Basis of {x : m x = 0}, one vector per free column (that column set to 1).
std::vector<QVector> kernel(QMatrix const& m);
// Some x with m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(QMatrix const& m, QVector const& b);
Rational determinant(QMatrix m);

}  // namespace autfn
