#pragma once

#include "stratsys/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace stratsys {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transposed() const;
  bool is_zero() const;
  bool is_invertible() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block matrix [[a, b], [c, d]]; shapes must be compatible.
RationalMatrix block(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                     const RationalMatrix& d);

struct EchelonForm {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot of each row is the first nonzero
/// entry in column order.
EchelonForm reduced_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space, one vector per free column in increasing
/// column order (free variable set to 1, the other free variables to 0).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// One exact solution of m x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// Exact X with a * X = b (a of full column rank on the relevant columns),
/// or nullopt when some column of b is outside the column space of a.
std::optional<RationalMatrix> solve_matrix(const RationalMatrix& a, const RationalMatrix& b);

/// Indices of a maximal linearly independent subset of the columns of m,
/// chosen greedily left to right.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

}  // namespace stratsys
