#include "stratsys/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace stratsys {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<RationalVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!stratsys::is_zero(x)) return false;
  return true;
}

bool RationalMatrix::is_invertible() const {
  return rows_ == cols_ && rank(*this) == rows_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (is_zero(y)) continue;
        t = x * y;
        p(i, j) += t;
      }
    }
  return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!is_zero(a(i, k)) && !is_zero(x[k])) y[i] += a(i, k) * x[k];
  return y;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sum shape mismatch");
  RationalMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] += b.data_[k];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("difference shape mismatch");
  RationalMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] -= b.data_[k];
  return s;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix block(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                     const RationalMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw std::invalid_argument("block shape mismatch");
  RationalMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&m](const RationalMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t col = 0; col < src.cols(); ++col) m(r0 + r, c0 + col) = src(r, col);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

// Row reduction touching only the nonzero entries of the pivot row; the
// systems built from quiver representations are very sparse.
EchelonForm reduced_echelon(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> support;
  Rational factor, t;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (!is_zero(m(r, c))) {
        found = r;
        break;
      }
    if (found == rows) continue;
    if (found != pivot_row)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(found, k), m(pivot_row, k));

    Rational inv = 1 / m(pivot_row, c);
    support.clear();
    for (std::size_t k = c; k < cols; ++k)
      if (!is_zero(m(pivot_row, k))) {
        m(pivot_row, k) *= inv;
        support.push_back(k);
      }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || is_zero(m(r, c))) continue;
      factor = m(r, c);
      for (std::size_t k : support) {
        t = factor * m(pivot_row, k);
        m(r, k) -= t;
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return reduced_echelon(m).pivots.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RationalVector> basis;
  if (cols == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t f = 0; f < cols; ++f) {
      RationalVector v(cols);
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  EchelonForm e = reduced_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  RationalMatrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  EchelonForm e = reduced_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols);
  return x;
}

std::optional<RationalMatrix> solve_matrix(const RationalMatrix& a, const RationalMatrix& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: row count mismatch");
  const std::size_t n = a.cols();
  RationalMatrix x(n, b.cols());
  if (b.cols() == 0) return x;
  if (a.rows() == 0) return x;
  RationalMatrix aug(a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  EchelonForm e = reduced_echelon(std::move(aug));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
  }
  return x;
}

std::vector<std::size_t> independent_columns(const RationalMatrix& m) {
  if (m.empty()) return {};
  return reduced_echelon(m).pivots;
}

}  // namespace stratsys
