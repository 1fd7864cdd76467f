#ifndef MOPKIT_MATRIX_HPP
#define MOPKIT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "mopkit/errors.hpp"
#include "mopkit/scalar.hpp"

namespace mopkit {

// Dense row-major matrix over one of the scalar fields.
template <Field S>
class FieldMatrix {
 public:
  using value_type = S;

  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) raise(ErrorKind::Shape, "entry count does not match rows*cols");
  }
  FieldMatrix(std::initializer_list<std::initializer_list<S>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) raise(ErrorKind::Shape, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static FieldMatrix identity(std::size_t n) {
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<S>& entries() const noexcept { return data_; }

  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) raise(ErrorKind::Shape, "block out of range");
    FieldMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const FieldMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) raise(ErrorKind::Shape, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  FieldMatrix transpose() const {
    FieldMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  FieldMatrix& operator+=(const FieldMatrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  FieldMatrix& operator-=(const FieldMatrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  FieldMatrix& operator*=(const S& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
  friend FieldMatrix operator-(FieldMatrix a, const FieldMatrix& b) { return a -= b; }
  friend FieldMatrix operator*(FieldMatrix a, const S& s) { return a *= s; }
  friend FieldMatrix operator*(const S& s, FieldMatrix a) { return a *= s; }
  friend FieldMatrix operator-(FieldMatrix a) { return a *= S(-1); }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) raise(ErrorKind::Shape, "product of incompatible matrices");
    FieldMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void same_shape(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::Shape, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

// Entrywise `near`; shapes must agree.
template <Field S>
bool approx_equal(const FieldMatrix<S>& a, const FieldMatrix<S>& b, double tol = kDefaultTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!near(a.entries()[i], b.entries()[i], tol)) return false;
  return true;
}

template <Field S>
std::ostream& operator<<(std::ostream& os, const FieldMatrix<S>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << ']';
  }
  return os << ']';
}

template <Field S>
FieldMatrix<S> embed_matrix(const FieldMatrix<Rational>& m) {
  std::vector<S> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.push_back(embed<S>(v));
  return FieldMatrix<S>(m.rows(), m.cols(), std::move(e));
}

// Fraction-free Bareiss on the denominator-cleared integer matrix.
Rational det(const FieldMatrix<Rational>& m);
// Partially pivoted LU, largest-modulus pivots.
Complex det(const FieldMatrix<Complex>& m);

// X with A X = B. Throws SingularMatrix.
FieldMatrix<Rational> solve(const FieldMatrix<Rational>& a, const FieldMatrix<Rational>& b,
                            double tol = kDefaultTolerance);
FieldMatrix<Complex> solve(const FieldMatrix<Complex>& a, const FieldMatrix<Complex>& b,
                           double tol = kDefaultTolerance);

// D - C A^{-1} B for the split with leading k x k block A; A^{-1} B via solve().
// Throws SingularPivot when A is singular.
template <Field S>
FieldMatrix<S> schur_complement(const FieldMatrix<S>& m, std::size_t k, double tol = kDefaultTolerance) {
  if (k > m.rows() || k > m.cols()) raise(ErrorKind::Shape, "leading block larger than matrix");
  const std::size_t r = m.rows() - k;
  const std::size_t c = m.cols() - k;
  FieldMatrix<S> d = m.block(k, k, r, c);
  if (k == 0) return d;
  const FieldMatrix<S> a = m.block(0, 0, k, k);
  const FieldMatrix<S> b = m.block(0, k, k, c);
  const FieldMatrix<S> cm = m.block(k, 0, r, k);
  FieldMatrix<S> ainv_b;
  try {
    ainv_b = solve(a, b, tol);
  } catch (const MopError& e) {
    if (e.kind() == ErrorKind::SingularMatrix) raise(ErrorKind::SingularPivot, "leading block is singular");
    throw;
  }
  return d - cm * ainv_b;
}

// Row-permuted factorization P M = L U with unit lower L; exact path takes the
// first nonzero pivot, float path the largest modulus.
template <Field S>
struct LUFactors {
  std::vector<std::size_t> perm;  // row i of P M is row perm[i] of M
  FieldMatrix<S> lower;
  FieldMatrix<S> upper;
};

LUFactors<Rational> lu_factor(const FieldMatrix<Rational>& m, double tol = kDefaultTolerance);
LUFactors<Complex> lu_factor(const FieldMatrix<Complex>& m, double tol = kDefaultTolerance);

}  // namespace mopkit

#endif  // MOPKIT_MATRIX_HPP
