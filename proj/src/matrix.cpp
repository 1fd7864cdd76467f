#include "mopkit/matrix.hpp"

#include <cmath>

namespace mopkit {

Rational det(const FieldMatrix<Rational>& m) {
  if (!m.square()) raise(ErrorKind::Shape, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row; det(M) = det(A) / prod(scale).
  std::vector<Integer> a(n * n);
  Integer scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (std::size_t j = 0; j < n; ++j) row_lcm = lcm(row_lcm, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = m(i, j);
      a[i * n + j] = numerator(v) * (row_lcm / denominator(v));
    }
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Rational d(a[n * n - 1], scale);
  return sign > 0 ? d : Rational(-d);
}

Complex det(const FieldMatrix<Complex>& m) {
  if (!m.square()) raise(ErrorKind::Shape, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix<Complex> a = m;
  Complex d(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == Complex(0.0)) return Complex(0.0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

namespace {

double max_modulus(const FieldMatrix<Complex>& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s = std::max(s, std::abs(v));
  return s;
}

// Gauss-Jordan on [A | B]. Pivot rule differs per field.
template <Field S>
FieldMatrix<S> eliminate(const FieldMatrix<S>& a_in, const FieldMatrix<S>& b_in, double tol) {
  if (!a_in.square()) raise(ErrorKind::Shape, "solve with a non-square system matrix");
  if (a_in.rows() != b_in.rows()) raise(ErrorKind::Shape, "solve with mismatched right-hand side");
  const std::size_t n = a_in.rows();
  const std::size_t m = b_in.cols();
  FieldMatrix<S> a = a_in;
  FieldMatrix<S> b = b_in;
  double threshold = 0.0;
  if constexpr (!is_exact_v<S>) threshold = tol * max_modulus(a_in);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    if constexpr (is_exact_v<S>) {
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) raise(ErrorKind::SingularMatrix, "exactly singular system matrix");
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
      if (std::abs(a(piv, k)) <= threshold || a(piv, k) == Complex(0.0))
        raise(ErrorKind::SingularMatrix, "numerically singular system matrix");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
    }
    const S inv = S(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == S(0)) continue;
      const S f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
    }
  }
  // back substitution
  FieldMatrix<S> x(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      S acc = b(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= a(ii, j) * x(j, c);
      x(ii, c) = acc / a(ii, ii);
    }
  }
  return x;
}

template <Field S>
LUFactors<S> factor(const FieldMatrix<S>& m, double tol) {
  if (!m.square()) raise(ErrorKind::Shape, "LU of a non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix<S> u = m;
  FieldMatrix<S> l = FieldMatrix<S>::identity(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  double threshold = 0.0;
  if constexpr (!is_exact_v<S>) threshold = tol * max_modulus(m);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    if constexpr (is_exact_v<S>) {
      while (piv < n && u(piv, k) == 0) ++piv;
      if (piv == n) raise(ErrorKind::SingularMatrix, "exactly singular matrix in LU");
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
      if (std::abs(u(piv, k)) <= threshold || u(piv, k) == Complex(0.0))
        raise(ErrorKind::SingularMatrix, "numerically singular matrix in LU");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(u(k, j), u(piv, j));
      for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(piv, j));
      std::swap(perm[k], perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const S f = u(i, k) / u(k, k);
      l(i, k) = f;
      for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
    }
  }
  return {std::move(perm), std::move(l), std::move(u)};
}

}  // namespace

FieldMatrix<Rational> solve(const FieldMatrix<Rational>& a, const FieldMatrix<Rational>& b, double tol) {
  return eliminate(a, b, tol);
}
FieldMatrix<Complex> solve(const FieldMatrix<Complex>& a, const FieldMatrix<Complex>& b, double tol) {
  return eliminate(a, b, tol);
}

LUFactors<Rational> lu_factor(const FieldMatrix<Rational>& m, double tol) { return factor(m, tol); }
LUFactors<Complex> lu_factor(const FieldMatrix<Complex>& m, double tol) { return factor(m, tol); }

}  // namespace mopkit
