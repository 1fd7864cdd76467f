#ifndef MOPKIT_POLYNOMIAL_HPP
#define MOPKIT_POLYNOMIAL_HPP

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "mopkit/errors.hpp"
#include "mopkit/scalar.hpp"

namespace mopkit {

// Dense univariate polynomial, coefficients in ascending degree.
template <Field S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const S& value) { return Polynomial(std::vector<S>{value}); }
  static Polynomial monomial(int degree, const S& coefficient = S(1)) {
    std::vector<S> c(static_cast<std::size_t>(degree) + 1, S(0));
    c.back() = coefficient;
    return Polynomial(std::move(c));
  }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<S>& coefficients() const noexcept { return c_; }

  S coefficient(int k) const {
    if (k < 0 || k > degree()) return S(0);
    return c_[static_cast<std::size_t>(k)];
  }
  S leading() const { return is_zero() ? S(0) : c_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }

  std::vector<S> c_;
};

template <Field S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& p) {
  os << '(';
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << (i ? ", " : "") << to_string(p.coefficients()[i]);
  return os << ')';
}

// Interpolating polynomial through (xs[i], ys[i]) by Newton divided differences.
template <Field S>
Polynomial<S> interpolate(const std::vector<S>& xs, const std::vector<S>& ys) {
  if (xs.size() != ys.size()) raise(ErrorKind::Shape, "interpolation data of unequal length");
  const std::size_t n = xs.size();
  std::vector<S> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const S gap = xs[i] - xs[i - level];
      if (gap == S(0)) raise(ErrorKind::DuplicatePoint, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
      if (i == level) break;
    }
  }
  Polynomial<S> result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * Polynomial<S>(std::vector<S>{-xs[i], S(1)}) + Polynomial<S>::constant(dd[i]);
  }
  return result;
}

}  // namespace mopkit

#endif  // MOPKIT_POLYNOMIAL_HPP
