#ifndef MOPKIT_MEASURES_HPP
#define MOPKIT_MEASURES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mopkit/matrix.hpp"
#include "mopkit/polynomial.hpp"

namespace mopkit {

// Finite signed measure sum_i masses[i] * delta(nodes[i]).
template <Field S>
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<S> nodes, std::vector<S> masses);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<S>& nodes() const noexcept { return nodes_; }
  const std::vector<S>& masses() const noexcept { return masses_; }

  // Index of a node equal to x (within tol on the float path), if any.
  std::optional<std::size_t> find_node(const S& x, double tol = kDefaultTolerance) const;

 private:
  std::vector<S> nodes_;
  std::vector<S> masses_;
};

// poly(x) * prod(x - roots[k]) / prod(x - poles[l]) * exp(exp_rate * x).
// The exponential factor is only evaluable on the float path.
template <Field S>
class WeightFunction {
 public:
  WeightFunction() : poly_(Polynomial<S>::constant(S(1))) {}
  explicit WeightFunction(Polynomial<S> poly, double exp_rate = 0.0)
      : poly_(std::move(poly)), exp_rate_(exp_rate) {}

  const Polynomial<S>& polynomial() const noexcept { return poly_; }
  const std::vector<S>& roots() const noexcept { return roots_; }
  const std::vector<S>& poles() const noexcept { return poles_; }
  double exp_rate() const noexcept { return exp_rate_; }

  // Throws PoleOnSupport at a pole.
  S operator()(const S& x) const;
  bool has_pole_at(const S& x, double tol = kDefaultTolerance) const;

  // Multiplies by prod(x - ys) / prod(x - zs).
  WeightFunction with_factor(const std::vector<S>& ys, const std::vector<S>& zs) const;

  friend WeightFunction operator*(const WeightFunction& a, const WeightFunction& b) {
    WeightFunction out(a.poly_ * b.poly_, a.exp_rate_ + b.exp_rate_);
    out.roots_ = a.roots_;
    out.roots_.insert(out.roots_.end(), b.roots_.begin(), b.roots_.end());
    out.poles_ = a.poles_;
    out.poles_.insert(out.poles_.end(), b.poles_.begin(), b.poles_.end());
    return out;
  }

 private:
  Polynomial<S> poly_;
  std::vector<S> roots_;
  std::vector<S> poles_;
  double exp_rate_ = 0.0;
};

// Rank-one factors W = w1 * w2^T.
template <Field S>
struct WeightSystem {
  std::vector<WeightFunction<S>> w1;  // p entries
  std::vector<WeightFunction<S>> w2;  // q entries
};

// p x q grid of weight functions, optionally carrying its rank-one factors.
template <Field S>
class WeightMatrix {
 public:
  static WeightMatrix rank_one(WeightSystem<S> factors);
  static WeightMatrix general(std::size_t p, std::size_t q, std::vector<WeightFunction<S>> entries);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  const WeightFunction<S>& entry(std::size_t k, std::size_t l) const { return entries_[k * q_ + l]; }
  bool is_rank_one() const noexcept { return factors_.has_value(); }
  // Throws RequiresRankOne for a general grid.
  const WeightSystem<S>& factors() const;

  FieldMatrix<S> evaluate(const S& x) const;
  WeightMatrix transpose() const;
  WeightMatrix with_factor(const std::vector<S>& ys, const std::vector<S>& zs) const;

 private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<WeightFunction<S>> entries_;
  std::optional<WeightSystem<S>> factors_;
};

template <Field S>
S moment(const DiscreteMeasure<S>& measure, const WeightFunction<S>& w, int j);

// Every entry times prod(x - ys)/prod(x - zs). Points shared by ys and zs cancel;
// a point repeated inside ys or inside zs is a DuplicatePoint.
template <Field S>
WeightMatrix<S> modified_weight(const WeightMatrix<S>& w, const std::vector<S>& ys, const std::vector<S>& zs,
                                double tol = kDefaultTolerance);
// As above, and rejects a remaining pole that sits on a node of the measure.
template <Field S>
WeightMatrix<S> modified_weight(const WeightMatrix<S>& w, const DiscreteMeasure<S>& measure,
                                const std::vector<S>& ys, const std::vector<S>& zs,
                                double tol = kDefaultTolerance);

struct QuadratureParams {
  double lower = -1.0;  // gauss-legendre interval
  double upper = 1.0;
};

// "gauss-hermite" (weight e^{-x^2} on the line) or "gauss-legendre" (unit weight on [lower, upper]).
DiscreteMeasure<Complex> quadrature_preset(const std::string& family, int points,
                                           const QuadratureParams& params = {});

// Throws DuplicatePoint when two entries coincide.
template <Field S>
void require_distinct(const std::vector<S>& points, const char* what, double tol = kDefaultTolerance);

}  // namespace mopkit

#endif  // MOPKIT_MEASURES_HPP
