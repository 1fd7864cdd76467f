#include "mopkit/measures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace mopkit {

template <Field S>
void require_distinct(const std::vector<S>& points, const char* what, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (is_zero(S(points[i] - points[j]), tol))
        raise(ErrorKind::DuplicatePoint, std::string(what) + " contains the repeated point " + to_string(points[i]));
}

template <Field S>
DiscreteMeasure<S>::DiscreteMeasure(std::vector<S> nodes, std::vector<S> masses)
    : nodes_(std::move(nodes)), masses_(std::move(masses)) {
  if (nodes_.empty()) raise(ErrorKind::InvalidArgument, "a measure needs at least one node");
  if (nodes_.size() != masses_.size()) raise(ErrorKind::Shape, "node and mass lists differ in length");
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (nodes_[i] == nodes_[j])
        raise(ErrorKind::DuplicatePoint, "measure node " + to_string(nodes_[i]) + " is repeated");
}

template <Field S>
std::optional<std::size_t> DiscreteMeasure<S>::find_node(const S& x, double tol) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (is_zero(S(nodes_[i] - x), tol)) return i;
  return std::nullopt;
}

template <Field S>
bool WeightFunction<S>::has_pole_at(const S& x, double tol) const {
  for (const auto& z : poles_)
    if (is_zero(S(x - z), tol)) return true;
  return false;
}

template <Field S>
S WeightFunction<S>::operator()(const S& x) const {
  S value = poly_(x);
  for (const auto& y : roots_) value *= (x - y);
  for (const auto& z : poles_) {
    if (x == z) raise(ErrorKind::PoleOnSupport, "weight evaluated at its pole " + to_string(z));
    value /= (x - z);
  }
  if (exp_rate_ != 0.0) {
    if constexpr (is_exact_v<S>) {
      raise(ErrorKind::InvalidArgument, "exponential weight factors need the float field");
    } else {
      value *= std::exp(exp_rate_ * x);
    }
  }
  return value;
}

template <Field S>
WeightFunction<S> WeightFunction<S>::with_factor(const std::vector<S>& ys, const std::vector<S>& zs) const {
  WeightFunction out = *this;
  out.roots_.insert(out.roots_.end(), ys.begin(), ys.end());
  out.poles_.insert(out.poles_.end(), zs.begin(), zs.end());
  return out;
}

template <Field S>
WeightMatrix<S> WeightMatrix<S>::rank_one(WeightSystem<S> factors) {
  if (factors.w1.empty() || factors.w2.empty()) raise(ErrorKind::InvalidArgument, "p and q must be at least 1");
  WeightMatrix w;
  w.p_ = factors.w1.size();
  w.q_ = factors.w2.size();
  w.entries_.reserve(w.p_ * w.q_);
  for (const auto& a : factors.w1)
    for (const auto& b : factors.w2) w.entries_.push_back(a * b);
  w.factors_ = std::move(factors);
  return w;
}

template <Field S>
WeightMatrix<S> WeightMatrix<S>::general(std::size_t p, std::size_t q, std::vector<WeightFunction<S>> entries) {
  if (p == 0 || q == 0) raise(ErrorKind::InvalidArgument, "p and q must be at least 1");
  if (entries.size() != p * q) raise(ErrorKind::Shape, "weight grid must have p*q entries");
  WeightMatrix w;
  w.p_ = p;
  w.q_ = q;
  w.entries_ = std::move(entries);
  return w;
}

template <Field S>
const WeightSystem<S>& WeightMatrix<S>::factors() const {
  if (!factors_) raise(ErrorKind::RequiresRankOne, "weight matrix has no rank-one factorization");
  return *factors_;
}

template <Field S>
FieldMatrix<S> WeightMatrix<S>::evaluate(const S& x) const {
  FieldMatrix<S> out(p_, q_);
  for (std::size_t k = 0; k < p_; ++k)
    for (std::size_t l = 0; l < q_; ++l) out(k, l) = entry(k, l)(x);
  return out;
}

template <Field S>
WeightMatrix<S> WeightMatrix<S>::transpose() const {
  if (factors_) return rank_one(WeightSystem<S>{factors_->w2, factors_->w1});
  std::vector<WeightFunction<S>> t;
  t.reserve(entries_.size());
  for (std::size_t l = 0; l < q_; ++l)
    for (std::size_t k = 0; k < p_; ++k) t.push_back(entry(k, l));
  return general(q_, p_, std::move(t));
}

template <Field S>
WeightMatrix<S> WeightMatrix<S>::with_factor(const std::vector<S>& ys, const std::vector<S>& zs) const {
  if (factors_) {
    WeightSystem<S> f = *factors_;
    for (auto& w : f.w1) w = w.with_factor(ys, zs);
    return rank_one(std::move(f));
  }
  std::vector<WeightFunction<S>> e;
  e.reserve(entries_.size());
  for (const auto& w : entries_) e.push_back(w.with_factor(ys, zs));
  return general(p_, q_, std::move(e));
}

template <Field S>
S moment(const DiscreteMeasure<S>& measure, const WeightFunction<S>& w, int j) {
  if (j < 0) raise(ErrorKind::InvalidArgument, "negative moment exponent");
  S total(0);
  for (std::size_t i = 0; i < measure.size(); ++i) {
    const S& x = measure.nodes()[i];
    if (w.has_pole_at(x)) raise(ErrorKind::PoleOnSupport, "weight pole on the node " + to_string(x));
    total += measure.masses()[i] * power(x, j) * w(x);
  }
  return total;
}

template <Field S>
WeightMatrix<S> modified_weight(const WeightMatrix<S>& w, const std::vector<S>& ys, const std::vector<S>& zs,
                                double tol) {
  require_distinct(ys, "ys", tol);
  require_distinct(zs, "zs", tol);
  std::vector<S> keep_y;
  std::vector<bool> cancelled(zs.size(), false);
  for (const auto& y : ys) {
    bool matched = false;
    for (std::size_t l = 0; l < zs.size(); ++l) {
      if (!cancelled[l] && is_zero(S(y - zs[l]), tol)) {
        cancelled[l] = true;
        matched = true;
        break;
      }
    }
    if (!matched) keep_y.push_back(y);
  }
  std::vector<S> keep_z;
  for (std::size_t l = 0; l < zs.size(); ++l)
    if (!cancelled[l]) keep_z.push_back(zs[l]);
  if (keep_y.empty() && keep_z.empty()) return w;
  return w.with_factor(keep_y, keep_z);
}

template <Field S>
WeightMatrix<S> modified_weight(const WeightMatrix<S>& w, const DiscreteMeasure<S>& measure,
                                const std::vector<S>& ys, const std::vector<S>& zs, double tol) {
  WeightMatrix<S> out = modified_weight(w, ys, zs, tol);
  for (std::size_t k = 0; k < out.p(); ++k)
    for (std::size_t l = 0; l < out.q(); ++l)
      for (const auto& x : measure.nodes())
        if (out.entry(k, l).has_pole_at(x, tol))
          raise(ErrorKind::PoleOnSupport, "pole " + to_string(x) + " lies on the support");
  return out;
}

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, masses mu0 * v0^2.
DiscreteMeasure<Complex> golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) jac(i, i) = diag(i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) jac(i, i + 1) = jac(i + 1, i) = offdiag(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
  std::vector<Complex> nodes;
  std::vector<Complex> masses;
  for (Eigen::Index i = 0; i < n; ++i) {
    nodes.emplace_back(eig.eigenvalues()(i), 0.0);
    const double v0 = eig.eigenvectors()(0, i);
    masses.emplace_back(mu0 * v0 * v0, 0.0);
  }
  return DiscreteMeasure<Complex>(std::move(nodes), std::move(masses));
}

}  // namespace

DiscreteMeasure<Complex> quadrature_preset(const std::string& family, int points, const QuadratureParams& params) {
  if (points < 1) raise(ErrorKind::InvalidArgument, "quadrature needs at least one point");
  const Eigen::Index n = points;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 1, 0));
  if (family == "gauss-hermite") {
    for (Eigen::Index k = 1; k < n; ++k) off(k - 1) = std::sqrt(static_cast<double>(k) / 2.0);
    return golub_welsch(diag, off, std::sqrt(std::numbers::pi));
  }
  if (family == "gauss-legendre") {
    for (Eigen::Index k = 1; k < n; ++k) {
      const double kk = static_cast<double>(k);
      off(k - 1) = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    auto ref = golub_welsch(diag, off, 2.0);
    const double half = (params.upper - params.lower) / 2.0;
    const double mid = (params.upper + params.lower) / 2.0;
    std::vector<Complex> nodes;
    std::vector<Complex> masses;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      nodes.push_back(mid + half * ref.nodes()[i]);
      masses.push_back(half * ref.masses()[i]);
    }
    return DiscreteMeasure<Complex>(std::move(nodes), std::move(masses));
  }
  raise(ErrorKind::UnknownPreset, "unknown quadrature family \"" + family + "\"");
}

#define MOPKIT_INSTANTIATE(S)                                                                              \
  template class DiscreteMeasure<S>;                                                                       \
  template class WeightFunction<S>;                                                                        \
  template class WeightMatrix<S>;                                                                          \
  template S moment(const DiscreteMeasure<S>&, const WeightFunction<S>&, int);                             \
  template WeightMatrix<S> modified_weight(const WeightMatrix<S>&, const std::vector<S>&,                  \
                                           const std::vector<S>&, double);                                 \
  template WeightMatrix<S> modified_weight(const WeightMatrix<S>&, const DiscreteMeasure<S>&,              \
                                           const std::vector<S>&, const std::vector<S>&, double);          \
  template void require_distinct(const std::vector<S>&, const char*, double);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
