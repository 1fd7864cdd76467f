#ifndef MOPKIT_KERNELS_HPP
#define MOPKIT_KERNELS_HPP

#include "mopkit/ensemble.hpp"
#include "mopkit/rh.hpp"

namespace mopkit {

// q x |m| matrix with (l, offset_l + j) = x^j: the stacked basis of P_m.
template <Field S>
FieldMatrix<S> left_basis(const MultiIndexPair& pair, const S& x);
// |n| x p matrix with (offset_k + i, k) = y^i: the stacked basis of P_n, transposed.
template <Field S>
FieldMatrix<S> right_basis(const MultiIndexPair& pair, const S& y);

// K(x, y) = left_basis(x) H^{-1} right_basis(y), q x p, with H^{-1} taken once as the
// Schur complement of -[[H, I], [I, 0]]. Integrated forms of L and R are built on it.
template <Field S>
class ChristoffelDarboux {
 public:
  // Throws NonNormal.
  explicit ChristoffelDarboux(Ensemble<S> ens);

  const Ensemble<S>& ensemble() const { return ens_; }
  const FieldMatrix<S>& coefficients() const { return inv_; }

  FieldMatrix<S> operator()(const S& x, const S& y) const;
  // w2(x)^T K(x, y) w1(y); throws RequiresRankOne.
  S scalar(const S& x, const S& y) const;

  // I_q - (z - y) sum_x K(y, x) W(x) mass(x) / (z - x); z off the support, y anywhere.
  FieldMatrix<S> L(const S& y, const S& z) const;
  // I_p - (z - y) sum_x W(x) mass(x) K(x, y) / (z - x).
  FieldMatrix<S> R(const S& z, const S& y) const;
  // diag(z^{n_k}) R(z, y), with rows for n_k >= 1 rewritten through the dual
  // reproducing property so that large z loses no digits.
  FieldMatrix<S> R_scaled(const S& z, const S& y) const;

 private:
  Ensemble<S> ens_;
  FieldMatrix<S> inv_;
};

// Schur complement of the bordered negated moment matrix -[[H, right_basis(y)], [left_basis(x), 0]].
template <Field S>
FieldMatrix<S> kernel_schur(const Ensemble<S>& ens, const S& x, const S& y);

// [0 I_q] M^{-1}(x) M(y) [I_p; 0] / (x - y). Throws EqualArguments, PoleOnSupport.
template <Field S>
FieldMatrix<S> kernel_rh(const RHBlocks<S>& rh, const S& x, const S& y);

template <Field S>
S kernel_scalar(const Ensemble<S>& ens, const S& x, const S& y) {
  return ChristoffelDarboux<S>(ens).scalar(x, y);
}

template <Field S>
FieldMatrix<S> matrix_L(const Ensemble<S>& ens, const S& y, const S& z) {
  return ChristoffelDarboux<S>(ens).L(y, z);
}

template <Field S>
FieldMatrix<S> matrix_R(const Ensemble<S>& ens, const S& z, const S& y) {
  return ChristoffelDarboux<S>(ens).R(z, y);
}

// [0 I_q] M^{-1}(y) M(z) [0; I_q]; both points off the support.
template <Field S>
FieldMatrix<S> matrix_L_rh(const RHBlocks<S>& rh, const S& y, const S& z);
// [I_p 0] M^{-1}(z) M(y) [I_p; 0]; z off the support.
template <Field S>
FieldMatrix<S> matrix_R_rh(const RHBlocks<S>& rh, const S& z, const S& y);

}  // namespace mopkit

#endif  // MOPKIT_KERNELS_HPP
