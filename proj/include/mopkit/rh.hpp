#ifndef MOPKIT_RH_HPP
#define MOPKIT_RH_HPP

#include <vector>

#include "mopkit/ensemble.hpp"

namespace mopkit {

// The 2pi i free transfer matrix M(t) = E^{-1} Y(t) E, E = diag(I_p, -2 pi i I_q):
//   M11 rows: type II polynomials for (n + e_k, m)
//   M12 = sum_x M11(x) W(x) mass(x) / (t - x)
//   M21 rows: type I polynomials for (n, m - e_l)
//   M22 = sum_x M21(x) W(x) mass(x) / (t - x)
// When m_l = 0, row l of M21 is zero and row l of M22 is the unit row e_l.
template <Field S>
class RHBlocks {
 public:
  // Throws NonNormal.
  explicit RHBlocks(Ensemble<S> ens);

  const Ensemble<S>& ensemble() const { return ens_; }
  const PolyVector<S>& type2_row(std::size_t k) const { return type2_[k]; }
  const PolyVector<S>& type1_row(std::size_t l) const { return type1_[l]; }
  bool degenerate_row(std::size_t l) const { return ens_.pair().m[l] == 0; }

  FieldMatrix<S> m11(const S& t) const;
  FieldMatrix<S> m21(const S& t) const;
  // Throw PoleOnSupport when t is a node.
  FieldMatrix<S> m12(const S& t) const;
  FieldMatrix<S> m22(const S& t) const;
  FieldMatrix<S> evaluate(const S& t) const;

 private:
  Ensemble<S> ens_;
  std::vector<PolyVector<S>> type2_;
  std::vector<PolyVector<S>> type1_;
};

template <Field S>
RHBlocks<S> rh_blocks(const Ensemble<S>& ens) {
  return RHBlocks<S>(ens);
}

// Row vector sum_x P(x)^T W(x) mass(x) / (t - x), length q. Throws PoleOnSupport.
template <Field S>
std::vector<S> cauchy_row(const Ensemble<S>& ens, const PolyVector<S>& P, const S& t);

// Throws PoleOnSupport when t coincides with a node (within tol on the float path).
template <Field S>
void require_off_support(const Ensemble<S>& ens, const S& t, const char* what);

}  // namespace mopkit

#endif  // MOPKIT_RH_HPP
