#include "mopkit/kernels.hpp"

namespace mopkit {

template <Field S>
FieldMatrix<S> left_basis(const MultiIndexPair& pair, const S& x) {
  FieldMatrix<S> out(pair.m.size(), static_cast<std::size_t>(pair.total_m()));
  std::size_t c = 0;
  for (std::size_t l = 0; l < pair.m.size(); ++l) {
    S xp(1);
    for (int j = 0; j < pair.m[l]; ++j, ++c) {
      out(l, c) = xp;
      xp *= x;
    }
  }
  return out;
}

template <Field S>
FieldMatrix<S> right_basis(const MultiIndexPair& pair, const S& y) {
  FieldMatrix<S> out(static_cast<std::size_t>(pair.total_n()), pair.n.size());
  std::size_t r = 0;
  for (std::size_t k = 0; k < pair.n.size(); ++k) {
    S yp(1);
    for (int i = 0; i < pair.n[k]; ++i, ++r) {
      out(r, k) = yp;
      yp *= y;
    }
  }
  return out;
}

namespace {

template <Field S>
FieldMatrix<S> bordered_schur(const FieldMatrix<S>& h, const FieldMatrix<S>& right, const FieldMatrix<S>& left,
                              double tol, const MultiIndexPair& pair) {
  const std::size_t n = h.rows();
  FieldMatrix<S> big(n + left.rows(), n + right.cols());
  big.set_block(0, 0, -h);
  big.set_block(0, n, -right);
  big.set_block(n, 0, -left);
  try {
    return schur_complement(big, n, tol);
  } catch (const MopError& e) {
    if (e.kind() == ErrorKind::SingularPivot) raise(ErrorKind::NonNormal, "pair " + to_string(pair) + " is not normal");
    throw;
  }
}

}  // namespace

template <Field S>
ChristoffelDarboux<S>::ChristoffelDarboux(Ensemble<S> ens) : ens_(std::move(ens)) {
  const FieldMatrix<S> h = block_hankel(ens_);
  const auto id = FieldMatrix<S>::identity(h.rows());
  inv_ = bordered_schur(h, id, id, ens_.tol(), ens_.pair());
}

template <Field S>
FieldMatrix<S> ChristoffelDarboux<S>::operator()(const S& x, const S& y) const {
  return left_basis(ens_.pair(), x) * inv_ * right_basis(ens_.pair(), y);
}

template <Field S>
S ChristoffelDarboux<S>::scalar(const S& x, const S& y) const {
  const WeightSystem<S>& f = ens_.weights().factors();
  const FieldMatrix<S> k = (*this)(x, y);
  S total(0);
  for (std::size_t l = 0; l < ens_.q(); ++l)
    for (std::size_t j = 0; j < ens_.p(); ++j) total += f.w2[l](x) * k(l, j) * f.w1[j](y);
  return total;
}

template <Field S>
FieldMatrix<S> ChristoffelDarboux<S>::L(const S& y, const S& z) const {
  require_off_support(ens_, z, "z");
  // sum_x right_basis(x) W(x) mass(x) / (z - x), |n| x q.
  FieldMatrix<S> g(static_cast<std::size_t>(ens_.n()), ens_.q());
  for (std::size_t i = 0; i < ens_.measure().size(); ++i) {
    const S& x = ens_.measure().nodes()[i];
    g += right_basis(ens_.pair(), x) * ens_.node_weight(i) * (S(1) / (z - x));
  }
  return FieldMatrix<S>::identity(ens_.q()) - (z - y) * (left_basis(ens_.pair(), y) * inv_ * g);
}

template <Field S>
FieldMatrix<S> ChristoffelDarboux<S>::R(const S& z, const S& y) const {
  require_off_support(ens_, z, "z");
  // sum_x W(x) mass(x) left_basis(x) / (z - x), p x |m|.
  FieldMatrix<S> f(ens_.p(), static_cast<std::size_t>(ens_.n()));
  for (std::size_t i = 0; i < ens_.measure().size(); ++i) {
    const S& x = ens_.measure().nodes()[i];
    f += ens_.node_weight(i) * left_basis(ens_.pair(), x) * (S(1) / (z - x));
  }
  return FieldMatrix<S>::identity(ens_.p()) - (z - y) * (f * inv_ * right_basis(ens_.pair(), y));
}

template <Field S>
FieldMatrix<S> ChristoffelDarboux<S>::R_scaled(const S& z, const S& y) const {
  require_off_support(ens_, z, "z");
  const std::size_t p = ens_.p();
  const auto& nvec = ens_.pair().n;
  FieldMatrix<S> plain = R(z, y);
  FieldMatrix<S> out(p, p);
  for (std::size_t k = 0; k < p; ++k) {
    if (nvec[k] == 0) {
      for (std::size_t j = 0; j < p; ++j) out(k, j) = plain(k, j);
      continue;
    }
    // z^{n_k} R_k = -z sum_x (x - y) x^{n_k - 1} e_k^T W(x) mass(x) K(x, y) / (z - x)
    FieldMatrix<S> contrib(1, static_cast<std::size_t>(ens_.n()));
    for (std::size_t i = 0; i < ens_.measure().size(); ++i) {
      const S& x = ens_.measure().nodes()[i];
      const S factor = (x - y) * power(x, nvec[k] - 1) / (z - x);
      FieldMatrix<S> wrow(1, ens_.q());
      for (std::size_t l = 0; l < ens_.q(); ++l) wrow(0, l) = factor * ens_.node_weight(i)(k, l);
      contrib += wrow * left_basis(ens_.pair(), x);
    }
    const FieldMatrix<S> r = contrib * inv_ * right_basis(ens_.pair(), y);
    for (std::size_t j = 0; j < p; ++j) out(k, j) = -z * r(0, j);
  }
  return out;
}

template <Field S>
FieldMatrix<S> kernel_schur(const Ensemble<S>& ens, const S& x, const S& y) {
  return bordered_schur(block_hankel(ens), right_basis(ens.pair(), y), left_basis(ens.pair(), x), ens.tol(),
                        ens.pair());
}

template <Field S>
FieldMatrix<S> kernel_rh(const RHBlocks<S>& rh, const S& x, const S& y) {
  const auto& ens = rh.ensemble();
  if (x == y) raise(ErrorKind::EqualArguments, "the RH kernel form needs x != y");
  const std::size_t p = ens.p();
  FieldMatrix<S> my(p + ens.q(), p);
  my.set_block(0, 0, rh.m11(y));
  my.set_block(p, 0, rh.m21(y));
  const FieldMatrix<S> sol = solve(rh.evaluate(x), my, ens.tol());
  return sol.block(p, 0, ens.q(), p) * (S(1) / (x - y));
}

template <Field S>
FieldMatrix<S> matrix_L_rh(const RHBlocks<S>& rh, const S& y, const S& z) {
  const auto& ens = rh.ensemble();
  const std::size_t p = ens.p();
  FieldMatrix<S> mz(p + ens.q(), ens.q());
  mz.set_block(0, 0, rh.m12(z));
  mz.set_block(p, 0, rh.m22(z));
  return solve(rh.evaluate(y), mz, ens.tol()).block(p, 0, ens.q(), ens.q());
}

template <Field S>
FieldMatrix<S> matrix_R_rh(const RHBlocks<S>& rh, const S& z, const S& y) {
  const auto& ens = rh.ensemble();
  const std::size_t p = ens.p();
  FieldMatrix<S> my(p + ens.q(), p);
  my.set_block(0, 0, rh.m11(y));
  my.set_block(p, 0, rh.m21(y));
  return solve(rh.evaluate(z), my, ens.tol()).block(0, 0, p, p);
}

#define MOPKIT_INSTANTIATE(S)                                                             \
  template FieldMatrix<S> left_basis(const MultiIndexPair&, const S&);                    \
  template FieldMatrix<S> right_basis(const MultiIndexPair&, const S&);                   \
  template class ChristoffelDarboux<S>;                                                   \
  template FieldMatrix<S> kernel_schur(const Ensemble<S>&, const S&, const S&);           \
  template FieldMatrix<S> kernel_rh(const RHBlocks<S>&, const S&, const S&);              \
  template FieldMatrix<S> matrix_L_rh(const RHBlocks<S>&, const S&, const S&);            \
  template FieldMatrix<S> matrix_R_rh(const RHBlocks<S>&, const S&, const S&);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
