#include "mopkit/rh.hpp"

namespace mopkit {

template <Field S>
void require_off_support(const Ensemble<S>& ens, const S& t, const char* what) {
  if (ens.measure().find_node(t, ens.tol()))
    raise(ErrorKind::PoleOnSupport, std::string(what) + " = " + to_string(t) + " lies on the support");
}

template <Field S>
std::vector<S> cauchy_row(const Ensemble<S>& ens, const PolyVector<S>& P, const S& t) {
  require_off_support(ens, t, "evaluation point");
  std::vector<S> row(ens.q(), S(0));
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    const auto pv = P(x);
    const S inv = S(1) / (t - x);
    const FieldMatrix<S>& w = ens.node_weight(i);
    for (std::size_t l = 0; l < ens.q(); ++l) {
      S acc(0);
      for (std::size_t k = 0; k < ens.p(); ++k) acc += pv[k] * w(k, l);
      row[l] += acc * inv;
    }
  }
  return row;
}

template <Field S>
RHBlocks<S>::RHBlocks(Ensemble<S> ens) : ens_(std::move(ens)) {
  const MultiIndexPair& pair = ens_.pair();
  for (std::size_t k = 0; k < ens_.p(); ++k) {
    MultiIndexPair shifted = pair;
    ++shifted.n[k];
    type2_.push_back(vector_op_type2(ens_, shifted, k));
  }
  for (std::size_t l = 0; l < ens_.q(); ++l) {
    if (pair.m[l] == 0) {
      type1_.push_back(PolyVector<S>{std::vector<Polynomial<S>>(ens_.p())});
      continue;
    }
    MultiIndexPair shifted = pair;
    --shifted.m[l];
    type1_.push_back(vector_op_type1(ens_, shifted, l));
  }
}

template <Field S>
FieldMatrix<S> RHBlocks<S>::m11(const S& t) const {
  FieldMatrix<S> out(ens_.p(), ens_.p());
  for (std::size_t k = 0; k < ens_.p(); ++k)
    for (std::size_t j = 0; j < ens_.p(); ++j) out(k, j) = type2_[k][j](t);
  return out;
}

template <Field S>
FieldMatrix<S> RHBlocks<S>::m21(const S& t) const {
  FieldMatrix<S> out(ens_.q(), ens_.p());
  for (std::size_t l = 0; l < ens_.q(); ++l)
    for (std::size_t j = 0; j < ens_.p(); ++j) out(l, j) = type1_[l][j](t);
  return out;
}

template <Field S>
FieldMatrix<S> RHBlocks<S>::m12(const S& t) const {
  FieldMatrix<S> out(ens_.p(), ens_.q());
  for (std::size_t k = 0; k < ens_.p(); ++k) {
    const auto row = cauchy_row(ens_, type2_[k], t);
    for (std::size_t l = 0; l < ens_.q(); ++l) out(k, l) = row[l];
  }
  return out;
}

template <Field S>
FieldMatrix<S> RHBlocks<S>::m22(const S& t) const {
  require_off_support(ens_, t, "evaluation point");
  FieldMatrix<S> out(ens_.q(), ens_.q());
  for (std::size_t l = 0; l < ens_.q(); ++l) {
    if (degenerate_row(l)) {
      out(l, l) = S(1);
      continue;
    }
    const auto row = cauchy_row(ens_, type1_[l], t);
    for (std::size_t j = 0; j < ens_.q(); ++j) out(l, j) = row[j];
  }
  return out;
}

template <Field S>
FieldMatrix<S> RHBlocks<S>::evaluate(const S& t) const {
  const std::size_t p = ens_.p();
  FieldMatrix<S> out(p + ens_.q(), p + ens_.q());
  out.set_block(0, 0, m11(t));
  out.set_block(0, p, m12(t));
  out.set_block(p, 0, m21(t));
  out.set_block(p, p, m22(t));
  return out;
}

#define MOPKIT_INSTANTIATE(S)                                                              \
  template class RHBlocks<S>;                                                              \
  template std::vector<S> cauchy_row(const Ensemble<S>&, const PolyVector<S>&, const S&); \
  template void require_off_support(const Ensemble<S>&, const S&, const char*);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
