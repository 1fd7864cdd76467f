#include "mopkit/averages.hpp"

#include <algorithm>

namespace mopkit {

template <Field S>
void require_admissible(const std::vector<S>& ys, const std::vector<S>& zs, double tol) {
  require_distinct(ys, "ys", tol);
  require_distinct(zs, "zs", tol);
  for (const auto& y : ys)
    for (const auto& z : zs)
      if (is_zero(S(y - z), tol)) raise(ErrorKind::DuplicatePoint, "ys and zs share the point " + to_string(y));
}

template <Field S>
void cross_check(const S& a, const S& b, double tol, const char* what) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    if (a != b) raise(ErrorKind::IdentityMismatch, std::string(what) + ": " + to_string(a) + " != " + to_string(b));
  } else {
    if (!near(a, b, std::max(100 * tol, 1e-9)))
      raise(ErrorKind::IdentityMismatch, std::string(what) + ": " + to_string(a) + " vs " + to_string(b));
  }
}

namespace {

template <Field S>
RHBlocks<S> chain_rh(const Ensemble<S>& ens, int k) {
  const MultiIndexPair pair = ens.chain_pair(k);
  try {
    return RHBlocks<S>(ens.with_pair(pair));
  } catch (const MopError& e) {
    if (e.kind() == ErrorKind::NonNormal)
      raise(ErrorKind::NonNormal, "chain pair " + std::to_string(k) + " = " + to_string(pair) + " is not normal");
    throw;
  }
}

template <Field S>
void require_down_depth(const Ensemble<S>& ens, std::size_t depth) {
  const int min_m = *std::min_element(ens.pair().m.begin(), ens.pair().m.end());
  if (static_cast<int>(depth) > 1 + min_m)
    raise(ErrorKind::ChainDepthExceeded,
          "depth " + std::to_string(depth) + " exceeds 1 + min m = " + std::to_string(1 + min_m));
}

template <Field S>
void require_normal(const Ensemble<S>& ens) {
  if (!is_normal(ens)) raise(ErrorKind::NonNormal, "pair " + to_string(ens.pair()) + " is not normal");
}

}  // namespace

template <Field S>
S avg_char(const Ensemble<S>& ens, const S& y) {
  return det(RHBlocks<S>(ens).m11(y));
}

template <Field S>
S avg_inv_char(const Ensemble<S>& ens, const S& z) {
  require_off_support(ens, z, "z");
  return det(RHBlocks<S>(ens).m22(z));
}

template <Field S>
S avg_ratio(const Ensemble<S>& ens, const S& y, const S& z) {
  require_off_support(ens, z, "z");
  const ChristoffelDarboux<S> cd(ens);
  const S l = det(cd.L(y, z));
  cross_check(l, det(cd.R(z, y)), ens.tol(), "det L(y,z) = det R(z,y)");
  return l;
}

template <Field S>
S avg_products(const Ensemble<S>& ens, const std::vector<S>& ys) {
  require_distinct(ys, "ys", ens.tol());
  require_normal(ens);
  const std::size_t K = ys.size();
  const std::size_t p = ens.p();
  FieldMatrix<S> big(K * p, K * p);
  for (std::size_t k = 0; k < K; ++k) {
    const RHBlocks<S> rh = chain_rh(ens, static_cast<int>(k));
    for (std::size_t j = 0; j < K; ++j) big.set_block(k * p, j * p, rh.m11(ys[j]));
  }
  S vdm(1);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) vdm *= ys[j] - ys[i];
  return det(big) / power(vdm, static_cast<int>(p));
}

template <Field S>
S avg_inv_products(const Ensemble<S>& ens, const std::vector<S>& zs) {
  require_distinct(zs, "zs", ens.tol());
  for (const auto& z : zs) require_off_support(ens, z, "z");
  require_normal(ens);
  const std::size_t L = zs.size();
  require_down_depth(ens, L);
  const std::size_t q = ens.q();
  FieldMatrix<S> big(L * q, L * q);
  for (std::size_t k = 0; k < L; ++k) {
    const RHBlocks<S> rh = chain_rh(ens, -static_cast<int>(k));
    for (std::size_t j = 0; j < L; ++j) big.set_block(k * q, j * q, rh.m22(zs[j]));
  }
  S vdm(1);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) vdm *= zs[j] - zs[i];
  return det(big) / power(vdm, static_cast<int>(q));
}

template <Field S>
S avg_more_products(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  require_admissible(ys, zs, ens.tol());
  for (const auto& z : zs) require_off_support(ens, z, "z");
  const std::size_t K = ys.size();
  const std::size_t L = zs.size();
  if (K < L) raise(ErrorKind::InvalidArgument, "this formula needs K >= L");
  const std::size_t p = ens.p();
  const ChristoffelDarboux<S> cd(ens);
  FieldMatrix<S> big(K * p, K * p);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < K; ++j) big.set_block(i * p, j * p, cd.R(zs[i], ys[j]) * (S(1) / (zs[i] - ys[j])));
  for (std::size_t k = 0; k + L < K; ++k) {
    const RHBlocks<S> rh = chain_rh(ens, static_cast<int>(k));
    for (std::size_t j = 0; j < K; ++j) big.set_block((L + k) * p, j * p, rh.m11(ys[j]));
  }
  S num((L * (K - L)) % 2 == 0 ? 1 : -1);
  for (const auto& y : ys)
    for (const auto& z : zs) num *= z - y;
  S den(1);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) den *= ys[j] - ys[i];
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) den *= zs[i] - zs[j];
  return power(S(num / den), static_cast<int>(p)) * det(big);
}

template <Field S>
S avg_more_ratios(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  require_admissible(ys, zs, ens.tol());
  for (const auto& z : zs) require_off_support(ens, z, "z");
  const std::size_t K = ys.size();
  const std::size_t L = zs.size();
  if (L < K) raise(ErrorKind::InvalidArgument, "this formula needs L >= K");
  require_down_depth(ens, L - K);
  const std::size_t q = ens.q();
  const ChristoffelDarboux<S> cd(ens);
  FieldMatrix<S> big(L * q, L * q);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < L; ++j) big.set_block(i * q, j * q, cd.L(ys[i], zs[j]) * (S(1) / (zs[j] - ys[i])));
  for (std::size_t k = 0; k + K < L; ++k) {
    const RHBlocks<S> rh = chain_rh(ens, -static_cast<int>(k));
    for (std::size_t j = 0; j < L; ++j) big.set_block((K + k) * q, j * q, rh.m22(zs[j]));
  }
  S num(1);
  for (const auto& y : ys)
    for (const auto& z : zs) num *= z - y;
  S den(1);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) den *= ys[i] - ys[j];
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) den *= zs[j] - zs[i];
  return power(S(num / den), static_cast<int>(q)) * det(big);
}

template <Field S>
S avg_balanced(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  if (ys.size() != zs.size()) raise(ErrorKind::InvalidArgument, "the balanced formula needs K = L");
  require_admissible(ys, zs, ens.tol());
  for (const auto& z : zs) require_off_support(ens, z, "z");
  const std::size_t K = ys.size();
  const std::size_t p = ens.p();
  const ChristoffelDarboux<S> cd(ens);
  FieldMatrix<S> grid(K * p, K * p);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) grid.set_block(i * p, j * p, cd.R(zs[i], ys[j]) * (S(1) / (zs[i] - ys[j])));
  S num(1);
  for (const auto& y : ys)
    for (const auto& z : zs) num *= z - y;
  S den(1);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) den *= (ys[j] - ys[i]) * (zs[i] - zs[j]);
  const S value = power(S(num / den), static_cast<int>(p)) * det(grid);
  cross_check(value, avg_more_ratios(ens, ys, zs), ens.tol(), "R-grid = L-grid");
  return value;
}

template <Field S>
S avg_general(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  if (ys.size() == zs.size()) {
    const S value = avg_balanced(ens, ys, zs);
    cross_check(value, avg_more_products(ens, ys, zs), ens.tol(), "balanced = mixed formula at K = L");
    return value;
  }
  if (ys.size() > zs.size()) return avg_more_products(ens, ys, zs);
  return avg_more_ratios(ens, ys, zs);
}

template <Field S>
std::pair<S, S> corollary_scalar_relation(const Ensemble<S>& ens, const S& y, const S& z) {
  const WeightSystem<S>& f = ens.weights().factors();
  const auto& w2 = f.w2;
  if (w2.size() != 1 || !(w2[0].polynomial() == Polynomial<S>::constant(S(1))) || !w2[0].roots().empty() ||
      !w2[0].poles().empty() || w2[0].exp_rate() != 0.0)
    raise(ErrorKind::InvalidArgument, "the scalar relation needs q = 1 and w2 = 1");
  const S lhs = avg_ratio(ens, y, z);
  const ChristoffelDarboux<S> cd(ens);
  S sum(0);
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    sum += ens.measure().masses()[i] * cd.scalar(y, x) / (z - x);
  }
  return {lhs, S(1) - (z - y) * sum};
}

template <Field S>
Polynomial<S> char_polynomial(const Ensemble<S>& ens) {
  const RHBlocks<S> rh(ens);
  std::vector<S> xs;
  std::vector<S> vs;
  for (int i = 0; i <= ens.n(); ++i) {
    xs.push_back(S(i));
    vs.push_back(det(rh.m11(S(i))));
  }
  return interpolate(xs, vs);
}

#define MOPKIT_INSTANTIATE(S)                                                                       \
  template void require_admissible(const std::vector<S>&, const std::vector<S>&, double);          \
  template void cross_check(const S&, const S&, double, const char*);                              \
  template S avg_char(const Ensemble<S>&, const S&);                                                \
  template S avg_inv_char(const Ensemble<S>&, const S&);                                            \
  template S avg_ratio(const Ensemble<S>&, const S&, const S&);                                     \
  template S avg_products(const Ensemble<S>&, const std::vector<S>&);                               \
  template S avg_inv_products(const Ensemble<S>&, const std::vector<S>&);                           \
  template S avg_balanced(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);        \
  template S avg_more_products(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);   \
  template S avg_more_ratios(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);     \
  template S avg_general(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);         \
  template std::pair<S, S> corollary_scalar_relation(const Ensemble<S>&, const S&, const S&);       \
  template Polynomial<S> char_polynomial(const Ensemble<S>&);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
