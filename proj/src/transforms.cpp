#include "mopkit/transforms.hpp"

#include <algorithm>

#include "mopkit/averages.hpp"

namespace mopkit {

namespace {

template <Field S>
RHBlocks<S> chain_blocks(const Ensemble<S>& ens, int k) {
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
void require_uvarov_depth(const Ensemble<S>& ens, std::size_t depth) {
  const int min_m = *std::min_element(ens.pair().m.begin(), ens.pair().m.end());
  if (static_cast<int>(depth) > min_m)
    raise(ErrorKind::ChainDepthExceeded, "transform depth " + std::to_string(depth) + " needs min m >= depth, min m = " +
                                             std::to_string(min_m));
}

template <Field S>
void require_not_in(const std::vector<S>& pts, const S& t, double tol, const char* what) {
  for (const auto& v : pts)
    if (is_zero(S(v - t), tol)) raise(ErrorKind::DuplicatePoint, std::string(what) + " coincides with " + to_string(v));
}

template <Field S>
double max_difference(const FieldMatrix<S>& a, const FieldMatrix<S>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if constexpr (is_exact_v<S>) {
      worst = std::max(worst, magnitude(S(a.entries()[i] - b.entries()[i])));
    } else {
      worst = std::max(worst, relative_error(a.entries()[i], b.entries()[i]));
    }
  }
  return worst;
}

}  // namespace

template <Field S>
Ensemble<S> modified_ensemble(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  require_admissible(ys, zs, ens.tol());
  WeightMatrix<S> w = modified_weight(ens.weights(), ens.measure(), ys, zs, ens.tol());
  return Ensemble<S>(std::move(w), ens.measure(), ens.pair(), ens.tol());
}

template <Field S>
FieldMatrix<S> christoffel_Y11(const Ensemble<S>& ens, const std::vector<S>& ys, const S& y) {
  require_distinct(ys, "ys", ens.tol());
  require_not_in(ys, y, ens.tol(), "y");
  const std::size_t K = ys.size();
  const std::size_t p = ens.p();
  FieldMatrix<S> big((K + 1) * p, (K + 1) * p);
  for (std::size_t k = 0; k <= K; ++k) {
    const RHBlocks<S> rh = chain_blocks(ens, static_cast<int>(k));
    for (std::size_t j = 0; j < K; ++j) big.set_block(k * p, j * p, rh.m11(ys[j]));
    big.set_block(k * p, K * p, rh.m11(y));
  }
  S prefactor(1);
  for (const auto& yk : ys) prefactor *= y - yk;
  return schur_complement(big, K * p, ens.tol()) * (S(1) / prefactor);
}

template <Field S>
FieldMatrix<S> uvarov_Y21(const Ensemble<S>& ens, const std::vector<S>& zs, const S& z) {
  return mixed_uvarov_blocks(ens, std::vector<S>{}, zs, z).first;
}

template <Field S>
FieldMatrix<S> uvarov_Y22(const Ensemble<S>& ens, const std::vector<S>& zs, const S& z) {
  return mixed_uvarov_blocks(ens, std::vector<S>{}, zs, z).second;
}

template <Field S>
FieldMatrix<S> mixed_christoffel_Y11(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs,
                                     const S& y) {
  require_admissible(ys, zs, ens.tol());
  require_not_in(ys, y, ens.tol(), "y");
  require_not_in(zs, y, ens.tol(), "y");
  for (const auto& z : zs) require_off_support(ens, z, "z");
  const std::size_t K = ys.size();
  const std::size_t L = zs.size();
  if (K < L) raise(ErrorKind::InvalidArgument, "the mixed Christoffel formula needs K >= L");
  const std::size_t p = ens.p();
  FieldMatrix<S> big((K + 1) * p, (K + 1) * p);
  if (L > 0) {
    const ChristoffelDarboux<S> cd(ens);
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = 0; j < K; ++j) big.set_block(i * p, j * p, cd.R(zs[i], ys[j]) * (S(1) / (zs[i] - ys[j])));
      big.set_block(i * p, K * p, cd.R(zs[i], y) * (S(1) / (zs[i] - y)));
    }
  }
  for (std::size_t k = 0; k + L <= K; ++k) {
    const RHBlocks<S> rh = chain_blocks(ens, static_cast<int>(k));
    for (std::size_t j = 0; j < K; ++j) big.set_block((L + k) * p, j * p, rh.m11(ys[j]));
    big.set_block((L + k) * p, K * p, rh.m11(y));
  }
  S prefactor(1);
  for (const auto& z : zs) prefactor *= y - z;
  for (const auto& yk : ys) prefactor /= y - yk;
  return schur_complement(big, K * p, ens.tol()) * prefactor;
}

template <Field S>
std::pair<FieldMatrix<S>, FieldMatrix<S>> mixed_uvarov_blocks(const Ensemble<S>& ens, const std::vector<S>& ys,
                                                              const std::vector<S>& zs, const S& z) {
  require_admissible(ys, zs, ens.tol());
  require_not_in(ys, z, ens.tol(), "z");
  require_not_in(zs, z, ens.tol(), "z");
  require_off_support(ens, z, "z");
  for (const auto& zl : zs) require_off_support(ens, zl, "z");
  const std::size_t K = ys.size();
  const std::size_t L = zs.size();
  if (L < K) raise(ErrorKind::InvalidArgument, "the mixed Uvarov formula needs L >= K");
  require_uvarov_depth(ens, L - K);
  const std::size_t p = ens.p();
  const std::size_t q = ens.q();
  FieldMatrix<S> m21((L + 1) * q, L * q + p);
  FieldMatrix<S> m22((L + 1) * q, (L + 1) * q);
  if (K > 0) {
    const ChristoffelDarboux<S> cd(ens);
    for (std::size_t i = 0; i < K; ++i) {
      for (std::size_t j = 0; j < L; ++j) {
        const FieldMatrix<S> block = cd.L(ys[i], zs[j]) * (S(1) / (zs[j] - ys[i]));
        m21.set_block(i * q, j * q, block);
        m22.set_block(i * q, j * q, block);
      }
      m21.set_block(i * q, L * q, -cd(ys[i], z));
      m22.set_block(i * q, L * q, cd.L(ys[i], z) * (S(1) / (z - ys[i])));
    }
  }
  for (std::size_t k = 0; k + K <= L; ++k) {
    const RHBlocks<S> rh = chain_blocks(ens, -static_cast<int>(k));
    for (std::size_t j = 0; j < L; ++j) {
      const FieldMatrix<S> block = rh.m22(zs[j]);
      m21.set_block((K + k) * q, j * q, block);
      m22.set_block((K + k) * q, j * q, block);
    }
    m21.set_block((K + k) * q, L * q, rh.m21(z));
    m22.set_block((K + k) * q, L * q, rh.m22(z));
  }
  S prefactor(1);
  for (const auto& y : ys) prefactor *= z - y;
  for (const auto& zl : zs) prefactor /= z - zl;
  return {schur_complement(m21, L * q, ens.tol()), schur_complement(m22, L * q, ens.tol()) * prefactor};
}

template <Field S>
PartialFractions<S> partial_fractions(const std::vector<S>& zs, const S& z, const std::vector<S>& ys) {
  std::vector<S> all = zs;
  all.push_back(z);
  all.insert(all.end(), ys.begin(), ys.end());
  require_distinct(all, "partial fraction points", 0.0);
  if (ys.size() > zs.size()) raise(ErrorKind::InvalidArgument, "partial fractions need K <= L");
  PartialFractions<S> out;
  out.scale = S(1);
  for (const auto& zl : zs) out.scale *= z - zl;
  for (const auto& y : ys) out.scale /= z - y;
  for (std::size_t l = 0; l < zs.size(); ++l) {
    S c = out.scale / (zs[l] - z);
    for (const auto& y : ys) c *= zs[l] - y;
    for (std::size_t j = 0; j < zs.size(); ++j)
      if (j != l) c /= zs[l] - zs[j];
    out.c.push_back(c);
  }
  return out;
}

template <Field S>
std::vector<TransformReport<S>> compare_transform_routes(const Ensemble<S>& ens, const std::vector<S>& ys,
                                                         const std::vector<S>& zs, const S& t) {
  const RHBlocks<S> direct(modified_ensemble(ens, ys, zs));
  std::vector<TransformReport<S>> out;
  auto add = [&](const char* name, FieldMatrix<S> schur, FieldMatrix<S> dir) {
    TransformReport<S> r;
    r.block = name;
    r.max_error = max_difference(schur, dir);
    if constexpr (is_exact_v<S>) {
      r.equal = schur == dir;
    } else {
      r.equal = approx_equal(schur, dir, std::max(100 * ens.tol(), 1e-9));
    }
    r.schur_route = std::move(schur);
    r.direct_route = std::move(dir);
    out.push_back(std::move(r));
  };
  if (ys.size() >= zs.size()) add("Y11", mixed_christoffel_Y11(ens, ys, zs, t), direct.m11(t));
  if (zs.size() >= ys.size()) {
    auto [m21, m22] = mixed_uvarov_blocks(ens, ys, zs, t);
    add("Y21", std::move(m21), direct.m21(t));
    add("Y22", std::move(m22), direct.m22(t));
  }
  return out;
}

#define MOPKIT_INSTANTIATE(S)                                                                                   \
  template Ensemble<S> modified_ensemble(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);     \
  template FieldMatrix<S> christoffel_Y11(const Ensemble<S>&, const std::vector<S>&, const S&);                 \
  template FieldMatrix<S> uvarov_Y21(const Ensemble<S>&, const std::vector<S>&, const S&);                      \
  template FieldMatrix<S> uvarov_Y22(const Ensemble<S>&, const std::vector<S>&, const S&);                      \
  template FieldMatrix<S> mixed_christoffel_Y11(const Ensemble<S>&, const std::vector<S>&,                      \
                                                const std::vector<S>&, const S&);                               \
  template std::pair<FieldMatrix<S>, FieldMatrix<S>> mixed_uvarov_blocks(                                       \
      const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&, const S&);                              \
  template PartialFractions<S> partial_fractions(const std::vector<S>&, const S&, const std::vector<S>&);      \
  template std::vector<TransformReport<S>> compare_transform_routes(const Ensemble<S>&, const std::vector<S>&,  \
                                                                    const std::vector<S>&, const S&);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
