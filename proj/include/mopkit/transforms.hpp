#ifndef MOPKIT_TRANSFORMS_HPP
#define MOPKIT_TRANSFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "mopkit/kernels.hpp"

namespace mopkit {

// Same pair and measure, weight multiplied by prod(x - ys)/prod(x - zs).
template <Field S>
Ensemble<S> modified_ensemble(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// Schur-complement routes. Each works from the unmodified ensemble only.

// Modified M11(y) for prod(x - ys) W: stacked up-chain M11 blocks at ys and y.
template <Field S>
FieldMatrix<S> christoffel_Y11(const Ensemble<S>& ens, const std::vector<S>& ys, const S& y);

// Modified M21(z), M22(z) for W / prod(x - zs): stacked down-chain blocks. Needs L <= min m.
template <Field S>
FieldMatrix<S> uvarov_Y21(const Ensemble<S>& ens, const std::vector<S>& zs, const S& z);
template <Field S>
FieldMatrix<S> uvarov_Y22(const Ensemble<S>& ens, const std::vector<S>& zs, const S& z);

// K >= L: R-grid rows over up-chain M11 rows.
template <Field S>
FieldMatrix<S> mixed_christoffel_Y11(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs,
                                     const S& y);

// L >= K: L-grid rows over down-chain rows; the kernel column enters as -K(y_k, z)
// in the 2pi i free normalization. Returns (M21, M22) of the modified ensemble.
template <Field S>
std::pair<FieldMatrix<S>, FieldMatrix<S>> mixed_uvarov_blocks(const Ensemble<S>& ens, const std::vector<S>& ys,
                                                              const std::vector<S>& zs, const S& z);

template <Field S>
struct PartialFractions {
  std::vector<S> c;  // c_l
  S scale;           // c
};

// sum_l c_l/(x - z_l) + 1/(x - z) = scale prod(x - y_k) / ((x - z) prod(x - z_l)); needs K <= L.
template <Field S>
PartialFractions<S> partial_fractions(const std::vector<S>& zs, const S& z, const std::vector<S>& ys = {});

template <Field S>
struct TransformReport {
  std::string block;
  FieldMatrix<S> schur_route;
  FieldMatrix<S> direct_route;
  bool equal = false;
  double max_error = 0.0;
};

// Runs the applicable Schur route(s) at the point t and compares with the
// modified ensemble's transfer-matrix blocks. K >= L reports M11; L >= K reports
// M21 and M22.
template <Field S>
std::vector<TransformReport<S>> compare_transform_routes(const Ensemble<S>& ens, const std::vector<S>& ys,
                                                         const std::vector<S>& zs, const S& t);

}  // namespace mopkit

#endif  // MOPKIT_TRANSFORMS_HPP
