#ifndef MOPKIT_ORACLES_HPP
#define MOPKIT_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "mopkit/ensemble.hpp"

namespace mopkit {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned workers = 1;
};

// (1/Z) sum over ordered node tuples of prod_{k,j}(y_k - x_j)/prod_{l,j}(z_l - x_j)
// det f_i(x_j) det g_i(x_j) prod mass(x_j), with Z accumulated in the same pass.
// Tuples are split into chunks by their first node and reduced in chunk order.
// Needs the rank-one factorization. Throws EnumerationCapExceeded, PoleOnSupport.
template <Field S>
S oracle_enumerate(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs,
                   const EnumerationOptions& options = {});

// sum over ordered tuples of det f det g prod mass, without normalization.
template <Field S>
S enumeration_Z(const Ensemble<S>& ens, const EnumerationOptions& options = {});

// det(sum_x x^{i+j} W(x) mass(x) prod(y_k - x)/prod(z_l - x)) / det H.
template <Field S>
S oracle_andreief(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// n! det H.
template <Field S>
S normalization_Z(const Ensemble<S>& ens);

// Rows x^0..x^{n-1} evaluated at xs, then rows 1/(z_i - x); n = |xs| - |zs|.
template <Field S>
FieldMatrix<S> cauchy_vandermonde_matrix(const std::vector<S>& xs, const std::vector<S>& zs);

// prod_{i<j}(z_i - z_j) prod_{i<j}(x_j - x_i) / prod_{i,j}(z_i - x_j).
template <Field S>
S cauchy_vandermonde(const std::vector<S>& xs, const std::vector<S>& zs);

}  // namespace mopkit

#endif  // MOPKIT_ORACLES_HPP
