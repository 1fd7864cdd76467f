#ifndef MOPKIT_AVERAGES_HPP
#define MOPKIT_AVERAGES_HPP

#include <utility>
#include <vector>

#include "mopkit/kernels.hpp"

namespace mopkit {

// Average of prod_j (y - x_j): det M11(y).
template <Field S>
S avg_char(const Ensemble<S>& ens, const S& y);

// Average of prod_j 1/(z - x_j): det M22(z).
template <Field S>
S avg_inv_char(const Ensemble<S>& ens, const S& z);

// Average of prod_j (y - x_j)/(z - x_j): det L(y, z), checked against det R(z, y).
template <Field S>
S avg_ratio(const Ensemble<S>& ens, const S& y, const S& z);

// K points: block determinant of M11 over the up-chain, over the Vandermonde power.
template <Field S>
S avg_products(const Ensemble<S>& ens, const std::vector<S>& ys);

// L <= 1 + min m points: block determinant of M22 over the down-chain.
template <Field S>
S avg_inv_products(const Ensemble<S>& ens, const std::vector<S>& zs);

// K = K: grid of R(z_i, y_j)/(z_i - y_j), checked against the grid of L(y_i, z_j)/(z_j - y_i).
template <Field S>
S avg_balanced(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// R grid over the first L rows, M11 up-chain blocks below; K >= L.
template <Field S>
S avg_more_products(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// L grid over the first K rows, M22 down-chain blocks below; L >= K.
template <Field S>
S avg_more_ratios(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// Dispatches on K vs L; at K = L the balanced formula is cross-checked against the
// R-grid formula.
template <Field S>
S avg_general(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs);

// For q = 1 and w2 = 1: (det L(y, z), 1 - (z - y) sum_x mass(x) Khat(y, x)/(z - x)).
template <Field S>
std::pair<S, S> corollary_scalar_relation(const Ensemble<S>& ens, const S& y, const S& z);

// det M11 as a polynomial in y, by interpolation at n + 1 points.
template <Field S>
Polynomial<S> char_polynomial(const Ensemble<S>& ens);

// Throws DuplicatePoint if any two of ys, zs coincide.
template <Field S>
void require_admissible(const std::vector<S>& ys, const std::vector<S>& zs, double tol);

// Exact equality or relative agreement within max(100 tol, 1e-9); throws IdentityMismatch.
template <Field S>
void cross_check(const S& a, const S& b, double tol, const char* what);

}  // namespace mopkit

#endif  // MOPKIT_AVERAGES_HPP
