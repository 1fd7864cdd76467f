#ifndef MOPKIT_ENSEMBLE_HPP
#define MOPKIT_ENSEMBLE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mopkit/matrix.hpp"
#include "mopkit/measures.hpp"
#include "mopkit/polynomial.hpp"

namespace mopkit {

// Degree budgets (n_1..n_p) and (m_1..m_q).
struct MultiIndexPair {
  std::vector<int> n;
  std::vector<int> m;

  int total_n() const;
  int total_m() const;
  bool balanced() const { return total_n() == total_m(); }
  // Throws NegativeComponent / Shape when components are negative or |n|-|m| is not 0 or 1.
  void validate() const;

  friend bool operator==(const MultiIndexPair&, const MultiIndexPair&) = default;
};

std::string to_string(const MultiIndexPair& pair);

// Offset of component k's block inside a stacked multi-index.
int block_offset(const std::vector<int>& index, std::size_t k);

// Optional explicit chain: up_m[j] is m_{j+1}, down_n[j] is n_{-(j+1)}.
struct ChainOverride {
  std::vector<std::vector<int>> up_m;
  std::vector<std::vector<int>> down_n;

  bool empty() const { return up_m.empty() && down_n.empty(); }
  friend bool operator==(const ChainOverride&, const ChainOverride&) = default;
};

// Step k of the chain through a balanced pair. Up steps add one to every n_k and
// spread p increments over m round-robin; down steps remove one from every m_l and
// take q decrements from n round-robin, skipping exhausted components.
MultiIndexPair chain_indices(const MultiIndexPair& base, int k, const ChainOverride* chain = nullptr);

template <Field S>
class Ensemble {
 public:
  Ensemble(WeightMatrix<S> weights, DiscreteMeasure<S> measure, MultiIndexPair pair,
           double tol = kDefaultTolerance);

  std::size_t p() const { return data_->weights.p(); }
  std::size_t q() const { return data_->weights.q(); }
  int n() const { return pair_.total_n(); }
  const WeightMatrix<S>& weights() const { return data_->weights; }
  const DiscreteMeasure<S>& measure() const { return data_->measure; }
  double tol() const { return data_->tol; }
  const MultiIndexPair& pair() const { return pair_; }
  const ChainOverride& chain() const { return chain_; }

  // mass_i * W(x_i), p x q.
  const FieldMatrix<S>& node_weight(std::size_t i) const { return data_->node_weight[i]; }

  // Same weights and measure, different pair (which must be balanced).
  Ensemble with_pair(MultiIndexPair pair) const;
  Ensemble with_chain(ChainOverride chain) const;
  MultiIndexPair chain_pair(int k) const { return chain_indices(pair_, k, &chain_); }

  S moment(std::size_t k, std::size_t l, int j) const;

 private:
  struct Data {
    WeightMatrix<S> weights;
    DiscreteMeasure<S> measure;
    double tol;
    std::vector<FieldMatrix<S>> node_weight;
  };
  Ensemble(std::shared_ptr<const Data> data, MultiIndexPair pair, ChainOverride chain)
      : data_(std::move(data)), pair_(std::move(pair)), chain_(std::move(chain)) {}

  std::shared_ptr<const Data> data_;
  MultiIndexPair pair_;
  ChainOverride chain_;
};

// Gram matrix of the monomial bases x^i e_k (rows, i < rows_n[k]) and x^j e_l
// (columns, j < cols_m[l]) against W.
template <Field S>
FieldMatrix<S> moment_matrix(const Ensemble<S>& ens, const std::vector<int>& rows_n, const std::vector<int>& cols_m);

template <Field S>
FieldMatrix<S> block_hankel(const Ensemble<S>& ens, const MultiIndexPair& pair);
template <Field S>
FieldMatrix<S> block_hankel(const Ensemble<S>& ens) {
  return block_hankel(ens, ens.pair());
}

// Exact path: det H != 0. Float path: |det H| above tol times the product of row norms.
template <Field S>
bool is_normal(const Ensemble<S>& ens, const MultiIndexPair& pair);
template <Field S>
bool is_normal(const Ensemble<S>& ens) {
  return is_normal(ens, ens.pair());
}

// A vector of p (or q) polynomials.
template <Field S>
struct PolyVector {
  std::vector<Polynomial<S>> entries;

  std::size_t size() const { return entries.size(); }
  const Polynomial<S>& operator[](std::size_t k) const { return entries[k]; }
  std::vector<S> operator()(const S& x) const {
    std::vector<S> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e(x));
    return v;
  }
};

// Builds a PolyVector from stacked coefficients laid out like `index`.
template <Field S>
PolyVector<S> unstack(const std::vector<S>& coefficients, const std::vector<int>& index);

// Type II polynomial for |n| = |m| + 1: component k (0-based) monic of degree n_k - 1,
// orthogonal to every Q in P_m. Throws NonNormal.
template <Field S>
PolyVector<S> vector_op_type2(const Ensemble<S>& ens, const MultiIndexPair& pair, std::size_t k);

// Type I polynomial for |n| = |m| + 1: orthogonal to P_m, with unit pairing against
// x^{m_l} e_l (l 0-based). Throws NonNormal.
template <Field S>
PolyVector<S> vector_op_type1(const Ensemble<S>& ens, const MultiIndexPair& pair, std::size_t l);

// (P_i) in P_n and (Q_j) in P_m with unit Gram matrix, from an LU factorization of H.
template <Field S>
std::pair<std::vector<PolyVector<S>>, std::vector<PolyVector<S>>> biorthogonal_bases(const Ensemble<S>& ens);

// sum_x mass(x) P(x)^T W(x) Q(x).
template <Field S>
S pairing(const Ensemble<S>& ens, const PolyVector<S>& P, const PolyVector<S>& Q);

// (n, m, W) -> (m, n, W^T). Chain overrides are dropped.
template <Field S>
Ensemble<S> dual_spec(const Ensemble<S>& ens);

}  // namespace mopkit

#endif  // MOPKIT_ENSEMBLE_HPP
