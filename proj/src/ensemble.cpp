#include "mopkit/ensemble.hpp"

#include <numeric>

namespace mopkit {

int MultiIndexPair::total_n() const { return std::accumulate(n.begin(), n.end(), 0); }
int MultiIndexPair::total_m() const { return std::accumulate(m.begin(), m.end(), 0); }

void MultiIndexPair::validate() const {
  if (n.empty() || m.empty()) raise(ErrorKind::Shape, "multi-indices need at least one component");
  for (int v : n)
    if (v < 0) raise(ErrorKind::NegativeComponent, "negative component in " + to_string(*this));
  for (int v : m)
    if (v < 0) raise(ErrorKind::NegativeComponent, "negative component in " + to_string(*this));
  const int diff = total_n() - total_m();
  if (diff != 0 && diff != 1) raise(ErrorKind::Shape, "|n| - |m| must be 0 or 1 in " + to_string(*this));
}

std::string to_string(const MultiIndexPair& pair) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return list(pair.n) + "," + list(pair.m);
}

int block_offset(const std::vector<int>& index, std::size_t k) {
  return std::accumulate(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(k), 0);
}

namespace {

void check_up_step(const std::vector<int>& prev, const std::vector<int>& next, std::size_t p) {
  if (next.size() != prev.size()) raise(ErrorKind::Shape, "chain override has the wrong length");
  int gained = 0;
  for (std::size_t l = 0; l < prev.size(); ++l) {
    if (next[l] < prev[l]) raise(ErrorKind::InvalidArgument, "chain override must not decrease m");
    gained += next[l] - prev[l];
  }
  if (gained != static_cast<int>(p)) raise(ErrorKind::InvalidArgument, "chain override must add p to |m| per step");
}

void check_down_step(const std::vector<int>& prev, const std::vector<int>& next, std::size_t q) {
  if (next.size() != prev.size()) raise(ErrorKind::Shape, "chain override has the wrong length");
  int lost = 0;
  for (std::size_t k = 0; k < prev.size(); ++k) {
    if (next[k] > prev[k]) raise(ErrorKind::InvalidArgument, "chain override must not increase n");
    if (next[k] < 0) raise(ErrorKind::NegativeComponent, "chain override has a negative component");
    lost += prev[k] - next[k];
  }
  if (lost != static_cast<int>(q)) raise(ErrorKind::InvalidArgument, "chain override must remove q from |n| per step");
}

}  // namespace

MultiIndexPair chain_indices(const MultiIndexPair& base, int k, const ChainOverride* chain) {
  base.validate();
  if (!base.balanced()) raise(ErrorKind::Shape, "chains start from a pair with |n| = |m|");
  const std::size_t p = base.n.size();
  const std::size_t q = base.m.size();
  MultiIndexPair cur = base;
  for (int j = 1; j <= k; ++j) {
    for (auto& v : cur.n) ++v;
    if (chain && !chain->up_m.empty()) {
      if (static_cast<std::size_t>(j) > chain->up_m.size())
        raise(ErrorKind::ChainDepthExceeded, "chain override too short for step " + std::to_string(j));
      const auto& next = chain->up_m[static_cast<std::size_t>(j - 1)];
      check_up_step(cur.m, next, p);
      cur.m = next;
    } else {
      const std::size_t start = (static_cast<std::size_t>(j - 1) * p) % q;
      for (std::size_t i = 0; i < p; ++i) ++cur.m[(start + i) % q];
    }
  }
  for (int j = 1; j <= -k; ++j) {
    for (auto& v : cur.m) {
      if (v == 0) raise(ErrorKind::NegativeComponent, "down-chain step " + std::to_string(j) + " exhausts m");
      --v;
    }
    if (chain && !chain->down_n.empty()) {
      if (static_cast<std::size_t>(j) > chain->down_n.size())
        raise(ErrorKind::ChainDepthExceeded, "chain override too short for step -" + std::to_string(j));
      const auto& next = chain->down_n[static_cast<std::size_t>(j - 1)];
      check_down_step(cur.n, next, q);
      cur.n = next;
    } else {
      std::size_t pos = (static_cast<std::size_t>(j - 1) * q) % p;
      for (std::size_t i = 0; i < q; ++i) {
        std::size_t tries = 0;
        while (cur.n[pos % p] == 0) {
          ++pos;
          if (++tries > p) raise(ErrorKind::NegativeComponent, "down-chain step exhausts n");
        }
        --cur.n[pos % p];
        ++pos;
      }
    }
  }
  return cur;
}

template <Field S>
Ensemble<S>::Ensemble(WeightMatrix<S> weights, DiscreteMeasure<S> measure, MultiIndexPair pair, double tol)
    : pair_(std::move(pair)) {
  pair_.validate();
  if (!pair_.balanced()) raise(ErrorKind::Shape, "ensemble pair must satisfy |n| = |m|");
  if (pair_.n.size() != weights.p() || pair_.m.size() != weights.q())
    raise(ErrorKind::Shape, "multi-index lengths do not match the weight grid");
  auto data = std::make_shared<Data>(Data{std::move(weights), std::move(measure), tol, {}});
  data->node_weight.reserve(data->measure.size());
  for (std::size_t i = 0; i < data->measure.size(); ++i) {
    const S& x = data->measure.nodes()[i];
    for (std::size_t k = 0; k < data->weights.p(); ++k)
      for (std::size_t l = 0; l < data->weights.q(); ++l)
        if (data->weights.entry(k, l).has_pole_at(x, tol))
          raise(ErrorKind::PoleOnSupport, "weight pole on the node " + to_string(x));
    data->node_weight.push_back(data->weights.evaluate(x) * data->measure.masses()[i]);
  }
  data_ = std::move(data);
}

template <Field S>
Ensemble<S> Ensemble<S>::with_pair(MultiIndexPair pair) const {
  pair.validate();
  if (!pair.balanced()) raise(ErrorKind::Shape, "ensemble pair must satisfy |n| = |m|");
  if (pair.n.size() != p() || pair.m.size() != q()) raise(ErrorKind::Shape, "multi-index lengths changed");
  return Ensemble(data_, std::move(pair), {});
}

template <Field S>
Ensemble<S> Ensemble<S>::with_chain(ChainOverride chain) const {
  Ensemble out(data_, pair_, std::move(chain));
  const auto& c = out.chain_;
  if (!c.up_m.empty()) chain_indices(pair_, static_cast<int>(c.up_m.size()), &c);
  if (!c.down_n.empty()) chain_indices(pair_, -static_cast<int>(c.down_n.size()), &c);
  return out;
}

template <Field S>
S Ensemble<S>::moment(std::size_t k, std::size_t l, int j) const {
  S total(0);
  for (std::size_t i = 0; i < measure().size(); ++i) total += node_weight(i)(k, l) * power(measure().nodes()[i], j);
  return total;
}

template <Field S>
FieldMatrix<S> moment_matrix(const Ensemble<S>& ens, const std::vector<int>& rows_n, const std::vector<int>& cols_m) {
  if (rows_n.size() != ens.p() || cols_m.size() != ens.q()) raise(ErrorKind::Shape, "multi-index lengths");
  const int rows = std::accumulate(rows_n.begin(), rows_n.end(), 0);
  const int cols = std::accumulate(cols_m.begin(), cols_m.end(), 0);
  FieldMatrix<S> h(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  if (rows == 0 || cols == 0) return h;
  const int top = *std::max_element(rows_n.begin(), rows_n.end()) + *std::max_element(cols_m.begin(), cols_m.end()) - 1;
  const std::size_t p = ens.p();
  const std::size_t q = ens.q();
  // mu[(k*q + l)*top + d]
  std::vector<S> mu(p * q * static_cast<std::size_t>(top), S(0));
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    const FieldMatrix<S>& w = ens.node_weight(i);
    S xp(1);
    for (int d = 0; d < top; ++d) {
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) mu[(k * q + l) * top + d] += w(k, l) * xp;
      xp *= x;
    }
  }
  std::size_t r = 0;
  for (std::size_t k = 0; k < p; ++k)
    for (int i = 0; i < rows_n[k]; ++i, ++r) {
      std::size_t c = 0;
      for (std::size_t l = 0; l < q; ++l)
        for (int j = 0; j < cols_m[l]; ++j, ++c) h(r, c) = mu[(k * q + l) * top + i + j];
    }
  return h;
}

template <Field S>
FieldMatrix<S> block_hankel(const Ensemble<S>& ens, const MultiIndexPair& pair) {
  if (!pair.balanced()) raise(ErrorKind::Shape, "block Hankel matrix needs |n| = |m|");
  return moment_matrix(ens, pair.n, pair.m);
}

template <Field S>
bool is_normal(const Ensemble<S>& ens, const MultiIndexPair& pair) {
  const FieldMatrix<S> h = block_hankel(ens, pair);
  if (h.rows() == 0) return true;
  const S d = det(h);
  if constexpr (is_exact_v<S>) {
    return d != 0;
  } else {
    double scale = 1.0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < h.cols(); ++j) row += std::norm(h(i, j));
      scale *= std::sqrt(row);
    }
    return std::abs(d) > ens.tol() * scale;
  }
}

template <Field S>
PolyVector<S> unstack(const std::vector<S>& coefficients, const std::vector<int>& index) {
  PolyVector<S> out;
  std::size_t pos = 0;
  for (int len : index) {
    std::vector<S> c(coefficients.begin() + static_cast<std::ptrdiff_t>(pos),
                     coefficients.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
    out.entries.emplace_back(std::move(c));
    pos += static_cast<std::size_t>(len);
  }
  return out;
}

namespace {

template <Field S>
std::vector<S> solve_vector(const FieldMatrix<S>& a, std::size_t unit, double tol, const MultiIndexPair& pair) {
  FieldMatrix<S> rhs(a.rows(), 1);
  rhs(unit, 0) = S(1);
  try {
    const FieldMatrix<S> x = solve(a, rhs, tol);
    return x.entries();
  } catch (const MopError& e) {
    if (e.kind() == ErrorKind::SingularMatrix) raise(ErrorKind::NonNormal, "pair " + to_string(pair) + " is not normal");
    throw;
  }
}

void require_type_two_shape(const MultiIndexPair& pair, std::size_t p, std::size_t q) {
  pair.validate();
  if (pair.total_n() != pair.total_m() + 1) raise(ErrorKind::Shape, "vector polynomials need |n| = |m| + 1");
  if (pair.n.size() != p || pair.m.size() != q) raise(ErrorKind::Shape, "multi-index lengths");
}

}  // namespace

template <Field S>
PolyVector<S> vector_op_type2(const Ensemble<S>& ens, const MultiIndexPair& pair, std::size_t k) {
  require_type_two_shape(pair, ens.p(), ens.q());
  if (k >= ens.p() || pair.n[k] == 0) raise(ErrorKind::InvalidArgument, "type II index out of range");
  const FieldMatrix<S> g = moment_matrix(ens, pair.n, pair.m);
  const std::size_t size = g.rows();
  FieldMatrix<S> a(size, size);
  a.set_block(0, 0, g.transpose());
  a(size - 1, static_cast<std::size_t>(block_offset(pair.n, k) + pair.n[k] - 1)) = S(1);
  return unstack(solve_vector(a, size - 1, ens.tol(), pair), pair.n);
}

template <Field S>
PolyVector<S> vector_op_type1(const Ensemble<S>& ens, const MultiIndexPair& pair, std::size_t l) {
  require_type_two_shape(pair, ens.p(), ens.q());
  if (l >= ens.q()) raise(ErrorKind::InvalidArgument, "type I index out of range");
  std::vector<int> wider = pair.m;
  ++wider[l];
  const FieldMatrix<S> h = moment_matrix(ens, pair.n, wider);
  const auto unit = static_cast<std::size_t>(block_offset(wider, l) + pair.m[l]);
  return unstack(solve_vector(h.transpose(), unit, ens.tol(), pair), pair.n);
}

template <Field S>
std::pair<std::vector<PolyVector<S>>, std::vector<PolyVector<S>>> biorthogonal_bases(const Ensemble<S>& ens) {
  const FieldMatrix<S> h = block_hankel(ens);
  const std::size_t n = h.rows();
  std::vector<PolyVector<S>> ps;
  std::vector<PolyVector<S>> qs;
  if (n == 0) return {ps, qs};
  LUFactors<S> lu;
  try {
    lu = lu_factor(h, ens.tol());
  } catch (const MopError& e) {
    if (e.kind() == ErrorKind::SingularMatrix) raise(ErrorKind::NonNormal, "pair " + to_string(ens.pair()) + " is not normal");
    throw;
  }
  FieldMatrix<S> perm(n, n);
  for (std::size_t i = 0; i < n; ++i) perm(i, lu.perm[i]) = S(1);
  // A^T H B = I with A^T = L^{-1} P and B = U^{-1}.
  const FieldMatrix<S> at = solve(lu.lower, perm, ens.tol());
  const FieldMatrix<S> b = solve(lu.upper, FieldMatrix<S>::identity(n), ens.tol());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<S> row(n);
    std::vector<S> col(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = at(i, j);
      col[j] = b(j, i);
    }
    ps.push_back(unstack(row, ens.pair().n));
    qs.push_back(unstack(col, ens.pair().m));
  }
  return {ps, qs};
}

template <Field S>
S pairing(const Ensemble<S>& ens, const PolyVector<S>& P, const PolyVector<S>& Q) {
  if (P.size() != ens.p() || Q.size() != ens.q()) raise(ErrorKind::Shape, "pairing of mis-sized vectors");
  S total(0);
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    const auto pv = P(x);
    const auto qv = Q(x);
    const FieldMatrix<S>& w = ens.node_weight(i);
    for (std::size_t k = 0; k < ens.p(); ++k)
      for (std::size_t l = 0; l < ens.q(); ++l) total += pv[k] * w(k, l) * qv[l];
  }
  return total;
}

template <Field S>
Ensemble<S> dual_spec(const Ensemble<S>& ens) {
  return Ensemble<S>(ens.weights().transpose(), ens.measure(), MultiIndexPair{ens.pair().m, ens.pair().n}, ens.tol());
}

#define MOPKIT_INSTANTIATE(S)                                                                                  \
  template class Ensemble<S>;                                                                                  \
  template FieldMatrix<S> moment_matrix(const Ensemble<S>&, const std::vector<int>&, const std::vector<int>&); \
  template FieldMatrix<S> block_hankel(const Ensemble<S>&, const MultiIndexPair&);                             \
  template bool is_normal(const Ensemble<S>&, const MultiIndexPair&);                                          \
  template PolyVector<S> unstack(const std::vector<S>&, const std::vector<int>&);                              \
  template PolyVector<S> vector_op_type2(const Ensemble<S>&, const MultiIndexPair&, std::size_t);              \
  template PolyVector<S> vector_op_type1(const Ensemble<S>&, const MultiIndexPair&, std::size_t);              \
  template std::pair<std::vector<PolyVector<S>>, std::vector<PolyVector<S>>> biorthogonal_bases(               \
      const Ensemble<S>&);                                                                                     \
  template S pairing(const Ensemble<S>&, const PolyVector<S>&, const PolyVector<S>&);                         \
  template Ensemble<S> dual_spec(const Ensemble<S>&);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
