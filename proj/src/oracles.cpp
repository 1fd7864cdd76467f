#include "mopkit/oracles.hpp"

#include <thread>

#include "mopkit/rh.hpp"

namespace mopkit {

namespace {

template <Field S>
struct Partial {
  S weighted{0};
  S total{0};
};

template <Field S>
struct NodeData {
  std::vector<std::vector<S>> f;  // f[node][i]
  std::vector<std::vector<S>> g;
  std::vector<S> factor;          // mass * prod(y - x)/prod(z - x)
  std::vector<S> mass;
};

template <Field S>
NodeData<S> tabulate(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  const WeightSystem<S>& w = ens.weights().factors();
  NodeData<S> d;
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    std::vector<S> f;
    for (std::size_t k = 0; k < ens.p(); ++k) {
      const S wx = w.w1[k](x);
      S xp(1);
      for (int j = 0; j < ens.pair().n[k]; ++j, xp *= x) f.push_back(xp * wx);
    }
    std::vector<S> g;
    for (std::size_t l = 0; l < ens.q(); ++l) {
      const S wx = w.w2[l](x);
      S xp(1);
      for (int j = 0; j < ens.pair().m[l]; ++j, xp *= x) g.push_back(xp * wx);
    }
    S factor = ens.measure().masses()[i];
    S base = factor;
    for (const auto& y : ys) factor *= y - x;
    for (const auto& z : zs) {
      if (is_zero(S(z - x), ens.tol())) raise(ErrorKind::PoleOnSupport, "z = " + to_string(z) + " lies on the support");
      factor /= z - x;
    }
    d.f.push_back(std::move(f));
    d.g.push_back(std::move(g));
    d.factor.push_back(factor);
    d.mass.push_back(base);
  }
  return d;
}

template <Field S>
Partial<S> chunk_sum(const NodeData<S>& d, std::size_t n, std::size_t first) {
  const std::size_t N = d.f.size();
  Partial<S> out;
  std::vector<std::size_t> tuple(n, 0);
  tuple[0] = first;
  std::vector<bool> used(N, false);
  FieldMatrix<S> fm(n, n);
  FieldMatrix<S> gm(n, n);
  // Odometer over positions 1..n-1; tuples with a repeated node have det f = 0.
  while (true) {
    std::fill(used.begin(), used.end(), false);
    bool distinct = true;
    for (std::size_t j = 0; j < n && distinct; ++j) {
      if (used[tuple[j]]) distinct = false;
      used[tuple[j]] = true;
    }
    if (distinct) {
      S factor(1);
      S mass(1);
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t node = tuple[j];
        for (std::size_t i = 0; i < n; ++i) {
          fm(i, j) = d.f[node][i];
          gm(i, j) = d.g[node][i];
        }
        factor *= d.factor[node];
        mass *= d.mass[node];
      }
      const S dets = det(fm) * det(gm);
      out.weighted += dets * factor;
      out.total += dets * mass;
    }
    std::size_t pos = n;
    while (pos > 1) {
      --pos;
      if (++tuple[pos] < N) break;
      tuple[pos] = 0;
      if (pos == 1) return out;
    }
    if (n <= 1) return out;
  }
}

template <Field S>
Partial<S> enumerate_all(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs,
                         const EnumerationOptions& options) {
  const std::size_t N = ens.measure().size();
  const auto n = static_cast<std::size_t>(ens.n());
  long double terms = 1;
  for (std::size_t i = 0; i < n; ++i) terms *= static_cast<long double>(N);
  if (terms > static_cast<long double>(options.cap))
    raise(ErrorKind::EnumerationCapExceeded, std::to_string(N) + "^" + std::to_string(n) + " terms exceed the cap of " +
                                                 std::to_string(options.cap));
  const NodeData<S> d = tabulate(ens, ys, zs);
  if (n == 0) {
    Partial<S> one;
    one.weighted = S(1);
    one.total = S(1);
    return one;
  }
  std::vector<Partial<S>> chunks(N);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(N)));
  if (workers == 1) {
    for (std::size_t c = 0; c < N; ++c) chunks[c] = chunk_sum(d, n, c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = w; c < N; c += workers) chunks[c] = chunk_sum(d, n, c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Partial<S> sum;
  for (const auto& c : chunks) {
    sum.weighted += c.weighted;
    sum.total += c.total;
  }
  return sum;
}

}  // namespace

template <Field S>
S oracle_enumerate(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs,
                   const EnumerationOptions& options) {
  const Partial<S> s = enumerate_all(ens, ys, zs, options);
  if (is_zero(s.total, ens.tol())) raise(ErrorKind::NonNormal, "the ensemble has zero total mass");
  return s.weighted / s.total;
}

template <Field S>
S enumeration_Z(const Ensemble<S>& ens, const EnumerationOptions& options) {
  return enumerate_all(ens, {}, {}, options).total;
}

template <Field S>
S oracle_andreief(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  if (!is_normal(ens)) raise(ErrorKind::NonNormal, "pair " + to_string(ens.pair()) + " is not normal");
  const auto& pair = ens.pair();
  const auto n = static_cast<std::size_t>(ens.n());
  FieldMatrix<S> gram(n, n);
  FieldMatrix<S> plain(n, n);
  for (std::size_t i = 0; i < ens.measure().size(); ++i) {
    const S& x = ens.measure().nodes()[i];
    S factor(1);
    for (const auto& y : ys) factor *= y - x;
    for (const auto& z : zs) {
      if (is_zero(S(z - x), ens.tol())) raise(ErrorKind::PoleOnSupport, "z = " + to_string(z) + " lies on the support");
      factor /= z - x;
    }
    const FieldMatrix<S>& w = ens.node_weight(i);
    std::size_t r = 0;
    for (std::size_t k = 0; k < ens.p(); ++k)
      for (int a = 0; a < pair.n[k]; ++a, ++r) {
        std::size_t c = 0;
        for (std::size_t l = 0; l < ens.q(); ++l)
          for (int b = 0; b < pair.m[l]; ++b, ++c) {
            const S term = w(k, l) * power(x, a + b);
            plain(r, c) += term;
            gram(r, c) += term * factor;
          }
      }
  }
  return det(gram) / det(plain);
}

template <Field S>
S normalization_Z(const Ensemble<S>& ens) {
  if (!is_normal(ens)) raise(ErrorKind::NonNormal, "pair " + to_string(ens.pair()) + " is not normal");
  return embed<S>(factorial(ens.n())) * det(block_hankel(ens));
}

template <Field S>
FieldMatrix<S> cauchy_vandermonde_matrix(const std::vector<S>& xs, const std::vector<S>& zs) {
  if (zs.size() > xs.size()) raise(ErrorKind::Shape, "need at least as many xs as zs");
  const std::size_t size = xs.size();
  const std::size_t n = size - zs.size();
  FieldMatrix<S> m(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    S xp(1);
    for (std::size_t i = 0; i < n; ++i, xp *= xs[j]) m(i, j) = xp;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (zs[i] == xs[j]) raise(ErrorKind::DuplicatePoint, "xs and zs share " + to_string(xs[j]));
      m(n + i, j) = S(1) / (zs[i] - xs[j]);
    }
  }
  return m;
}

template <Field S>
S cauchy_vandermonde(const std::vector<S>& xs, const std::vector<S>& zs) {
  require_distinct(xs, "xs", 0.0);
  require_distinct(zs, "zs", 0.0);
  if (zs.size() > xs.size()) raise(ErrorKind::Shape, "need at least as many xs as zs");
  S num(1);
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j) num *= zs[i] - zs[j];
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) num *= xs[j] - xs[i];
  S den(1);
  for (const auto& z : zs)
    for (const auto& x : xs) {
      if (z == x) raise(ErrorKind::DuplicatePoint, "xs and zs share " + to_string(x));
      den *= z - x;
    }
  return num / den;
}

#define MOPKIT_INSTANTIATE(S)                                                                                  \
  template S oracle_enumerate(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&,                \
                              const EnumerationOptions&);                                                      \
  template S enumeration_Z(const Ensemble<S>&, const EnumerationOptions&);                                     \
  template S oracle_andreief(const Ensemble<S>&, const std::vector<S>&, const std::vector<S>&);                \
  template S normalization_Z(const Ensemble<S>&);                                                              \
  template FieldMatrix<S> cauchy_vandermonde_matrix(const std::vector<S>&, const std::vector<S>&);             \
  template S cauchy_vandermonde(const std::vector<S>&, const std::vector<S>&);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
