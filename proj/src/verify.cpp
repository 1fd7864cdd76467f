#include "mopkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "mopkit/averages.hpp"
#include "mopkit/transforms.hpp"

namespace mopkit {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  std::string lhs;
  std::string rhs;
  bool equal = false;
  double max_error = 0.0;
  std::vector<Complex> lhs_values;
};

double compare_tol(double tol) { return std::max(100 * tol, 1e-9); }

template <Field S>
double difference(const S& a, const S& b) {
  if constexpr (is_exact_v<S>) {
    return magnitude(S(a - b));
  } else {
    return relative_error(a, b);
  }
}

template <Field S>
bool agree(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return near(a, b, compare_tol(tol));
  }
}

template <Field S>
Outcome compare(const S& lhs, const S& rhs, double tol) {
  return {to_string(lhs), to_string(rhs), agree(lhs, rhs, tol), difference(lhs, rhs), {to_complex(lhs)}};
}

template <Field S>
Outcome compare(const FieldMatrix<S>& lhs, const FieldMatrix<S>& rhs, double tol) {
  Outcome o{format_value(lhs), format_value(rhs), true, 0.0, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    o.equal = false;
    o.max_error = std::numeric_limits<double>::infinity();
    return o;
  }
  for (std::size_t i = 0; i < lhs.entries().size(); ++i) {
    const S& a = lhs.entries()[i];
    const S& b = rhs.entries()[i];
    o.equal = o.equal && agree(a, b, tol);
    o.max_error = std::max(o.max_error, difference(a, b));
    o.lhs_values.push_back(to_complex(a));
  }
  return o;
}

template <Field S>
std::string list(const std::vector<S>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}

  template <typename F>
  void run(std::string check, std::string anchor, Inputs inputs, F&& body) {
    CheckRecord rec;
    rec.check = std::move(check);
    rec.anchor = std::move(anchor);
    rec.inputs = std::move(inputs);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      rec.lhs = std::move(o.lhs);
      rec.rhs = std::move(o.rhs);
      rec.equal = o.equal;
      rec.max_error = o.max_error;
      rec.lhs_values = std::move(o.lhs_values);
      rec.status = o.equal ? CheckStatus::pass : CheckStatus::fail;
    } catch (const MopError& e) {
      rec.detail = e.what();
      switch (e.kind()) {
        case ErrorKind::NonNormal:
        case ErrorKind::ChainDepthExceeded:
        case ErrorKind::EnumerationCapExceeded:
          rec.status = CheckStatus::skipped;
          break;
        default:
          rec.status = CheckStatus::fail;
      }
    } catch (const std::exception& e) {
      rec.detail = e.what();
      rec.status = CheckStatus::fail;
    }
    rec.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out_.push_back(std::move(rec));
  }

 private:
  std::vector<CheckRecord>& out_;
};

// Objects that throw NonNormal on construction are built on first use, so every
// dependent record is skipped rather than the whole suite.
template <typename T, typename Make>
class Lazy {
 public:
  explicit Lazy(Make make) : make_(std::move(make)) {}
  const T& get() {
    if (!value_) value_.emplace(make_());
    return *value_;
  }

 private:
  Make make_;
  std::optional<T> value_;
};

template <typename T, typename Make>
Lazy<T, Make> lazy(Make make) {
  return Lazy<T, Make>(std::move(make));
}

template <Field S>
std::vector<S> prefix(const std::vector<S>& pts, std::size_t from, std::size_t count) {
  return std::vector<S>(pts.begin() + static_cast<std::ptrdiff_t>(from),
                        pts.begin() + static_cast<std::ptrdiff_t>(from + count));
}

template <Field S>
void rh_suite(const Ensemble<S>& ens, const std::vector<S>& P, const VerifyOptions& opt, Recorder& rec) {
  const double tol = ens.tol();
  auto blocks = lazy<RHBlocks<S>>([&] { return RHBlocks<S>(ens); });
  auto dual = lazy<RHBlocks<S>>([&] { return RHBlocks<S>(dual_spec(ens)); });

  rec.run("normality", "normal pair: det H != 0", {{"pair", to_string(ens.pair())}}, [&] {
    const bool normal = is_normal(ens);
    return Outcome{normal ? "true" : "false", opt.expect_normal ? "true" : "false", normal == opt.expect_normal, 0.0,
                   {}};
  });
  for (std::size_t i = 0; i < 5; ++i)
    rec.run("det_M", "det M(t) = 1 for the reduced transfer matrix", {{"t", to_string(P[i])}},
            [&] { return compare(det(blocks.get().evaluate(P[i])), S(1), tol); });
  rec.run("char_polynomial_monic", "det M11(y) is monic of degree |n|", {{"pair", to_string(ens.pair())}}, [&] {
    const Polynomial<S> poly = char_polynomial(ens);
    Outcome o;
    o.lhs = "degree " + std::to_string(poly.degree()) + ", leading " + to_string(poly.leading());
    o.rhs = "degree " + std::to_string(ens.n()) + ", leading 1";
    o.max_error = difference(poly.leading(), S(1));
    o.equal = poly.degree() == ens.n() && agree(poly.leading(), S(1), tol);
    for (const auto& c : poly.coefficients()) o.lhs_values.push_back(to_complex(c));
    return o;
  });
  for (std::size_t i = 0; i < 5; ++i) {
    const S& t = P[i];
    const Inputs in{{"t", to_string(t)}};
    rec.run("dual_det_Y11", "det of the dual M11 equals det M11", in,
            [&] { return compare(det(dual.get().m11(t)), det(blocks.get().m11(t)), tol); });
    rec.run("dual_det_Y22", "det of the dual M22 equals det M22", in,
            [&] { return compare(det(dual.get().m22(t)), det(blocks.get().m22(t)), tol); });
    rec.run("dual_inverse_transpose", "dual M(t) is the inverse transpose of [[M22, -M21], [-M12, M11]]", in, [&] {
      const auto& b = blocks.get();
      const std::size_t p = ens.p();
      const std::size_t q = ens.q();
      FieldMatrix<S> rearranged(p + q, p + q);
      rearranged.set_block(0, 0, b.m22(t));
      rearranged.set_block(0, q, -b.m21(t));
      rearranged.set_block(q, 0, -b.m12(t));
      rearranged.set_block(q, q, b.m11(t));
      return compare(FieldMatrix<S>(dual.get().evaluate(t).transpose() * rearranged),
                     FieldMatrix<S>::identity(p + q), tol);
    });
  }
}

template <Field S>
void kernel_suite(const Ensemble<S>& ens, const std::vector<S>& P, Recorder& rec) {
  const double tol = ens.tol();
  const auto& pair = ens.pair();
  const auto& mu = ens.measure();
  auto blocks = lazy<RHBlocks<S>>([&] { return RHBlocks<S>(ens); });
  auto cd = lazy<ChristoffelDarboux<S>>([&] { return ChristoffelDarboux<S>(ens); });

  for (std::size_t i = 0; i < 5; ++i) {
    const S& x = P[i];
    const S& y = P[i + 1];
    rec.run("kernel_schur_vs_rh", "Schur-complement kernel equals the transfer-matrix kernel",
            {{"x", to_string(x)}, {"y", to_string(y)}},
            [&] { return compare(kernel_schur(ens, x, y), kernel_rh(blocks.get(), x, y), tol); });
  }

  const S& x0 = P[0];
  const S& z = P[1];
  for (std::size_t l = 0; l < ens.q(); ++l)
    for (int j = 0; j < pair.m[l]; ++j)
      rec.run("reproducing", "sum_y K(x, y) W(y) Q(y) = Q(x) for Q = y^j e_l",
              {{"x", to_string(x0)}, {"l", std::to_string(l)}, {"j", std::to_string(j)}}, [&] {
                FieldMatrix<S> acc(ens.q(), 1);
                for (std::size_t i = 0; i < mu.size(); ++i) {
                  FieldMatrix<S> v(ens.q(), 1);
                  v(l, 0) = power(mu.nodes()[i], j);
                  acc += cd.get()(x0, mu.nodes()[i]) * ens.node_weight(i) * v;
                }
                FieldMatrix<S> expect(ens.q(), 1);
                expect(l, 0) = power(x0, j);
                return compare(acc, expect, tol);
              });
  for (std::size_t k = 0; k < ens.p(); ++k)
    for (int j = 0; j < pair.n[k]; ++j)
      rec.run("dual_reproducing", "sum_x P(x)^T W(x) K(x, y) = P(y)^T for P = x^j e_k",
              {{"y", to_string(x0)}, {"k", std::to_string(k)}, {"j", std::to_string(j)}}, [&] {
                FieldMatrix<S> acc(1, ens.p());
                for (std::size_t i = 0; i < mu.size(); ++i) {
                  FieldMatrix<S> v(1, ens.p());
                  v(0, k) = power(mu.nodes()[i], j);
                  acc += v * ens.node_weight(i) * cd.get()(mu.nodes()[i], x0);
                }
                FieldMatrix<S> expect(1, ens.p());
                expect(0, k) = power(x0, j);
                return compare(acc, expect, tol);
              });
  for (std::size_t k = 0; k < ens.p(); ++k)
    for (int j = 0; j < pair.n[k]; ++j)
      rec.run("L_vanishing", "sum_y P(y)^T W(y) L(y, z)/(z - y) = 0 for P = y^j e_k",
              {{"z", to_string(z)}, {"k", std::to_string(k)}, {"j", std::to_string(j)}}, [&] {
                FieldMatrix<S> acc(1, ens.q());
                for (std::size_t i = 0; i < mu.size(); ++i) {
                  const S& y = mu.nodes()[i];
                  FieldMatrix<S> v(1, ens.p());
                  v(0, k) = power(y, j);
                  acc += v * ens.node_weight(i) * cd.get().L(y, z) * (S(1) / (z - y));
                }
                return compare(acc, FieldMatrix<S>(1, ens.q()), tol);
              });
  for (std::size_t l = 0; l < ens.q(); ++l)
    for (int j = 0; j < pair.m[l]; ++j)
      rec.run("R_vanishing", "sum_y R(z, y) W(y) Q(y)/(z - y) = 0 for Q = y^j e_l",
              {{"z", to_string(z)}, {"l", std::to_string(l)}, {"j", std::to_string(j)}}, [&] {
                FieldMatrix<S> acc(ens.p(), 1);
                for (std::size_t i = 0; i < mu.size(); ++i) {
                  const S& y = mu.nodes()[i];
                  FieldMatrix<S> v(ens.q(), 1);
                  v(l, 0) = power(y, j);
                  acc += cd.get().R(z, y) * ens.node_weight(i) * v * (S(1) / (z - y));
                }
                return compare(acc, FieldMatrix<S>(ens.p(), 1), tol);
              });

  for (std::size_t i = 0; i < 5; ++i) {
    const S& y = P[i];
    const S& zz = P[i + 1];
    const Inputs in{{"y", to_string(y)}, {"z", to_string(zz)}};
    rec.run("L_sum_vs_rh", "kernel-sum L(y, z) equals [0 I] M^-1(y) M(z) [0; I]", in,
            [&] { return compare(cd.get().L(y, zz), matrix_L_rh(blocks.get(), y, zz), tol); });
    rec.run("R_sum_vs_rh", "kernel-sum R(z, y) equals [I 0] M^-1(z) M(y) [I; 0]", in,
            [&] { return compare(cd.get().R(zz, y), matrix_R_rh(blocks.get(), zz, y), tol); });
    rec.run("det_L_equals_det_R", "det L(y, z) = det R(z, y)", in,
            [&] { return compare(det(cd.get().L(y, zz)), det(cd.get().R(zz, y)), tol); });
  }
}

template <Field S>
bool unit_second_weight(const Ensemble<S>& ens) {
  if (ens.q() != 1 || !ens.weights().is_rank_one()) return false;
  const auto& w = ens.weights().factors().w2[0];
  return w.polynomial() == Polynomial<S>::constant(S(1)) && w.roots().empty() && w.poles().empty() &&
         w.exp_rate() == 0.0;
}

template <Field S>
void theorems_suite(const Ensemble<S>& ens, const std::vector<S>& P, const VerifyOptions& opt, Recorder& rec) {
  const double tol = ens.tol();
  auto triple = [&](const std::string& name, const std::string& anchor, const std::vector<S>& ys,
                    const std::vector<S>& zs, auto formula) {
    const Inputs in{{"K", std::to_string(ys.size())}, {"L", std::to_string(zs.size())},
                    {"ys", list(ys)},                 {"zs", list(zs)}};
    std::optional<S> cached;
    auto value = [&] {
      if (!cached) cached = formula();
      return *cached;
    };
    rec.run(name + ".enumerate", anchor, in,
            [&] { return compare(value(), oracle_enumerate(ens, ys, zs, opt.enumeration), tol); });
    rec.run(name + ".andreief", anchor, in, [&] { return compare(value(), oracle_andreief(ens, ys, zs), tol); });
  };

  for (std::size_t i = 0; i < 3; ++i) {
    const S y = P[i];
    const S z = P[i + 3];
    triple("avg_char", "average of prod_j (y - x_j) equals det M11(y)", {y}, {}, [&] { return avg_char(ens, y); });
    triple("avg_inv_char", "average of prod_j 1/(z - x_j) equals det M22(z)", {}, {z},
           [&] { return avg_inv_char(ens, z); });
    triple("avg_ratio", "average of prod_j (y - x_j)/(z - x_j) equals det L(y, z) and det R(z, y)", {y}, {z},
           [&] { return avg_ratio(ens, y, z); });
  }

  for (std::size_t total = 2; total <= 3; ++total)
    for (std::size_t K = total + 1; K-- > 0;) {
      const std::size_t L = total - K;
      const auto ys = prefix(P, 0, K);
      const auto zs = prefix(P, K, L);
      if (L == 0) {
        triple("avg_products", "average of K characteristic polynomials from stacked up-chain M11 blocks", ys, zs,
               [&] { return avg_products(ens, ys); });
      } else if (K == 0) {
        triple("avg_inv_products", "average of L inverse characteristic polynomials from down-chain M22 blocks", ys,
               zs, [&] { return avg_inv_products(ens, zs); });
      } else if (K == L) {
        triple("avg_balanced", "K = L ratio average as the grid det R(z_i, y_j)/(z_i - y_j)", ys, zs,
               [&] { return avg_balanced(ens, ys, zs); });
        const Inputs in{{"ys", list(ys)}, {"zs", list(zs)}};
        rec.run("balanced_vs_more_products", "K = L grid formula agrees with the up-chain mixed formula", in,
                [&] { return compare(avg_balanced(ens, ys, zs), avg_more_products(ens, ys, zs), tol); });
        rec.run("balanced_vs_more_ratios", "K = L grid formula agrees with the down-chain mixed formula", in,
                [&] { return compare(avg_balanced(ens, ys, zs), avg_more_ratios(ens, ys, zs), tol); });
      } else if (K > L) {
        triple("avg_more_products", "K > L ratio average from an R grid over up-chain M11 blocks", ys, zs,
               [&] { return avg_more_products(ens, ys, zs); });
      } else {
        triple("avg_more_ratios", "L > K ratio average from an L grid over down-chain M22 blocks", ys, zs,
               [&] { return avg_more_ratios(ens, ys, zs); });
      }
    }

  if (unit_second_weight(ens)) {
    const S y = P[0];
    const S z = P[1];
    rec.run("scalar_ratio_relation", "q = 1: det L(y, z) = 1 - (z - y) sum_x Khat(y, x) mass(x)/(z - x)",
            {{"y", to_string(y)}, {"z", to_string(z)}}, [&] {
              const auto [lhs, rhs] = corollary_scalar_relation(ens, y, z);
              return compare(lhs, rhs, tol);
            });
  }
}

template <Field S>
void transforms_suite(const Ensemble<S>& ens, const std::vector<S>& P, Recorder& rec) {
  for (std::size_t K = 0; K <= 2; ++K)
    for (std::size_t L = 0; L <= 2; ++L) {
      if (K == 0 && L == 0) continue;
      const auto ys = prefix(P, 0, K);
      const auto zs = prefix(P, K, L);
      const S t = P[K + L];
      const std::string kind = L == 0 ? "christoffel" : K == 0 ? "uvarov" : "mixed";
      const Inputs in{{"ys", list(ys)}, {"zs", list(zs)}, {"t", to_string(t)}};
      std::optional<std::vector<TransformReport<S>>> reports;
      std::vector<std::string> names;
      if (K >= L) names.push_back("Y11");
      if (L >= K) {
        names.push_back("Y21");
        names.push_back("Y22");
      }
      for (const auto& block : names)
        rec.run(kind + "." + block, "Schur-complement transform equals the modified-weight transfer matrix", in, [&] {
          if (!reports) reports = compare_transform_routes(ens, ys, zs, t);
          for (const auto& r : *reports)
            if (r.block == block) {
              Outcome o{format_value(r.schur_route), format_value(r.direct_route), r.equal, r.max_error, {}};
              for (const auto& v : r.schur_route.entries()) o.lhs_values.push_back(to_complex(v));
              return o;
            }
          raise(ErrorKind::InvalidArgument, "no report for block " + block);
        });
    }
}

template <Field S>
void oracles_suite(const Ensemble<S>& ens, const std::vector<S>& P, const VerifyOptions& opt, Recorder& rec,
                   std::vector<CheckRecord>& out) {
  const double tol = ens.tol();
  rec.run("partition_function", "n! det H equals the direct sum over configurations",
          {{"pair", to_string(ens.pair())}},
          [&] { return compare(normalization_Z(ens), enumeration_Z(ens, opt.enumeration), tol); });
  const std::vector<std::pair<std::vector<S>, std::vector<S>>> queries = {
      {{P[0]}, {}}, {{P[0], P[1]}, {P[2]}}, {{P[0]}, {P[1], P[2]}}};
  for (const auto& [ys, zs] : queries)
    rec.run("enumerate_vs_andreief", "configuration sum equals the Gram determinant ratio",
            {{"ys", list(ys)}, {"zs", list(zs)}},
            [&] { return compare(oracle_enumerate(ens, ys, zs, opt.enumeration), oracle_andreief(ens, ys, zs), tol); });
  auto cv = cauchy_vandermonde_checks<S>(opt.seed, opt.cauchy_instances);
  out.insert(out.end(), std::make_move_iterator(cv.begin()), std::make_move_iterator(cv.end()));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rh", "kernel", "theorems", "transforms", "oracles"};
  return names;
}

template <Field S>
std::vector<Rational> default_points(const Ensemble<S>& ens, std::size_t count) {
  static const char* const candidates[] = {"7/3",  "-5/2", "9/4",  "-11/3", "13/5",  "-17/7", "19/6",
                                           "23/9", "-3/8", "29/11", "-31/5", "37/4", "41/10", "-43/6"};
  std::vector<Rational> out;
  for (const char* c : candidates) {
    if (out.size() == count) break;
    const Rational r = parse_rational(c);
    if (!ens.measure().find_node(embed<S>(r), ens.tol())) out.push_back(r);
  }
  return out;
}

template <Field S>
std::vector<CheckRecord> cauchy_vandermonde_checks(std::uint64_t seed, int instances, int max_size) {
  std::vector<CheckRecord> out;
  Recorder rec(out);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  for (int size = 1; size <= max_size; ++size)
    for (int m = 0; m <= size; ++m)
      for (int i = 0; i < instances; ++i) {
        std::vector<Rational> pts;
        while (static_cast<int>(pts.size()) < size + m) {
          const Rational v = Rational(num(rng)) / den(rng);
          if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
        }
        std::vector<S> xs;
        std::vector<S> zs;
        for (int k = 0; k < size + m; ++k) (k < size ? xs : zs).push_back(embed<S>(pts[static_cast<std::size_t>(k)]));
        rec.run("cauchy_vandermonde", "closed product form of the mixed monomial and Cauchy determinant",
                {{"n", std::to_string(size - m)}, {"m", std::to_string(m)}, {"xs", list(xs)}, {"zs", list(zs)}},
                [&] {
                  return compare(cauchy_vandermonde(xs, zs), det(cauchy_vandermonde_matrix(xs, zs)),
                                 kDefaultTolerance);
                });
      }
  return out;
}

template <Field S>
std::vector<CheckRecord> run_suite(const Ensemble<S>& ens, const std::string& suite, const VerifyOptions& options) {
  std::vector<Rational> exact_points = options.points.empty() ? default_points(ens) : options.points;
  if (exact_points.size() < 6)
    raise(ErrorKind::InvalidArgument, "the suites need at least 6 evaluation points off the support");
  for (const auto& r : exact_points)
    if (ens.measure().find_node(embed<S>(r), ens.tol()))
      raise(ErrorKind::PoleOnSupport, "evaluation point " + to_string(r) + " is a node of the measure");
  std::vector<S> P;
  for (const auto& r : exact_points) P.push_back(embed<S>(r));

  std::vector<CheckRecord> out;
  Recorder rec(out);
  if (suite == "rh") {
    rh_suite(ens, P, options, rec);
  } else if (suite == "kernel") {
    kernel_suite(ens, P, rec);
  } else if (suite == "theorems") {
    theorems_suite(ens, P, options, rec);
  } else if (suite == "transforms") {
    transforms_suite(ens, P, rec);
  } else if (suite == "oracles") {
    oracles_suite(ens, P, options, rec, out);
  } else if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto part = run_suite(ens, name, options);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else {
    raise(ErrorKind::InvalidArgument, "unknown suite \"" + suite + "\"");
  }
  return out;
}

template <Field S>
ReportDocument verify(const Ensemble<S>& ens, const VerifyOptions& options) {
  ReportDocument doc;
  doc.field = is_exact_v<S> ? "exact" : "float";
  doc.suite = options.suite;
  if (options.suite == "oracles" || options.suite == "all") doc.seed = options.seed;
  doc.records = run_suite(ens, options.suite, options);
  return doc;
}

#define MOPKIT_INSTANTIATE(S)                                                                              \
  template std::vector<Rational> default_points(const Ensemble<S>&, std::size_t);                          \
  template std::vector<CheckRecord> run_suite(const Ensemble<S>&, const std::string&, const VerifyOptions&); \
  template ReportDocument verify(const Ensemble<S>&, const VerifyOptions&);                                \
  template std::vector<CheckRecord> cauchy_vandermonde_checks<S>(std::uint64_t, int, int);

MOPKIT_INSTANTIATE(Rational)
MOPKIT_INSTANTIATE(Complex)

}  // namespace mopkit
