// Acceptance run over the reference suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "mopkit/averages.hpp"
#include "mopkit/spec_io.hpp"
#include "mopkit/transforms.hpp"
#include "mopkit/verify.hpp"

using namespace mopkit;

namespace {

constexpr std::uint64_t kSeed = 20240229;
constexpr double kFloatTolerance = 1e-9;
constexpr double kLimitTolerance = 1e-3;

struct Member {
  std::string family;  // E1 | E2 | PQ2
  SpecDocument doc;
  std::vector<CheckRecord> exact;
  std::vector<CheckRecord> floating;
};

SpecDocument document(const std::string& name, int p, int q, const std::vector<std::string>& nodes,
                      std::vector<std::string> masses, std::vector<std::vector<std::string>> w1,
                      std::vector<std::vector<std::string>> w2, std::vector<int> n, std::vector<int> m) {
  SpecDocument doc;
  doc.name = name;
  doc.p = p;
  doc.q = q;
  doc.nodes = nodes;
  if (masses.empty()) masses.assign(nodes.size(), "1/" + std::to_string(nodes.size()));
  doc.masses = std::move(masses);
  doc.w1 = std::move(w1);
  doc.w2 = std::move(w2);
  doc.n = std::move(n);
  doc.m = std::move(m);
  // Every member goes through the text form once.
  return parse_spec(serialize_spec(doc));
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

// All normal members of the three families.
std::vector<Member> reference_suite() {
  std::vector<Member> out;
  auto add = [&](const std::string& family, SpecDocument doc) {
    if (is_normal(build_ensemble<Rational>(doc))) out.push_back({family, std::move(doc), {}, {}});
  };
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> e1_sets = {
      {{"0", "1"}, {"1/2", "1/2"}},
      {{"-1", "0", "1"}, {}},
      {{"-1", "0", "1"}, {"1/6", "1/2", "1/3"}},
      {{"0", "1/2", "2"}, {}},
      {{"-1", "0", "1", "2"}, {}},
      {{"-2", "-1/3", "1", "3"}, {}},
      {{"-2", "-1", "0", "1", "2"}, {}},
      {{"0", "1/4", "1", "3/2", "3"}, {}},
  };
  for (const auto& [nodes, masses] : e1_sets)
    for (int n = 1; n <= 4; ++n)
      add("E1", document("E1[" + join(nodes) + "] n=" + std::to_string(n), 1, 1, nodes, masses, {{"1"}}, {{"1"}},
                         {n}, {n}));
  const std::vector<std::vector<std::string>> e2_sets = {
      {"-1", "0", "1"},      {"-1", "0", "2"},           {"-1", "0", "1", "2"},
      {"-2", "-1", "1", "3"}, {"-2", "-1", "0", "1", "2"}, {"-2", "-1/2", "1", "3/2", "3"},
  };
  for (const auto& nodes : e2_sets)
    for (int total = 1; total <= 4; ++total)
      for (int n1 = 0; n1 <= total; ++n1)
        add("E2", document("E2[" + join(nodes) + "] n=(" + std::to_string(n1) + "," + std::to_string(total - n1) + ")",
                           2, 1, nodes, {}, {{"1"}, {"0", "1"}}, {{"1"}}, {n1, total - n1}, {total}));
  add("PQ2", document("PQ2[-2..2] n=(1,3) m=(1,3)", 2, 2, {"-2", "-1", "0", "1", "2"}, {}, {{"1"}, {"0", "1"}},
                      {{"1"}, {"0", "1"}}, {1, 3}, {1, 3}));
  return out;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  double runtime = 0.0;
  std::vector<std::string> failures;

  void add(const CheckRecord& r, const std::string& where) {
    runtime += r.runtime;
    switch (r.status) {
      case CheckStatus::pass:
        ++pass;
        break;
      case CheckStatus::skipped:
        ++skipped;
        break;
      case CheckStatus::fail:
        ++fail;
        if (failures.size() < 5)
          failures.push_back(where + ": " + r.check + " " + (r.detail.empty() ? r.lhs + " vs " + r.rhs : r.detail));
        break;
    }
  }
  void require(bool ok, const std::string& what) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
  bool ok() const { return fail == 0 && pass > 0; }
  std::string summary() const {
    std::ostringstream os;
    os << pass << " passed, " << fail << " failed, " << skipped << " skipped";
    return os.str();
  }
};

bool starts_with_any(const std::string& check, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (check == p || check.rfind(p + ".", 0) == 0) return true;
  return false;
}

Tally collect(const std::vector<Member>& suite, const std::vector<std::string>& checks,
              const std::function<bool(const Member&)>& include = {}) {
  Tally t;
  for (const auto& member : suite) {
    if (include && !include(member)) continue;
    for (const auto& r : member.exact)
      if (starts_with_any(r.check, checks)) t.add(r, member.doc.name);
  }
  return t;
}

int failures = 0;

void report(int number, const std::string& title, const Tally& t, const std::string& extra = {}) {
  const bool ok = t.ok();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " (" << t.summary()
            << (extra.empty() ? "" : "; " + extra) << ")\n";
  for (const auto& f : t.failures) std::cout << "        " << f << "\n";
}

Rational R(const char* s) { return parse_rational(s); }

Ensemble<Rational> e1(int n) {
  return build_ensemble<Rational>(
      document("E1", 1, 1, {"0", "1"}, {"1/2", "1/2"}, {{"1"}}, {{"1"}}, {n}, {n}));
}

Ensemble<Rational> e2() {
  return build_ensemble<Rational>(
      document("E2", 2, 1, {"-1", "0", "1"}, {}, {{"1"}, {"0", "1"}}, {{"1"}}, {1, 1}, {2}));
}

// Exact value plus agreement with both oracles.
void require_triple(Tally& t, const Ensemble<Rational>& ens, const Rational& value, const Rational& expected,
                    const std::vector<Rational>& ys, const std::vector<Rational>& zs, const std::string& what) {
  t.require(value == expected, what + " = " + to_string(value) + ", expected " + to_string(expected));
  t.require(oracle_enumerate(ens, ys, zs) == expected, what + ": enumeration disagrees");
  t.require(oracle_andreief(ens, ys, zs) == expected, what + ": Gram determinant disagrees");
}

}  // namespace

int main() {
  const auto wall = std::chrono::steady_clock::now();
  std::vector<Member> suite = reference_suite();

  VerifyOptions options;
  options.cauchy_instances = 0;  // criterion 8 runs its own instances
  options.seed = kSeed;
  for (auto& member : suite) {
    member.exact = run_suite(build_ensemble<Rational>(member.doc), "all", options);
    member.floating = run_suite(build_ensemble<Complex>(member.doc), "all", options);
  }
  std::size_t max_terms = 0;
  for (const auto& member : suite) {
    std::size_t terms = 1;
    for (int i = 0; i < member.doc.pair().total_n(); ++i) terms *= member.doc.nodes.size();
    max_terms = std::max(max_terms, terms);
  }
  std::map<std::string, int> families;
  for (const auto& member : suite) ++families[member.family];
  std::cout << "reference suite: " << families["E1"] << " E1, " << families["E2"] << " E2, " << families["PQ2"]
            << " PQ2 members; at most " << max_terms << " configurations per enumeration\n";

  {
    Tally t = collect(suite, {"avg_char"});
    const double runtime = t.runtime;
    t.require(runtime < 10.0, "runtime " + std::to_string(runtime) + " s exceeds 10 s");
    char extra[64];
    std::snprintf(extra, sizeof extra, "runtime %.2f s", runtime);
    report(1, "average characteristic polynomial equals both oracles", t, extra);
  }
  {
    Tally t = collect(suite, {"avg_inv_char"});
    const Rational z = R("2");
    require_triple(t, e1(2), avg_inv_char(e1(2), z), R("1/2"), {}, {z}, "E1 n=2 inverse average at z=2");
    report(2, "average inverse characteristic polynomial equals both oracles", t);
  }
  {
    Tally t = collect(suite, {"avg_ratio", "det_L_equals_det_R"});
    require_triple(t, e1(1), avg_ratio(e1(1), R("0"), R("2")), R("-1/2"), {R("0")}, {R("2")},
                   "E1 ratio average at y=0, z=2");
    report(3, "ratio average equals both oracles and det L = det R", t);
  }
  {
    Tally t = collect(suite, {"avg_products", "avg_inv_products", "avg_balanced", "avg_more_products",
                              "avg_more_ratios", "balanced_vs_more_products", "balanced_vs_more_ratios"});
    t.require(max_terms <= 625, "an enumeration exceeds 5^4 configurations");
    report(4, "multi-point averages (K+L <= 3) equal both oracles; K = L formulas agree", t,
           "skipped = non-normal chain pair or depth bound");
  }
  {
    Tally t = collect(suite, {"kernel_schur_vs_rh", "reproducing", "dual_reproducing", "L_vanishing", "R_vanishing",
                              "L_sum_vs_rh", "R_sum_vs_rh"});
    report(5, "Schur kernel = transfer-matrix kernel; reproducing and vanishing properties", t);
  }
  {
    Tally t = collect(suite, {"det_M", "dual_det_Y11", "dual_det_Y22", "dual_inverse_transpose"});
    report(6, "det M(t) = 1 and dual determinant identities", t);
  }
  {
    Tally t = collect(suite, {"christoffel", "uvarov", "mixed"},
                      [](const Member& m) { return m.family == "E1" || m.family == "E2"; });
    // Depth L = min m = 1 on E1 n=1: the modified pair has a zero component.
    const auto ens = e1(1);
    for (const char* zs : {"3", "-1/2", "7"}) {
      const Rational z = R(zs);
      t.require(uvarov_Y22(ens, {R("2")}, z) == FieldMatrix<Rational>{{(z - R("1/3")) / (z * (z - 1))}},
                std::string("Uvarov example at z = ") + zs);
    }
    for (const auto& r : compare_transform_routes(ens, {}, {R("2")}, R("3")))
      t.require(r.equal, "E1 Uvarov routes differ on block " + r.block);
    report(7, "transform Schur route = direct modified-weight route (K, L <= 2)", t);
  }
  {
    Tally t;
    for (const auto& r : cauchy_vandermonde_checks<Rational>(kSeed, 20)) t.add(r, "seed " + std::to_string(kSeed));
    report(8, "Cauchy-Vandermonde closed form = determinant, n+m <= 6, 20 instances each", t,
           "seed " + std::to_string(kSeed));
  }
  {
    Tally t = collect(suite, {"partition_function"});
    t.require(normalization_Z(e1(2)) == R("1/2") && enumeration_Z(e1(2)) == R("1/2"), "E1 n=2 Z != 1/2");
    t.require(normalization_Z(e2()) == R("4/3") && enumeration_Z(e2()) == R("4/3"), "E2 Z != 4/3");
    report(9, "Z = n! det H = direct enumeration", t);
  }
  {
    Tally t;
    double worst = 0.0;
    double worst_limit = 0.0;
    std::string worst_member;
    for (const auto& member : suite) {
      if (member.exact.size() != member.floating.size()) {
        t.require(false, member.doc.name + ": float run produced a different record list");
        continue;
      }
      for (std::size_t i = 0; i < member.exact.size(); ++i) {
        const auto& ex = member.exact[i];
        const auto& fl = member.floating[i];
        if (ex.status != CheckStatus::pass) continue;
        if (fl.status != CheckStatus::pass) {
          t.add(fl, member.doc.name + " (float)");
          continue;
        }
        bool close = ex.lhs_values.size() == fl.lhs_values.size();
        for (std::size_t k = 0; close && k < ex.lhs_values.size(); ++k) {
          const double err = relative_error(ex.lhs_values[k], fl.lhs_values[k]);
          worst = std::max(worst, err);
          close = err <= kFloatTolerance;
        }
        t.require(close, member.doc.name + ": " + ex.check + " float " + fl.lhs + " vs exact " + ex.lhs);
      }
      // z^{|n|} det R(z, y) tends to det M11(y).
      const auto ens = build_ensemble<Complex>(member.doc);
      const ChristoffelDarboux<Complex> cd(ens);
      const RHBlocks<Complex> rh(ens);
      const Complex z(1e6, 0.0);
      for (const char* ys : {"7/3", "-5/2", "9/4"}) {
        const Complex y = to_complex(R(ys));
        const double err = std::abs(det(cd.R_scaled(z, y)) - det(rh.m11(y)));
        if (err > worst_limit) {
          worst_limit = err;
          worst_member = member.doc.name + " y=" + ys;
        }
        t.require(err <= kLimitTolerance, member.doc.name + ": limit error " + std::to_string(err) + " at y = " + ys);
      }
    }
    const auto exact_cv = cauchy_vandermonde_checks<Rational>(kSeed, 20);
    const auto float_cv = cauchy_vandermonde_checks<Complex>(kSeed, 20);
    for (std::size_t i = 0; i < exact_cv.size(); ++i) {
      const double err = relative_error(exact_cv[i].lhs_values[0], float_cv[i].lhs_values[0]);
      worst = std::max(worst, err);
      t.require(err <= kFloatTolerance && float_cv[i].status == CheckStatus::pass,
                "Cauchy-Vandermonde float instance " + std::to_string(i));
    }
    char extra[96];
    std::snprintf(extra, sizeof extra, "max relative error %.2e, max limit error %.2e at z = 1e6", worst, worst_limit);
    report(10, "float embedding agrees with exact values", t, extra + (" for " + worst_member));
  }
  {
    Tally t;
    const SpecDocument doc = load_spec(std::string(MOPKIT_SPECS_DIR) + "/hermite_external_source.json");
    const auto ens = build_ensemble<Complex>(doc);
    t.require(doc.preset && doc.preset->points == 24 && ens.n() == 4, "unexpected Hermite spec");
    const Polynomial<Complex> poly = char_polynomial(ens);
    t.require(poly.degree() == 4, "degree " + std::to_string(poly.degree()));
    t.require(std::abs(poly.leading() - 1.0) <= kFloatTolerance, "leading coefficient " + to_string(poly.leading()));
    double worst = 0.0;
    for (const char* ys : {"0", "1/2", "-1", "2", "-3/7"}) {
      const Complex y = to_complex(R(ys));
      const double err = relative_error(avg_char(ens, y), oracle_andreief(ens, {y}, {}));
      worst = std::max(worst, err);
      t.require(err <= kFloatTolerance, std::string("Hermite average disagrees at y = ") + ys);
    }
    char extra[64];
    std::snprintf(extra, sizeof extra, "max relative error %.2e", worst);
    report(11, "Gauss-Hermite external source: monic degree 4, matches Gram determinant", t, extra);
  }

  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall).count();
  std::printf("total wall time %.2f s\n", elapsed);
  return failures == 0 ? 0 : 1;
}
