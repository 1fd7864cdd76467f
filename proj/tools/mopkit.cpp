#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "mopkit/averages.hpp"
#include "mopkit/spec_io.hpp"
#include "mopkit/verify.hpp"

using namespace mopkit;

namespace {

// Exit codes: 0 all checks passed, 1 some check failed, 2 bad input or module error.
constexpr int kFailed = 1;
constexpr int kError = 2;

SpecDocument read_spec(const std::string& path) {
  SpecDocument doc = load_spec(path);
  apply_environment(doc);
  return doc;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) raise(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

template <Field S>
int run_verify(const SpecDocument& spec, const std::string& spec_path, const std::string& suite,
               const std::string& report_path) {
  VerifyOptions options;
  options.suite = suite;
  options.points = parse_rationals(spec.eval_points);
  options.enumeration.cap = spec.enum_cap;
  options.expect_normal = spec.expect_normal.value_or(true);
  ReportDocument report = verify(build_ensemble<S>(spec), options);
  report.spec = spec.name.empty() ? spec_path : spec.name;
  emit(report.to_json(), report_path);
  std::cerr << report.spec << ": " << report.count(CheckStatus::pass) << " passed, "
            << report.count(CheckStatus::fail) << " failed, " << report.count(CheckStatus::skipped) << " skipped\n";
  for (const auto& r : report.records)
    if (r.status == CheckStatus::fail)
      std::cerr << "  FAIL " << r.check << ": " << (r.detail.empty() ? r.lhs + " vs " + r.rhs : r.detail) << "\n";
  return report.failed() ? kFailed : 0;
}

template <Field S>
S formula_average(const Ensemble<S>& ens, const std::vector<S>& ys, const std::vector<S>& zs) {
  require_admissible(ys, zs, ens.tol());
  if (ys.empty() && zs.empty()) return S(1);
  if (ys.size() == 1 && zs.empty()) return avg_char(ens, ys[0]);
  if (ys.empty() && zs.size() == 1) return avg_inv_char(ens, zs[0]);
  if (ys.size() == 1 && zs.size() == 1) return avg_ratio(ens, ys[0], zs[0]);
  if (zs.empty()) return avg_products(ens, ys);
  if (ys.empty()) return avg_inv_products(ens, zs);
  return avg_general(ens, ys, zs);
}

template <Field S>
int run_average(const SpecDocument& spec, const std::string& spec_path, const std::vector<std::string>& ys_text,
                const std::vector<std::string>& zs_text, const std::string& method) {
  const Ensemble<S> ens = build_ensemble<S>(spec);
  std::vector<S> ys;
  std::vector<S> zs;
  for (const auto& r : parse_rationals(ys_text)) ys.push_back(embed<S>(r));
  for (const auto& r : parse_rationals(zs_text)) zs.push_back(embed<S>(r));
  EnumerationOptions enumeration;
  enumeration.cap = spec.enum_cap;

  ReportDocument report;
  report.spec = spec.name.empty() ? spec_path : spec.name;
  report.field = is_exact_v<S> ? "exact" : "float";
  report.suite = "average";
  const std::vector<std::pair<std::string, std::string>> inputs = {{"ys", CLI::detail::join(ys_text, ",")},
                                                                   {"zs", CLI::detail::join(zs_text, ",")}};
  auto value_record = [&](const std::string& name, const S& value) {
    CheckRecord r;
    r.check = "average." + name;
    r.anchor = "average of prod_k prod_j (y_k - x_j)/prod_l prod_j (z_l - x_j)";
    r.inputs = inputs;
    r.lhs = to_string(value);
    r.rhs = r.lhs;
    r.equal = true;
    r.status = CheckStatus::pass;
    report.records.push_back(std::move(r));
  };

  std::optional<S> formula;
  std::optional<S> enumerated;
  std::optional<S> andreief;
  if (method == "formula" || method == "all") formula = formula_average(ens, ys, zs);
  if (method == "enumerate" || method == "all") enumerated = oracle_enumerate(ens, ys, zs, enumeration);
  if (method == "andreief" || method == "all") andreief = oracle_andreief(ens, ys, zs);
  if (formula) value_record("formula", *formula);
  if (enumerated) value_record("enumerate", *enumerated);
  if (andreief) value_record("andreief", *andreief);

  if (method == "all") {
    auto agreement = [&](const std::string& name, const S& other) {
      CheckRecord r;
      r.check = "average.formula_vs_" + name;
      r.anchor = "closed-form average equals the " + name + " oracle";
      r.inputs = inputs;
      r.lhs = to_string(*formula);
      r.rhs = to_string(other);
      if constexpr (is_exact_v<S>) {
        r.equal = *formula == other;
        r.max_error = magnitude(S(*formula - other));
      } else {
        r.equal = near(*formula, other, std::max(100 * spec.tol, 1e-9));
        r.max_error = relative_error(*formula, other);
      }
      r.status = r.equal ? CheckStatus::pass : CheckStatus::fail;
      report.records.push_back(std::move(r));
    };
    agreement("enumerate", *enumerated);
    agreement("andreief", *andreief);
  }
  std::cout << report.to_json();
  return report.failed() ? kFailed : 0;
}

int run_roots(const SpecDocument& spec) {
  // The polynomial is computed in the document's field and demoted to doubles.
  std::vector<Complex> coeffs;
  if (spec.exact()) {
    const Polynomial<Rational> exact = char_polynomial(build_ensemble<Rational>(spec));
    for (const auto& c : exact.coefficients()) coeffs.push_back(to_complex(c));
  } else {
    coeffs = char_polynomial(build_ensemble<Complex>(spec)).coefficients();
  }
  const int degree = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> roots;
  if (degree >= 1) {
    // Companion matrix of the polynomial made monic.
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (int i = 0; i < degree; ++i) {
      Complex r = solver.eigenvalues()(i);
      // Clean rounding noise in the imaginary part of real roots.
      if (std::abs(r.imag()) <= 1e-12 * std::max(1.0, std::abs(r))) r = Complex(r.real(), 0.0);
      roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
  }
  nlohmann::ordered_json out;
  out["spec"] = spec.name;
  out["approximate"] = true;
  std::vector<std::string> poly;
  for (const auto& c : coeffs) poly.push_back(to_string(c));
  out["coefficients"] = poly;
  std::vector<std::string> text;
  for (const auto& r : roots) text.push_back(to_string(r));
  out["roots"] = text;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal identities for multiple orthogonal polynomial ensembles"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string suite = "all";
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and write a JSON report");
  verify_cmd->add_option("spec", spec_path, "Ensemble spec file")->required();
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"rh", "kernel", "theorems", "transforms", "oracles", "all"}));
  verify_cmd->add_option("--report", report_path, "Report path (stdout when omitted)");

  std::vector<std::string> ys;
  std::vector<std::string> zs;
  std::string method = "all";
  auto* average_cmd = app.add_subcommand("average", "Average of a ratio of characteristic polynomials");
  average_cmd->add_option("spec", spec_path, "Ensemble spec file")->required();
  average_cmd->add_option("--ys", ys, "Numerator points")->delimiter(',');
  average_cmd->add_option("--zs", zs, "Denominator points")->delimiter(',');
  average_cmd->add_option("--method", method, "Computation method")
      ->check(CLI::IsMember({"formula", "enumerate", "andreief", "all"}));

  auto* roots_cmd = app.add_subcommand("roots", "Approximate zeros of the average characteristic polynomial");
  roots_cmd->add_option("spec", spec_path, "Ensemble spec file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const SpecDocument spec = read_spec(spec_path);
    if (*verify_cmd) {
      return spec.exact() ? run_verify<Rational>(spec, spec_path, suite, report_path)
                          : run_verify<Complex>(spec, spec_path, suite, report_path);
    }
    if (*average_cmd) {
      return spec.exact() ? run_average<Rational>(spec, spec_path, ys, zs, method)
                          : run_average<Complex>(spec, spec_path, ys, zs, method);
    }
    return run_roots(spec);
  } catch (const MopError& e) {
    std::cerr << "mopkit: " << e.what() << "\n";
    return kError;
  }
}
