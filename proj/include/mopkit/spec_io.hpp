#ifndef MOPKIT_SPEC_IO_HPP
#define MOPKIT_SPEC_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mopkit/ensemble.hpp"
#include "mopkit/oracles.hpp"

namespace mopkit {

struct PresetSpec {
  std::string family;  // gauss-hermite | gauss-legendre
  int points = 0;
  std::string lower = "-1";
  std::string upper = "1";

  friend bool operator==(const PresetSpec&, const PresetSpec&) = default;
};

// Text form of an ensemble. Rationals are kept as normalized strings ("a/b" or an
// integer) so that a document never passes through binary floating point.
struct SpecDocument {
  std::string name;
  int p = 1;
  int q = 1;
  std::string field = "exact";  // exact | float
  double tol = kDefaultTolerance;
  std::uint64_t enum_cap = kDefaultEnumerationCap;

  // Either explicit atoms or a quadrature preset.
  std::vector<std::string> nodes;
  std::vector<std::string> masses;
  std::optional<PresetSpec> preset;

  // Ascending coefficient lists; the *_exp lists (possibly empty) give exponential rates.
  std::vector<std::vector<std::string>> w1;
  std::vector<std::vector<std::string>> w2;
  std::vector<std::string> w1_exp;
  std::vector<std::string> w2_exp;
  // Optional p x q grid (row-major) replacing w1 w2^T.
  std::vector<std::vector<std::string>> weights;

  std::vector<int> n;
  std::vector<int> m;
  std::vector<std::vector<int>> chain_up;
  std::vector<std::vector<int>> chain_down;
  std::optional<bool> expect_normal;
  // Evaluation points for the verification suites; defaults are used when empty.
  std::vector<std::string> eval_points;

  bool exact() const { return field == "exact"; }
  MultiIndexPair pair() const { return {n, m}; }
  ChainOverride chain() const { return {chain_up, chain_down}; }

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Throws ParseError carrying line and column for syntax errors and, for semantic
// errors, the location of the offending key.
SpecDocument parse_spec(const std::string& text);
SpecDocument load_spec(const std::string& path);
std::string serialize_spec(const SpecDocument& doc);

// MOPKIT_ENUM_CAP and MOPKIT_TOL, when set, replace the document's values.
void apply_environment(SpecDocument& doc);

// Exact documents build Ensemble<Rational> only; presets and exponential rates need
// the float field.
template <Field S>
Ensemble<S> build_ensemble(const SpecDocument& doc);

std::vector<Rational> parse_rationals(const std::vector<std::string>& items);

}  // namespace mopkit

#endif  // MOPKIT_SPEC_IO_HPP
