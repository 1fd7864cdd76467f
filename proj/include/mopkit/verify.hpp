#ifndef MOPKIT_VERIFY_HPP
#define MOPKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mopkit/oracles.hpp"
#include "mopkit/report.hpp"

namespace mopkit {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct VerifyOptions {
  // rh | kernel | theorems | transforms | oracles | all
  std::string suite = "all";
  // Evaluation points; when empty, default_points picks them.
  std::vector<Rational> points;
  EnumerationOptions enumeration;
  std::uint64_t seed = kDefaultSeed;
  // Random Cauchy-Vandermonde instances per shape in the oracles suite.
  int cauchy_instances = 3;
  bool expect_normal = true;
};

const std::vector<std::string>& suite_names();

// Fixed rationals off the support of the measure, in a fixed order.
template <Field S>
std::vector<Rational> default_points(const Ensemble<S>& ens, std::size_t count = 8);

// Records in suite definition order. NonNormal and inadmissible queries
// (ChainDepthExceeded, EnumerationCapExceeded) become skipped records; any other
// module error is a failed record naming the check.
template <Field S>
std::vector<CheckRecord> run_suite(const Ensemble<S>& ens, const std::string& suite, const VerifyOptions& options);

template <Field S>
ReportDocument verify(const Ensemble<S>& ens, const VerifyOptions& options);

// Closed form against the brute determinant for every shape with |xs| <= max_size,
// `instances` random rational configurations each.
template <Field S>
std::vector<CheckRecord> cauchy_vandermonde_checks(std::uint64_t seed, int instances, int max_size = 6);

}  // namespace mopkit

#endif  // MOPKIT_VERIFY_HPP
