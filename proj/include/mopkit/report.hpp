#ifndef MOPKIT_REPORT_HPP
#define MOPKIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mopkit/matrix.hpp"

namespace mopkit {

enum class CheckStatus { pass, fail, skipped };

const char* status_name(CheckStatus status);

struct CheckRecord {
  std::string check;
  // Identifies the identity being exercised, in words.
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  double max_error = 0.0;
  double runtime = 0.0;  // seconds
  CheckStatus status = CheckStatus::fail;
  std::string detail;

  // Entries of lhs as complex doubles, for comparing an exact run with a float run.
  std::vector<Complex> lhs_values;
};

struct ReportDocument {
  std::string spec;
  std::string field;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::vector<CheckRecord> records;

  bool failed() const;
  std::size_t count(CheckStatus status) const;
  std::string to_json() const;
};

// Text forms used in records: rationals as "a/b", floats with 17 significant digits.
template <Field S>
std::string format_value(const S& v) {
  return to_string(v);
}
template <Field S>
std::string format_value(const FieldMatrix<S>& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace mopkit

#endif  // MOPKIT_REPORT_HPP
