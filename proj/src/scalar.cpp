#include "mopkit/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "mopkit/errors.hpp"

namespace mopkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularPivot: return "SingularPivot";
    case ErrorKind::PoleOnSupport: return "PoleOnSupport";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::NonNormal: return "NonNormal";
    case ErrorKind::RequiresRankOne: return "RequiresRankOne";
    case ErrorKind::EqualArguments: return "EqualArguments";
    case ErrorKind::ChainDepthExceeded: return "ChainDepthExceeded";
    case ErrorKind::NegativeComponent: return "NegativeComponent";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::Parse: return "ParseError";
  }
  return "MopError";
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational literal: \"" + text + "\"");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(n, d);
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Complex& c) {
  char buf[64];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  }
  return buf;
}

}  // namespace mopkit
