#include "mopkit/spec_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mopkit {

namespace {

using nlohmann::json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// nlohmann does not keep value positions, so semantic errors are located by finding
// the quoted keys of the path in order. Good enough for hand-written documents.
class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) const {
    std::size_t offset = 0;
    bool found = false;
    for (const auto& key : path) {
      const auto at = text_.find("\"" + key + "\"", offset);
      if (at == std::string::npos) break;
      offset = at;
      found = true;
    }
    std::string where;
    for (const auto& key : path) where += (where.empty() ? "" : ".") + key;
    if (!found) throw ParseError(where + ": " + what);
    const auto pos = position_of(text_, offset);
    throw ParseError(where + ": " + what, pos.line, pos.column);
  }

  std::string rational(const json& v, const std::vector<std::string>& path) const {
    if (v.is_number_integer()) return to_string(Rational(v.get<long long>()));
    if (!v.is_string()) fail(path, "expected a rational string such as \"3/4\"");
    try {
      return to_string(parse_rational(v.get<std::string>()));
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }

  std::vector<std::string> rationals(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_array()) fail(path, "expected a list of rationals");
    std::vector<std::string> out;
    for (const auto& item : v) out.push_back(rational(item, path));
    return out;
  }

  std::vector<std::vector<std::string>> rational_lists(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_array()) fail(path, "expected a list of coefficient lists");
    std::vector<std::vector<std::string>> out;
    for (const auto& item : v) out.push_back(rationals(item, path));
    return out;
  }

  int integer(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  std::vector<int> integers(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_array()) fail(path, "expected a list of integers");
    std::vector<int> out;
    for (const auto& item : v) out.push_back(integer(item, path));
    return out;
  }

  std::vector<std::vector<int>> integer_lists(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_array()) fail(path, "expected a list of multi-indices");
    std::vector<std::vector<int>> out;
    for (const auto& item : v) out.push_back(integers(item, path));
    return out;
  }

  std::string string(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  void only_keys(const json& obj, const std::set<std::string>& allowed, const std::vector<std::string>& path) const {
    for (const auto& [key, value] : obj.items()) {
      if (!allowed.contains(key)) {
        auto p = path;
        p.push_back(key);
        fail(p, "unknown key");
      }
    }
  }

 private:
  const std::string& text_;
};

void validate(const SpecDocument& doc, const Reader& r) {
  if (doc.p < 1) r.fail({"p"}, "must be at least 1");
  if (doc.q < 1) r.fail({"q"}, "must be at least 1");
  if (doc.field != "exact" && doc.field != "float") r.fail({"field"}, "must be \"exact\" or \"float\"");
  if (!(doc.tol > 0)) r.fail({"tol"}, "must be positive");
  if (doc.enum_cap == 0) r.fail({"enum_cap"}, "must be positive");

  const auto p = static_cast<std::size_t>(doc.p);
  const auto q = static_cast<std::size_t>(doc.q);
  if (doc.preset) {
    if (doc.exact()) r.fail({"measure", "preset"}, "quadrature presets need field \"float\"");
    if (doc.preset->family != "gauss-hermite" && doc.preset->family != "gauss-legendre")
      r.fail({"measure", "preset"}, "unknown preset \"" + doc.preset->family + "\"");
    if (doc.preset->points < 1) r.fail({"measure", "points"}, "must be at least 1");
  } else {
    if (doc.nodes.empty()) r.fail({"measure"}, "needs nodes and masses or a preset");
    if (doc.nodes.size() != doc.masses.size()) r.fail({"measure", "masses"}, "must match the number of nodes");
    std::set<std::string> seen;
    for (const auto& x : doc.nodes)
      if (!seen.insert(x).second) r.fail({"measure", "nodes"}, "node " + x + " is repeated");
  }

  if (doc.weights.empty()) {
    if (doc.w1.size() != p) r.fail({"w1"}, "needs p coefficient lists");
    if (doc.w2.size() != q) r.fail({"w2"}, "needs q coefficient lists");
    if (!doc.w1_exp.empty() && doc.w1_exp.size() != p) r.fail({"w1_exp"}, "needs p rates");
    if (!doc.w2_exp.empty() && doc.w2_exp.size() != q) r.fail({"w2_exp"}, "needs q rates");
    auto nonzero = [](const std::vector<std::string>& rates) {
      for (const auto& a : rates)
        if (a != "0") return true;
      return false;
    };
    if (doc.exact() && nonzero(doc.w1_exp)) r.fail({"w1_exp"}, "exponential factors need field \"float\"");
    if (doc.exact() && nonzero(doc.w2_exp)) r.fail({"w2_exp"}, "exponential factors need field \"float\"");
  } else {
    if (!doc.w1.empty() || !doc.w2.empty()) r.fail({"weights"}, "give either w1/w2 or weights, not both");
    if (doc.weights.size() != p * q) r.fail({"weights"}, "needs p*q coefficient lists");
  }

  if (doc.n.size() != p) r.fail({"n"}, "needs p components");
  if (doc.m.size() != q) r.fail({"m"}, "needs q components");
  try {
    doc.pair().validate();
  } catch (const MopError& e) {
    r.fail({"n"}, e.what());
  }
  if (!doc.pair().balanced()) r.fail({"n"}, "|n| must equal |m|");
  for (const auto& c : doc.chain_up)
    if (c.size() != q) r.fail({"chain_up"}, "entries must have q components");
  for (const auto& c : doc.chain_down)
    if (c.size() != p) r.fail({"chain_down"}, "entries must have p components");
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto pos = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // Drop nlohmann's own "[json.exception.parse_error.101] parse error at line.., column..:" prefix.
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(what, pos.line, pos.column);
  }
  Reader r(text);
  if (!root.is_object()) r.fail({}, "a spec document is a JSON object");
  r.only_keys(root,
              {"name", "p", "q", "field", "tol", "enum_cap", "measure", "w1", "w2", "w1_exp", "w2_exp", "weights", "n",
               "m", "chain_up", "chain_down", "expect_normal", "eval_points"},
              {});

  SpecDocument doc;
  if (root.contains("name")) doc.name = r.string(root["name"], {"name"});
  if (!root.contains("p") || !root.contains("q")) r.fail({}, "p and q are required");
  doc.p = r.integer(root["p"], {"p"});
  doc.q = r.integer(root["q"], {"q"});
  if (root.contains("field")) doc.field = r.string(root["field"], {"field"});
  if (root.contains("tol")) {
    if (!root["tol"].is_number()) r.fail({"tol"}, "expected a number");
    doc.tol = root["tol"].get<double>();
  }
  if (root.contains("enum_cap")) {
    if (!root["enum_cap"].is_number_unsigned()) r.fail({"enum_cap"}, "expected a positive integer");
    doc.enum_cap = root["enum_cap"].get<std::uint64_t>();
  }

  if (!root.contains("measure") || !root["measure"].is_object()) r.fail({"measure"}, "a measure object is required");
  const json& measure = root["measure"];
  if (measure.contains("preset")) {
    r.only_keys(measure, {"preset", "points", "lower", "upper"}, {"measure"});
    PresetSpec preset;
    preset.family = r.string(measure["preset"], {"measure", "preset"});
    if (!measure.contains("points")) r.fail({"measure", "preset"}, "a preset needs a number of points");
    preset.points = r.integer(measure["points"], {"measure", "points"});
    if (measure.contains("lower")) preset.lower = r.rational(measure["lower"], {"measure", "lower"});
    if (measure.contains("upper")) preset.upper = r.rational(measure["upper"], {"measure", "upper"});
    doc.preset = preset;
  } else {
    r.only_keys(measure, {"nodes", "masses"}, {"measure"});
    if (!measure.contains("nodes") || !measure.contains("masses"))
      r.fail({"measure"}, "needs nodes and masses or a preset");
    doc.nodes = r.rationals(measure["nodes"], {"measure", "nodes"});
    doc.masses = r.rationals(measure["masses"], {"measure", "masses"});
  }

  if (root.contains("w1")) doc.w1 = r.rational_lists(root["w1"], {"w1"});
  if (root.contains("w2")) doc.w2 = r.rational_lists(root["w2"], {"w2"});
  if (root.contains("w1_exp")) doc.w1_exp = r.rationals(root["w1_exp"], {"w1_exp"});
  if (root.contains("w2_exp")) doc.w2_exp = r.rationals(root["w2_exp"], {"w2_exp"});
  if (root.contains("weights")) doc.weights = r.rational_lists(root["weights"], {"weights"});
  if (!root.contains("n") || !root.contains("m")) r.fail({}, "n and m are required");
  doc.n = r.integers(root["n"], {"n"});
  doc.m = r.integers(root["m"], {"m"});
  if (root.contains("chain_up")) doc.chain_up = r.integer_lists(root["chain_up"], {"chain_up"});
  if (root.contains("chain_down")) doc.chain_down = r.integer_lists(root["chain_down"], {"chain_down"});
  if (root.contains("expect_normal")) {
    if (!root["expect_normal"].is_boolean()) r.fail({"expect_normal"}, "expected true or false");
    doc.expect_normal = root["expect_normal"].get<bool>();
  }
  if (root.contains("eval_points")) doc.eval_points = r.rationals(root["eval_points"], {"eval_points"});

  validate(doc, r);
  return doc;
}

SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidArgument, "cannot open spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string serialize_spec(const SpecDocument& doc) {
  nlohmann::ordered_json out;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["p"] = doc.p;
  out["q"] = doc.q;
  out["field"] = doc.field;
  out["tol"] = doc.tol;
  out["enum_cap"] = doc.enum_cap;
  if (doc.preset) {
    out["measure"] = {{"preset", doc.preset->family},
                      {"points", doc.preset->points},
                      {"lower", doc.preset->lower},
                      {"upper", doc.preset->upper}};
  } else {
    out["measure"] = {{"nodes", doc.nodes}, {"masses", doc.masses}};
  }
  if (!doc.w1.empty()) out["w1"] = doc.w1;
  if (!doc.w2.empty()) out["w2"] = doc.w2;
  if (!doc.w1_exp.empty()) out["w1_exp"] = doc.w1_exp;
  if (!doc.w2_exp.empty()) out["w2_exp"] = doc.w2_exp;
  if (!doc.weights.empty()) out["weights"] = doc.weights;
  out["n"] = doc.n;
  out["m"] = doc.m;
  if (!doc.chain_up.empty()) out["chain_up"] = doc.chain_up;
  if (!doc.chain_down.empty()) out["chain_down"] = doc.chain_down;
  if (doc.expect_normal) out["expect_normal"] = *doc.expect_normal;
  if (!doc.eval_points.empty()) out["eval_points"] = doc.eval_points;
  return out.dump(2) + "\n";
}

void apply_environment(SpecDocument& doc) {
  if (const char* cap = std::getenv("MOPKIT_ENUM_CAP"); cap != nullptr && *cap != '\0') {
    char* end = nullptr;
    const auto value = std::strtoull(cap, &end, 10);
    if (*end != '\0' || value == 0) raise(ErrorKind::InvalidArgument, std::string("bad MOPKIT_ENUM_CAP: ") + cap);
    doc.enum_cap = value;
  }
  if (const char* tol = std::getenv("MOPKIT_TOL"); tol != nullptr && *tol != '\0') {
    char* end = nullptr;
    const double value = std::strtod(tol, &end);
    if (*end != '\0' || !(value > 0)) raise(ErrorKind::InvalidArgument, std::string("bad MOPKIT_TOL: ") + tol);
    doc.tol = value;
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

template <Field S>
Ensemble<S> build_ensemble(const SpecDocument& doc) {
  auto embed_all = [](const std::vector<std::string>& items) {
    std::vector<S> out;
    for (const auto& r : parse_rationals(items)) out.push_back(embed<S>(r));
    return out;
  };
  auto weight = [&](const std::vector<std::string>& coeffs, const std::vector<std::string>& rates, std::size_t i) {
    const double rate = rates.empty() ? 0.0 : parse_rational(rates[i]).convert_to<double>();
    return WeightFunction<S>(Polynomial<S>(embed_all(coeffs)), rate);
  };

  std::optional<DiscreteMeasure<S>> measure;
  if (doc.preset) {
    if constexpr (is_exact_v<S>) {
      raise(ErrorKind::InvalidArgument, "quadrature presets are only available on the float field");
    } else {
      QuadratureParams params;
      params.lower = parse_rational(doc.preset->lower).convert_to<double>();
      params.upper = parse_rational(doc.preset->upper).convert_to<double>();
      measure.emplace(quadrature_preset(doc.preset->family, doc.preset->points, params));
    }
  } else {
    measure.emplace(embed_all(doc.nodes), embed_all(doc.masses));
  }

  const auto p = static_cast<std::size_t>(doc.p);
  const auto q = static_cast<std::size_t>(doc.q);
  std::optional<WeightMatrix<S>> weights;
  if (doc.weights.empty()) {
    WeightSystem<S> system;
    for (std::size_t k = 0; k < p; ++k) system.w1.push_back(weight(doc.w1[k], doc.w1_exp, k));
    for (std::size_t l = 0; l < q; ++l) system.w2.push_back(weight(doc.w2[l], doc.w2_exp, l));
    weights.emplace(WeightMatrix<S>::rank_one(std::move(system)));
  } else {
    std::vector<WeightFunction<S>> entries;
    for (const auto& c : doc.weights) entries.emplace_back(Polynomial<S>(embed_all(c)));
    weights.emplace(WeightMatrix<S>::general(p, q, std::move(entries)));
  }

  Ensemble<S> ens(std::move(*weights), std::move(*measure), doc.pair(), doc.tol);
  if (!doc.chain_up.empty() || !doc.chain_down.empty()) return ens.with_chain(doc.chain());
  return ens;
}

template Ensemble<Rational> build_ensemble<Rational>(const SpecDocument&);
template Ensemble<Complex> build_ensemble<Complex>(const SpecDocument&);

}  // namespace mopkit
