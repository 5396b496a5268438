#include "valgraph/spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "valgraph/textparse.hpp"

namespace valgraph {

namespace {

const std::set<std::string> kCommon = {"kind",           "name",           "window",        "depth",
                                       "delta-bound",    "x",              "y",             "classify.subgroup",
                                       "classify.expect", "graph.expect-diameter", "eth.expect", "theorems.expect"};

const std::map<std::string, std::set<std::string>> kPerKind = {
    {"finite-field", {"q", "m"}},
    {"laurent-local", {"q", "e", "k", "guard"}},
    {"function-field", {"q", "e", "places"}},
    {"rational-congruence", {"m", "l", "factor-bound"}},
    {"quaternion", {"d", "sqrt-branch", "p0", "pmax", "guard"}},
    {"kappa", {"factors"}},
};

}  // namespace

std::string ModelSpec::get(const std::string& key, const std::string& dflt) const {
  auto it = values.find(key);
  return it == values.end() ? dflt : it->second;
}

long ModelSpec::get_int(const std::string& key, long dflt) const {
  auto it = values.find(key);
  if (it == values.end()) return dflt;
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw 0;
    return v;
  } catch (...) {
    fail(ErrorCode::SpecInvalid, "key '" + key + "' expects an integer, got '" + it->second + "'");
  }
}

std::vector<long> ModelSpec::get_int_list(const std::string& key) const {
  std::vector<long> out;
  std::stringstream ss(get(key, ""));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim_copy(item);
    try {
      size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw 0;
    } catch (...) {
      fail(ErrorCode::SpecInvalid, "key '" + key + "' expects a comma-separated integer list");
    }
  }
  return out;
}

ModelSpec parse_spec_text(const std::string& text) {
  ModelSpec spec;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::SpecInvalid, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim_copy(line.substr(0, eq));
    std::string val = trim_copy(line.substr(eq + 1));
    if (key.empty() || val.empty()) fail(ErrorCode::SpecInvalid, "line " + std::to_string(lineno) + ": empty key or value");
    if (spec.values.count(key)) fail(ErrorCode::SpecInvalid, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    spec.values[key] = val;
  }
  if (!spec.has("kind")) fail(ErrorCode::SpecInvalid, "missing 'kind'");
  spec.kind = spec.values["kind"];
  auto it = kPerKind.find(spec.kind);
  if (it == kPerKind.end()) fail(ErrorCode::SpecInvalid, "unknown kind '" + spec.kind + "'");
  for (const auto& [k, v] : spec.values)
    if (!kCommon.count(k) && !it->second.count(k)) fail(ErrorCode::SpecInvalid, "unknown key '" + k + "' for kind " + spec.kind);
  return spec;
}

ModelSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Usage, "cannot read spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

namespace {

long require(const ModelSpec& s, const std::string& key) {
  if (!s.has(key)) fail(ErrorCode::SpecInvalid, "kind " + s.kind + " requires key '" + key + "'");
  return s.get_int(key, 0);
}

unsigned positive(long v, const std::string& key) {
  if (v <= 0 || v > 100000000) fail(ErrorCode::SpecInvalid, "key '" + key + "' out of range");
  return static_cast<unsigned>(v);
}

}  // namespace

ModelPtr build_model(const ModelSpec& s) {
  if (s.kind == "finite-field")
    return std::make_shared<FiniteFieldModel>(positive(require(s, "q"), "q"), positive(require(s, "m"), "m"));
  if (s.kind == "laurent-local")
    return std::make_shared<LaurentModel>(positive(require(s, "q"), "q"), static_cast<int>(positive(require(s, "e"), "e")),
                                          static_cast<int>(positive(s.get_int("k", 8), "k")),
                                          static_cast<int>(positive(s.get_int("guard", 4), "guard")));
  if (s.kind == "function-field") {
    std::vector<unsigned> places;
    for (long p : s.get_int_list("places")) {
      if (p < 0) fail(ErrorCode::SpecInvalid, "place codes must be non-negative");
      places.push_back(static_cast<unsigned>(p));
    }
    return std::make_shared<FunctionFieldModel>(positive(require(s, "q"), "q"), places,
                                                static_cast<int>(positive(require(s, "e"), "e")));
  }
  if (s.kind == "rational-congruence")
    return std::make_shared<RationalModel>(positive(require(s, "m"), "m"), positive(require(s, "l"), "l"),
                                           static_cast<unsigned long>(positive(s.get_int("factor-bound", 1000000), "factor-bound")));
  if (s.kind == "quaternion") {
    PrecisionPolicy pol;
    pol.p0 = static_cast<int>(s.get_int("p0", 32));
    pol.pmax = static_cast<int>(s.get_int("pmax", 4096));
    pol.guard = static_cast<int>(s.get_int("guard", 4));
    return std::make_shared<QuaternionModel>(require(s, "d"), static_cast<int>(s.get_int("sqrt-branch", 1)), pol);
  }
  fail(ErrorCode::SpecInvalid, "kind '" + s.kind + "' does not describe a ring model");
}

}  // namespace valgraph
