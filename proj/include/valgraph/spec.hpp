#pragma once

#include <map>
#include <string>
#include <vector>

#include "valgraph/model.hpp"

namespace valgraph {

// key = value lines, '#' comments. Keys are validated against the kind.
struct ModelSpec {
  std::string kind;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string get(const std::string& key, const std::string& dflt) const;
  long get_int(const std::string& key, long dflt) const;
  std::vector<long> get_int_list(const std::string& key) const;
};

ModelSpec parse_spec_text(const std::string& text);
ModelSpec load_spec_file(const std::string& path);

// kinds: finite-field, laurent-local, function-field, rational-congruence,
// quaternion (kappa presentations are handled by the graph module)
ModelPtr build_model(const ModelSpec& spec);

}  // namespace valgraph
