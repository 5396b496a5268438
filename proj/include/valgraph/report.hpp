#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "valgraph/graph.hpp"
#include "valgraph/level.hpp"
#include "valgraph/order.hpp"
#include "valgraph/spec.hpp"
#include "valgraph/vallab.hpp"

namespace valgraph {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "valgraph-report/1";

const std::vector<std::string>& analysis_names();

struct AnalysisRequest {
  std::string analysis;  // graph | axioms | order | classify | theorems | eth | valuation | all
  std::string spec_path;
  std::string out_dir;   // empty: no files written
  std::optional<int> window;
  std::optional<long> delta_bound;
  std::optional<std::string> y, x;
  bool timing = false;
};

enum class Status { Pass, Fail, Inconclusive, NotApplicable };
const char* status_name(Status s);

struct RunOutcome {
  Json report;
  int exit_code = 0;
  std::map<std::string, std::string> dot;  // file name -> contents
  std::vector<std::string> diagnostics;
};

// 0 certified pass, 1 assertion failure, 2 inconclusive only, 3 spec/usage error
RunOutcome run_analysis(const AnalysisRequest& req);
// also writes report.json and the DOT files into req.out_dir
RunOutcome run_and_write(const AnalysisRequest& req);

// serializers
Json graph_json(const QuotientGraph& g, const std::string& name);
Json axioms_json(const AxiomReport& r);
Json quotient_json(const OrderedQuotient& oq, size_t max_reps = 64);
Json level_json(const LevelReport& r, const OrderedQuotient& oq);
Json theorem_json(const TheoremReport& r);
Json eth_json(const EthReport& r, const QuotientGraph& g);

}  // namespace valgraph
