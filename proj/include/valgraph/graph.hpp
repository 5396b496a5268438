#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valgraph/model.hpp"

namespace valgraph {

// Finite group on labels 0..n-1, identity 0.
struct GroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<std::string> names;

  int op(int a, int b) const { return mul[a][b]; }
  int order_of(int a) const;
  bool commute(int a, int b) const { return mul[a][b] == mul[b][a]; }
  // checks closure, identity, inverses, associativity; TableInconsistent
  void validate() const;
};

GroupTable group_from_model(const Model& m);
GroupTable cyclic_group(int n);
// 0 = id, 1 = (12), 2 = (13), 3 = (23), 4 = (123), 5 = (132)
GroupTable symmetric3();
// label a*|B|+b
GroupTable direct_product(const GroupTable& A, const GroupTable& B);
// order -> count, sorted by order
std::vector<std::pair<int, int>> order_profile(const GroupTable& g);
// a group isomorphism from a to b if one exists (small groups only)
std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b);

enum class EdgeRule { Commuting, SteinbergBrute, SteinbergClosure, KappaPairing, CentralizerClosure, Explicit };
const char* rule_name(EdgeRule r);

constexpr int kInf = INT_MAX;

// Vertices are the labels 1..order-1; label 0 is the identity coset.
struct QuotientGraph {
  int order = 1;
  std::vector<std::vector<char>> adj;
  EdgeRule rule = EdgeRule::Explicit;
  std::vector<std::string> names;
  std::shared_ptr<const GroupTable> group;

  int num_vertices() const { return order - 1; }
  bool edge(int a, int b) const { return adj[a][b] != 0; }
  // d <= 1
  bool near(int a, int b) const { return a == b || adj[a][b]; }
  int num_edges() const;
  void set_edge(int a, int b, bool on);
};

QuotientGraph empty_graph(int order, EdgeRule rule);
QuotientGraph build_commuting_graph(const GroupTable& g);
// raw: edge iff 1 in a* + b*; closure: edge iff the symbol vanishes in the
// bilinear quotient of G (x) G by the raw relations (cyclic quotients)
QuotientGraph build_milnor_graph(const Model& m, bool closure = false);
// pairs (a*, b*) of nontrivial cosets with 1 in a* + b*, a* == b* included
std::vector<std::pair<int, int>> steinberg_pairs(const Model& m);

// kappa presentation: each factor is (Z/2)^2 with generators (unit, uniformizer)
struct KappaPresentation {
  int factors = 2;
};
QuotientGraph build_kappa_graph(const KappaPresentation& p);
int kappa_label(const std::vector<int>& components);
std::string kappa_name(int label, int factors);
// swap of the first two factors
int kappa_swap(int label, int factors);

QuotientGraph build_min_centralizer_vgraph(const Model& m);

// metrics
std::vector<int> bfs(const QuotientGraph& g, int src);
std::vector<std::vector<int>> all_pairs_bfs(const QuotientGraph& g);
std::vector<std::vector<int>> floyd_warshall(const QuotientGraph& g);
int diameter(const std::vector<std::vector<int>>& dist);
int diameter_bfs(const QuotientGraph& g);
int diameter_fw(const QuotientGraph& g);
std::vector<int> eccentricities(const QuotientGraph& g);
// simple paths with exactly len edges from u to v, len <= 6
std::vector<std::vector<int>> paths_of_length(const QuotientGraph& g, int u, int v, int len);
bool is_path(const QuotientGraph& g, const std::vector<int>& seq);
std::string dist_str(int d);

enum class Verdict { Pass, Fail, NotApplicable };
const char* verdict_name(Verdict v);

struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::NotApplicable;
  bool sampled = false;  // infinite model: checked on samples only
  long checked = 0;
  std::vector<std::string> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;  // V1, V1', V2, V3, V3', V3''
  const AxiomResult& get(const std::string& axiom) const;
  bool all_pass() const;  // NotApplicable counts as pass
};

// model may be null; V1/V1' then not applicable
AxiomReport check_vgraph_axioms(const Model* m, const QuotientGraph& g, int samples = 400, unsigned long seed = 1);

// removes each edge in turn; returns the number of mutants where some axiom
// fails, and the first mutant without a failing axiom (if any)
struct MutationSummary {
  int mutants = 0;
  int caught = 0;
  std::vector<std::pair<int, int>> escaped;
};
MutationSummary edge_removal_mutations(const Model* m, const QuotientGraph& g);

std::string to_dot(const QuotientGraph& g, const std::string& name);

}  // namespace valgraph
