#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgraph/graph.hpp"
#include "valgraph/order.hpp"

namespace valgraph {

enum class LevelMode { L, SL };
const char* level_mode_name(LevelMode m);

struct LevelCheck {
  Verdict verdict = Verdict::NotApplicable;  // NotApplicable: the level set is empty on the window
  Cert cert = Cert::Inconclusive;
  long checked = 0;
  std::vector<std::string> witness;
};

// L:  N_{<-alpha} + 1 inside N_{<-alpha}
// SL: 1 +- N_{>alpha} inside N_{<=0}
// With M, level sets are taken inside M and the images must stay in M.
LevelCheck check_level(const OrderedQuotient& oq, const Gamma& alpha, LevelMode mode, const Subgroup* M = nullptr);

// alpha >= 0 from the window, graded-lex for local kinds
std::vector<Gamma> level_candidates(const OrderedQuotient& oq);

struct LevelSearch {
  std::optional<Gamma> level;
  std::vector<std::pair<Gamma, LevelCheck>> candidates;
  bool monotone = true;  // every applicable beta >= level also passes
  Cert cert = Cert::Inconclusive;
};
LevelSearch find_level(const OrderedQuotient& oq, LevelMode mode, const Subgroup* M = nullptr);
inline LevelSearch find_s_level(const OrderedQuotient& oq, const Subgroup* M = nullptr) {
  return find_level(oq, LevelMode::SL, M);
}

struct LevelReport {
  std::string subgroup;
  bool leveled = false;
  std::optional<Gamma> level;
  bool strongly_leveled = false;
  std::optional<Gamma> s_level;
  bool total = false;
  std::optional<std::pair<std::string, std::string>> incomparable;
  bool valuation_like = false;
  bool strong_valuation_like = false;
  bool s_level_zero = false;
  bool sl_implies_l = true;  // checked on every candidate
  bool monotone = true;
  LevelSearch l_search, sl_search;
  Cert cert = Cert::Inconclusive;
};
LevelReport classify_map(const OrderedQuotient& oq, const Subgroup* M = nullptr);

struct TheoremCheck {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  Cert cert = Cert::Inconclusive;
  long checked = 0;
  std::string detail;
  bool asserted = true;  // false: reported only
};

struct TheoremReport {
  int distance = 0;
  bool hypothesis_met = false;
  std::vector<std::string> passing_sides;  // "y" and/or "x"
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
  const TheoremCheck* find(const std::string& name) const;
};

// instance checks of the distance theorems and the N(x+y), N(ab) and P_x/P_y identities
TheoremReport verify_diameter_theorems(ModelPtr model, const QuotientGraph& g, const Element& x, const Element& y,
                                       const WindowSpec& w, int samples = 3);

struct EthSigma {
  std::string name;
  std::vector<int> perm;                         // action on coset labels
  std::function<Element(const Element&)> map;    // element action, optional
};

struct EthConfig {
  std::vector<EthSigma> sigma;
  std::optional<Subgroup> M;
  int x = 0, y = 0;
  int affine_samples = 40;
  unsigned long seed = 7;
};

struct EthPath {
  std::vector<int> path;
  std::optional<std::string> sigma;  // witness
};

struct EthReport {
  int distance = 0;
  bool holds = false;
  std::vector<EthPath> paths;
  Verdict affine = Verdict::NotApplicable;
  long affine_checked = 0;
};

// AffineRuleViolated if some sigma breaks sigma(a+k)* = (sigma(a)+k)* on a sample,
// HypothesisNotMet if d(x*, y*) < 3
EthReport check_eth(const Model* model, const QuotientGraph& g, const EthConfig& cfg);

// sigma on labels induced by an element map
std::vector<int> induced_perm(const Model& m, const std::function<Element(const Element&)>& f);
// N intersected with the rationals (central); quaternion model only
Subgroup rational_part(const Model& m);

}  // namespace valgraph
