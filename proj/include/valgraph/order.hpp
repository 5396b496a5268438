#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgraph/model.hpp"

namespace valgraph {

enum class Cert { Certified, WindowCertified, Inconclusive };
const char* cert_name(Cert c);
Cert weakest(Cert a, Cert b);

// value of phi: valuation vector / e for local models, class index for finite ones
using Gamma = std::vector<long>;
std::string gamma_str(const Gamma& g);
// graded-lex: total degree first, then lexicographic
bool graded_lex_less(const Gamma& a, const Gamma& b);

// a + b is a nonzero element of N
bool sum_in_n(const Model& m, const Element& a, const Element& b);
// y lies outside N_i at every place, so N(y) is a box in valuation space
bool has_closed_form(const Model& m, const Element& y);

struct NWindow {
  WindowSpec spec;
  std::vector<Element> elems;
  bool exhaustive = false;  // all of N
};
NWindow make_window(const Model& m, const WindowSpec& w);

// N(y) = {n in N : y + n in N}, restricted to the window
struct NSetView {
  Element y;
  std::vector<char> member;
  std::vector<char> closed;  // closed-form prediction, empty when not applicable
  long mismatches = 0;
  long precision_failures = 0;
  Cert cert = Cert::Inconclusive;
  size_t count() const;
  bool empty() const { return count() == 0; }
};
NSetView n_set(const Model& m, const Element& y, const NWindow& w);

// P = N(y)^-1 y, also computed as y N(y)^-1
struct PSet {
  std::vector<Element> left;
  std::vector<Element> right;
  bool agree = false;
  Cert cert = Cert::Inconclusive;
};
PSet p_set(const Model& m, const Element& y, const NWindow& w);
// b in Ny and 1 in N(b)
bool in_p(const Model& m, const Element& y, const Element& b);

enum class RelMethod { Brute, Closed, Both };
struct RelResult {
  bool value = false;
  Cert cert = Cert::Inconclusive;
  bool disagree = false;  // Both: brute was decisive and differed
  std::string witness;    // k in N(my) \ N(ny)
};
// m P n  <=>  N(my) subset of N(ny)
RelResult rel_p(const Model& model, const Element& y, const Element& m, const Element& n, const NWindow& w,
                RelMethod method);

// Gamma = N/U ordered by P, for a fixed y.
class OrderedQuotient {
 public:
  enum class Kind { Finite, Local };
  // YInN if y in N; HypothesisNotMet if N(y) is empty or no description applies
  OrderedQuotient(ModelPtr model, const Element& y, const WindowSpec& w);

  Kind kind() const { return kind_; }
  const Model& model() const { return *model_; }
  ModelPtr model_ptr() const { return model_; }
  const Element& y() const { return y_; }
  const NWindow& window() const { return window_; }
  const NSetView& nset() const { return nset_; }
  Cert cert() const { return kind_ == Kind::Finite ? Cert::Certified : Cert::WindowCertified; }
  int rank() const { return kind_ == Kind::Finite ? 0 : model_->num_places(); }

  Gamma phi(const Element& n) const;
  Gamma zero() const;
  bool leq(const Gamma& a, const Gamma& b) const;
  bool lt(const Gamma& a, const Gamma& b) const { return a != b && leq(a, b); }
  bool comparable(const Gamma& a, const Gamma& b) const { return leq(a, b) || leq(b, a); }
  Gamma add(const Gamma& a, const Gamma& b) const;
  Gamma neg(const Gamma& a) const;
  bool in_u(const Element& n) const { return phi(n) == zero(); }
  int num_classes() const { return static_cast<int>(class_rep_.size()); }  // finite only
  // distinct values of phi over the window, graded-lex sorted
  std::vector<Gamma> window_values() const;
  std::string str(const Gamma& g) const;

  // local kind: U from the closed form vs N(ny) == N(y) on the window
  long u_mismatches(const NWindow& sample) const;

 private:
  ModelPtr model_;
  Element y_;
  NWindow window_;
  NSetView nset_;
  Kind kind_ = Kind::Finite;
  // finite data
  std::map<std::string, int> class_of_;
  std::vector<Element> class_rep_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> add_;
  std::vector<int> neg_;
  int zero_ = 0;
};

// the seven equivalent formulations of m P n
struct SevenConditionsResult {
  std::array<bool, 7> cond{};
  bool phi_evaluated = true;  // condition 2 needs Gamma; skipped when N(y) is empty
  bool agree = false;
};
// y' ranges over k*y with k in `ys` (all of N when exhaustive)
SevenConditionsResult seven_conditions(const OrderedQuotient& oq, const Element& m, const Element& n, const NWindow& ys);
// without Gamma: condition 2 is copied from condition 1 and flagged
SevenConditionsResult seven_conditions_raw(const Model& model, const Element& y, const Element& m, const Element& n, const NWindow& w,
                          const NWindow& ys);

struct Subgroup {
  std::string name;
  std::function<bool(const Element&)> contains;
};
Subgroup whole_n(const Model& m);
// elements of N fixed by the place swap
Subgroup swap_fixed(const Model& m);

struct InIncResult {
  bool in_rs = false;   // In_M(r, s)
  bool inc_sr = false;  // Inc(s, r)
  bool inc_rs = false;  // Inc(r, s)
  bool implication_ok = false;  // In => Inc(s,r) or Inc(r,s)
  long pairs = 0;
  Cert cert = Cert::Inconclusive;
};
// Ndot(a) = N(a) intersect M over `w`; a ranges over k*r, k in `sub`
InIncResult check_in_inc(const Model& model, const Subgroup& M, const Element& r, const Element& s, const NWindow& w,
                         const NWindow& sub);

struct TotalOrderResult {
  bool total = true;
  std::optional<std::pair<std::string, std::string>> witness;
  long checked = 0;
};
// phi restricted to window elements of M (all of N if M is null)
TotalOrderResult is_totally_ordered(const OrderedQuotient& oq, const Subgroup* M = nullptr);

struct IdentityCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  long checked = 0;
  long skipped = 0;  // precision failures
  std::string witness;
  std::string note;
};
struct IdentityReport {
  std::vector<IdentityCheck> checks;
  std::optional<bool> n_minus_n;  // D = N - N, decided on finite kinds only
  Cert cert = Cert::Inconclusive;
  bool all_pass() const;
  const IdentityCheck* find(const std::string& name) const;
};
// basic identities of N(y) for each y in ys; n and k range over w, x over xs
IdentityReport identity_suite(const Model& m, const std::vector<Element>& ys, const NWindow& w,
                              const std::vector<Element>& xs, size_t max_n = 8);
// every unit is a difference of two elements of N
bool n_minus_n_covers(const Model& m);

}  // namespace valgraph
