#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgraph/order.hpp"

namespace valgraph {

// v = (sign_i * w_{place_i}) : D^x -> Z^r
struct ValuationHandle {
  std::string name;
  std::vector<int> places;
  std::vector<int> signs;
  std::vector<long> value(const Model& m, const Element& x) const;
};
ValuationHandle all_places(const Model& m);
ValuationHandle single_place(const Model& m, int place);
// sign of one place flipped
ValuationHandle negated(ValuationHandle v, int which);

struct SampleCheck {
  bool ok = true;
  long checked = 0;
  std::string witness;
};
// v(xy) = v(x) + v(y); v(x+y) >= min, with equality when v(x) != v(y) (per place)
SampleCheck valuation_axioms(const Model& m, const ValuationHandle& v, int samples = 200, unsigned long seed = 3);

// phi(n) >= 0  =>  v(n) >= 0 on every window element of N
struct AssocResult {
  bool holds = true;
  long checked = 0;
  std::string witness;
  Cert cert = Cert::Inconclusive;
};
AssocResult associated_check(const ValuationHandle& v, const OrderedQuotient& oq);

// an element with valuation 1 at every place
Element uniformizer_of(const Model& m);

struct OpennessWitness {
  long delta = 0;
  int place = 0;
  std::string x;
};
struct OpennessResult {
  std::string mode;  // find-delta | refute-single-place
  bool found = false;
  std::vector<long> delta;
  bool minimal = false;
  std::vector<OpennessWitness> witnesses;
  long bound = 0;
  long checked = 0;
  Cert cert = Cert::Inconclusive;
};
// least delta (graded scan) with 1 + m_T(delta) inside N on samples; SearchExhausted past the bound
OpennessResult find_delta(const Model& m, const ValuationHandle& v, long bound = 8, int samples = 60,
                          unsigned long seed = 5);
// for each place i and delta <= bound: x = 1 + c*(t - p_i)^(delta+1) outside N
OpennessResult refute_single_place(const FunctionFieldModel& m, long bound = 8);

struct EscapePrime {
  bool found = false;
  unsigned long modulus = 0;
  unsigned long k = 0;
  unsigned long p = 0;
  long h = 0;
  bool in_w = false;
  bool in_n = true;
};
// p = 1 + k*prod q_i^r_i prime; then h(p) = 1 and p escapes N
EscapePrime find_escape_prime(const RationalModel& m, const std::vector<std::pair<unsigned long, unsigned>>& moduli,
                              unsigned long kmax = 100000);

enum class RingKind { R, A };
struct RingWindow {
  RingKind kind = RingKind::R;
  Gamma alpha;
  int length = 0;
  size_t base_size = 0;
  std::vector<Element> members;
  bool fake_phi = false;
  bool minus_one = false;  // A only: must never happen for the true phi
  std::string minus_one_expr;
  std::optional<Gamma> gamma;  // R only: least gamma with R cap N inside N_{>-gamma}
  long members_in_n = 0;
  Cert cert = Cert::Inconclusive;
};
// signed sums of at most `length` base elements, base = N_{>=0} (R) or N_{>alpha} (A);
// alpha should be an s-level. Local base window: radius 1 for R, max(alpha)+2 for A
RingWindow generated_ring_window(const OrderedQuotient& oq, RingKind kind, const Gamma& alpha, int length = 2,
                                 bool fake_phi = false);

struct Decomposition {
  bool found = false;
  Element a, b;
  Element n1, n2;
  std::string route;
  std::vector<Element> a_terms;  // a = sum of a_terms, each in N_{>=0}
  bool verified = false;
};
// x = a b^-1 with a in R and b in N_{>=0}; DifferenceSearchExhausted if no x = n1 - n2 in the window
Decomposition decompose_ab_inverse(const OrderedQuotient& oq, const Element& x);

struct TurnwaldResult {
  bool found = false;
  Element c;
  long tried = 0;
  std::string route;
};
// c with 1 + c x_j in N for all j; SearchExhausted past the bound
TurnwaldResult turnwald_search(const Model& m, const std::vector<Element>& xs, long bound = 24);

// rank over the base field of the coordinate vectors, exact
int rank_over_base(const Model& m, const std::vector<Element>& xs);

struct BasisResult {
  bool inverse = false;  // elements of N(a)^-1
  std::vector<Element> elements;
  int rank = 0;
  bool all_members = false;
  Element c, s;
  int i0 = 0;
  long family = 0;
};
BasisResult basis_in_n_set(const QuaternionModel& m, const Element& a, bool inverse);

struct TameCertificate {
  bool certificate = false;
  long a = 0;
  unsigned l = 0, m = 0, g = 0;
  unsigned long exponent = 0;  // (l-1)/g
  unsigned long value = 0;     // a^exponent mod l
};
// nonvanishing certificate for {a, l}_N iff the residue of a is not an m-th power mod l
TameCertificate tame_symbol_certificate(const RationalModel& m, long a);

}  // namespace valgraph
