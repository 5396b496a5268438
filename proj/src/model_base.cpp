#include <deque>
#include <optional>

#include "valgraph/model.hpp"

namespace valgraph {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FactorizationTooLarge: return "FactorizationTooLarge";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotEnumerable: return "NotEnumerable";
    case ErrorCode::TableInconsistent: return "TableInconsistent";
    case ErrorCode::BadPresentation: return "BadPresentation";
    case ErrorCode::ClosureEscapesCentralizer: return "ClosureEscapesCentralizer";
    case ErrorCode::VertexMismatch: return "VertexMismatch";
    case ErrorCode::YInN: return "YInN";
    case ErrorCode::WindowInconclusive: return "WindowInconclusive";
    case ErrorCode::ConditionsDisagree: return "ConditionsDisagree";
    case ErrorCode::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::AffineRuleViolated: return "AffineRuleViolated";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::DifferenceSearchExhausted: return "DifferenceSearchExhausted";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

const char* kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::FiniteField: return "finite-field";
    case ModelKind::LaurentLocal: return "laurent-local";
    case ModelKind::FunctionField: return "function-field";
    case ModelKind::RationalCongruence: return "rational-congruence";
    case ModelKind::Quaternion: return "quaternion";
  }
  return "?";
}

Element Model::from_int(long n) const {
  Element r = add(one(), neg(one()));
  Element base = n < 0 ? neg(one()) : one();
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = add(r, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return r;
}

Element Model::pow(const Element& a, long k) const {
  Element base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Element Model::parse(const std::string& text) const {
  if (text.rfind("label:", 0) == 0) {
    int lab = -1;
    try {
      lab = std::stoi(text.substr(6));
    } catch (...) {
      fail(ErrorCode::Usage, "bad coset label '" + text + "'");
    }
    if (lab < 0 || lab >= index()) fail(ErrorCode::Usage, "coset label out of range: " + text);
    return reps_[lab];
  }
  return parse_literal(text);
}

long Model::valuation(const Element&, int) const { fail(ErrorCode::SpecInvalid, describe() + " has no places"); }
unsigned Model::residue(const Element&, int) const { fail(ErrorCode::SpecInvalid, describe() + " has no places"); }
bool Model::in_n_place(const Element&, int) const { fail(ErrorCode::SpecInvalid, describe() + " has no places"); }

std::vector<long> Model::valuations(const Element& x) const {
  std::vector<long> v;
  for (int i = 0; i < num_places(); ++i) v.push_back(valuation(x, i));
  return v;
}

std::vector<mpq_class> Model::coordinates(const Element&) const {
  fail(ErrorCode::SpecInvalid, describe() + " has no rational coordinates");
}

Element Model::swap(const Element&) const { fail(ErrorCode::SpecInvalid, describe() + " has no place swap"); }

void Model::set_reps(std::vector<Element> reps) {
  reps_ = std::move(reps);
  build_table();
}

void Model::finalize_cosets(int index, const std::vector<Element>& generators) {
  std::vector<std::optional<Element>> found(static_cast<size_t>(index));
  found[0] = one();
  std::deque<Element> frontier{one()};
  int count = 1;
  while (!frontier.empty() && count < index) {
    Element x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Element y = mul(x, g);
      int lab = coset_of(y);
      if (lab < 0 || lab >= index) fail(ErrorCode::Internal, "coset label out of range");
      if (!found[lab]) {
        found[lab] = y;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  if (count < index) fail(ErrorCode::Internal, describe() + ": generators reach only " + std::to_string(count) + " cosets");
  std::vector<Element> reps;
  for (auto& f : found) reps.push_back(*f);
  set_reps(std::move(reps));
}

void Model::build_table() {
  int n = index();
  for (int i = 0; i < n; ++i)
    if (coset_of(reps_[i]) != i) fail(ErrorCode::Internal, "representative label mismatch");
  table_.assign(n, std::vector<int>(n, 0));
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      table_[i][j] = coset_of(mul(reps_[i], reps_[j]));
      if (table_[i][j] == 0) inv_[i] = j;
    }
  for (int i = 0; i < n; ++i)
    if (inv_[i] < 0) fail(ErrorCode::TableInconsistent, "coset without inverse");
}

}  // namespace valgraph
