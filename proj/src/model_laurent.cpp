#include <map>

#include "valgraph/model.hpp"
#include "valgraph/textparse.hpp"

namespace valgraph {

namespace {
long mod_floor(long a, long m) { return ((a % m) + m) % m; }
}  // namespace

LaurentModel::LaurentModel(unsigned q, int e, int k, int guard) : f_(q), e_(e), k_(k), ar_{&f_, k, guard} {
  if (e < 1) fail(ErrorCode::SpecInvalid, "e must be >= 1");
  if (k < guard + 2) fail(ErrorCode::SpecInvalid, "precision k must exceed the guard");
  if (f_.neg(1) != 1) fail(ErrorCode::SpecInvalid, "-1 lies in 1+tO only in characteristic 2");
  if (e * (q - 1) < 2) fail(ErrorCode::SpecInvalid, "N would be all of D^x");
  finalize_cosets(e * static_cast<int>(q - 1), {t_pow(1), series({f_.gen()}, 0)});
}

std::string LaurentModel::describe() const {
  return "LaurentLocal(" + std::to_string(f_.q()) + "," + std::to_string(e_) + "," + std::to_string(k_) + ")";
}

Element LaurentModel::one() const { return ar_.monomial(1, 0); }
Element LaurentModel::add(const Element& a, const Element& b) const {
  return ar_.add(std::get<Laurent>(a), std::get<Laurent>(b));
}
Element LaurentModel::neg(const Element& a) const { return ar_.neg(std::get<Laurent>(a)); }
Element LaurentModel::mul(const Element& a, const Element& b) const {
  return ar_.mul(std::get<Laurent>(a), std::get<Laurent>(b));
}
Element LaurentModel::inv(const Element& a) const { return ar_.inv(std::get<Laurent>(a)); }

Element LaurentModel::series(const std::vector<unsigned>& coeffs, long shift) const {
  return ar_.from_poly(coeffs, shift);
}

Element LaurentModel::t_pow(long k) const { return ar_.monomial(1, k); }

bool LaurentModel::in_n(const Element& x) const {
  const auto& s = std::get<Laurent>(x);
  if (s.is_zero()) fail(ErrorCode::DivisionByZero, "membership of 0");
  return mod_floor(s.val, e_) == 0 && s.c[0] == 1;
}

int LaurentModel::coset_of(const Element& x) const {
  const auto& s = std::get<Laurent>(x);
  if (s.is_zero()) fail(ErrorCode::DivisionByZero, "coset of 0");
  return static_cast<int>(mod_floor(s.val, e_) * (f_.q() - 1) + f_.log(s.c[0]));
}

long LaurentModel::valuation(const Element& x, int) const {
  const auto& s = std::get<Laurent>(x);
  if (s.is_zero()) fail(ErrorCode::DivisionByZero, "valuation of 0");
  return s.val;
}

unsigned LaurentModel::residue(const Element& x, int) const {
  const auto& s = std::get<Laurent>(x);
  if (s.is_zero() || s.val != 0) fail(ErrorCode::NotAUnit, ar_.str(s));
  return s.c[0];
}

std::vector<Element> LaurentModel::n_window(const WindowSpec& w) const {
  std::vector<Element> units;
  unsigned q = f_.q();
  long combos = 1;
  for (int i = 0; i < w.depth; ++i) combos *= q;
  for (long c = 0; c < combos; ++c) {
    std::vector<unsigned> coeffs{1};
    long t = c;
    for (int i = 0; i < w.depth; ++i) {
      coeffs.push_back(static_cast<unsigned>(t % q));
      t /= q;
    }
    units.push_back(series(coeffs, 0));
  }
  units.push_back(inv(series({1, 1}, 0)));
  std::vector<Element> r;
  for (long j = -w.radius; j <= w.radius; ++j) {
    Element tj = t_pow(j * e_);
    for (const auto& u : units) r.push_back(mul(tj, u));
  }
  return r;
}

Element LaurentModel::random_element(std::mt19937_64& rng) const {
  long v = static_cast<long>(rng() % 13) - 6;
  std::vector<unsigned> coeffs{1 + static_cast<unsigned>(rng() % (f_.q() - 1))};
  for (int i = 0; i < 3; ++i) coeffs.push_back(static_cast<unsigned>(rng() % f_.q()));
  return series(coeffs, v);
}

Element LaurentModel::parse_literal(const std::string& text) const {
  auto terms = parse_poly_terms(text, true);
  if (terms.empty()) return Laurent{};
  long lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<unsigned> coeffs(static_cast<size_t>(hi - lo + 1), 0);
  for (auto& [k, c] : terms) {
    if (c >= f_.q()) fail(ErrorCode::Usage, "coefficient code out of range in '" + text + "'");
    coeffs[k - lo] = f_.add(coeffs[k - lo], c);
  }
  return series(coeffs, lo);
}

}  // namespace valgraph
