#include <set>

#include "valgraph/model.hpp"
#include "valgraph/textparse.hpp"

namespace valgraph {

namespace {
long mod_floor(long a, long m) { return ((a % m) + m) % m; }
}  // namespace

FunctionFieldModel::FunctionFieldModel(unsigned q, std::vector<unsigned> places, int e)
    : f_(q), places_(std::move(places)), e_(e) {
  if (places_.empty()) fail(ErrorCode::SpecInvalid, "at least one place required");
  std::set<unsigned> seen;
  for (unsigned p : places_) {
    if (p >= q) fail(ErrorCode::SpecInvalid, "place code out of range");
    if (!seen.insert(p).second) fail(ErrorCode::SpecInvalid, "places must be distinct");
  }
  if (e < 1) fail(ErrorCode::SpecInvalid, "e must be >= 1");
  if (f_.neg(1) != 1) fail(ErrorCode::SpecInvalid, "-1 lies in U^(1) only in characteristic 2");
  long per = static_cast<long>(e) * (q - 1);
  if (per < 2) fail(ErrorCode::SpecInvalid, "N would be all of D^x");
  long index = 1;
  for (size_t i = 0; i < places_.size(); ++i) {
    index *= per;
    if (index > 4096) fail(ErrorCode::SpecInvalid, "quotient too large");
  }
  std::vector<Element> gens;
  for (size_t i = 0; i < places_.size(); ++i) {
    gens.push_back(from_poly(poly::linear(f_, places_[i])));
    std::vector<unsigned> vals(places_.size(), 1);
    vals[i] = f_.gen();
    gens.push_back(from_poly(interpolate(vals)));
  }
  finalize_cosets(static_cast<int>(index), gens);
}

std::string FunctionFieldModel::describe() const {
  std::string s = "FunctionFieldSemiLocal(" + std::to_string(f_.q()) + ",{";
  for (size_t i = 0; i < places_.size(); ++i) s += (i ? "," : "") + std::to_string(places_[i]);
  return s + "}," + std::to_string(e_) + ")";
}

Element FunctionFieldModel::from_poly(const Poly& p) const { return ratfunc::make(f_, p, Poly{1}); }
Element FunctionFieldModel::one() const { return RatFunc{{1}, {1}}; }
Element FunctionFieldModel::add(const Element& a, const Element& b) const {
  return ratfunc::add(f_, std::get<RatFunc>(a), std::get<RatFunc>(b));
}
Element FunctionFieldModel::neg(const Element& a) const { return ratfunc::neg(f_, std::get<RatFunc>(a)); }
Element FunctionFieldModel::mul(const Element& a, const Element& b) const {
  return ratfunc::mul(f_, std::get<RatFunc>(a), std::get<RatFunc>(b));
}
Element FunctionFieldModel::inv(const Element& a) const { return ratfunc::inv(f_, std::get<RatFunc>(a)); }

Element FunctionFieldModel::uniformizer() const {
  Poly p{1};
  for (unsigned pl : places_) p = poly::mul(f_, p, poly::linear(f_, pl));
  return from_poly(p);
}

Poly FunctionFieldModel::interpolate(const std::vector<unsigned>& values) const {
  Poly r;
  for (size_t i = 0; i < places_.size(); ++i) {
    Poly term{values[i]};
    for (size_t j = 0; j < places_.size(); ++j) {
      if (j == i) continue;
      unsigned d = f_.inv(f_.sub(places_[i], places_[j]));
      term = poly::mul(f_, term, poly::scale(f_, poly::linear(f_, places_[j]), d));
    }
    r = poly::add(f_, r, term);
  }
  return r;
}

unsigned FunctionFieldModel::unit_residue(const RatFunc& x, int place, long& val) const {
  if (x.num.empty()) fail(ErrorCode::DivisionByZero, "valuation of 0");
  unsigned p = places_[place];
  Poly num = x.num, den = x.den;
  val = poly::strip_root(f_, num, p) - poly::strip_root(f_, den, p);
  unsigned value = f_.mul(poly::eval(f_, num, p), f_.inv(poly::eval(f_, den, p)));
  unsigned h = 1;
  for (size_t j = 0; j < places_.size(); ++j)
    if (static_cast<int>(j) != place) h = f_.mul(h, f_.sub(p, places_[j]));
  return f_.mul(value, f_.pow(h, -val));
}

long FunctionFieldModel::valuation(const Element& x, int place) const {
  long v;
  unit_residue(std::get<RatFunc>(x), place, v);
  return v;
}

unsigned FunctionFieldModel::residue(const Element& x, int place) const {
  long v;
  unsigned r = unit_residue(std::get<RatFunc>(x), place, v);
  if (v != 0) fail(ErrorCode::NotAUnit, str(x));
  return r;
}

bool FunctionFieldModel::in_n_place(const Element& x, int place) const {
  long v;
  unsigned r = unit_residue(std::get<RatFunc>(x), place, v);
  return mod_floor(v, e_) == 0 && r == 1;
}

bool FunctionFieldModel::in_n(const Element& x) const {
  for (int i = 0; i < num_places(); ++i)
    if (!in_n_place(x, i)) return false;
  return true;
}

int FunctionFieldModel::coset_of(const Element& x) const {
  long per = static_cast<long>(e_) * (f_.q() - 1);
  long label = 0, scale = 1;
  for (int i = 0; i < num_places(); ++i) {
    long v;
    unsigned r = unit_residue(std::get<RatFunc>(x), i, v);
    label += (mod_floor(v, e_) * (f_.q() - 1) + f_.log(r)) * scale;
    scale *= per;
  }
  return static_cast<int>(label);
}

std::vector<Element> FunctionFieldModel::n_window(const WindowSpec& w) const {
  int r = num_places();
  std::vector<Element> units{one()};
  Element pi = uniformizer();
  if (w.depth >= 1) units.push_back(add(one(), pi));
  if (w.depth >= 2) {
    units.push_back(add(one(), mul(pi, from_poly(Poly{0, 1}))));
    units.push_back(inv(add(one(), pi)));
  }
  std::vector<Element> out;
  std::vector<long> a(static_cast<size_t>(r), -w.radius);
  while (true) {
    Poly num{1}, den{1};
    for (int i = 0; i < r; ++i) {
      Poly lin = poly::pow(f_, poly::linear(f_, places_[i]), static_cast<unsigned>(std::labs(a[i]) * e_));
      if (a[i] >= 0)
        num = poly::mul(f_, num, lin);
      else
        den = poly::mul(f_, den, lin);
    }
    RatFunc base = ratfunc::make(f_, num, den);
    std::vector<unsigned> fix(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      long v;
      fix[i] = f_.inv(unit_residue(base, i, v));
    }
    Element b = mul(Element(base), from_poly(interpolate(fix)));
    for (const auto& u : units) {
      Element x = mul(b, u);
      if (!in_n(x)) fail(ErrorCode::Internal, "window element outside N: " + str(x));
      out.push_back(x);
    }
    int i = 0;
    while (i < r && a[i] == w.radius) a[i++] = -w.radius;
    if (i == r) break;
    ++a[i];
  }
  return out;
}

Element FunctionFieldModel::random_element(std::mt19937_64& rng) const {
  unsigned q = f_.q();
  Poly num, den;
  while (num.empty()) {
    num.clear();
    int dn = static_cast<int>(rng() % 4);
    for (int i = 0; i <= dn; ++i) num.push_back(static_cast<unsigned>(rng() % q));
    poly::trim(num);
  }
  int dd = static_cast<int>(rng() % 3);
  for (int i = 0; i < dd; ++i) den.push_back(static_cast<unsigned>(rng() % q));
  den.push_back(1);
  return ratfunc::make(f_, num, den);
}

Element FunctionFieldModel::swap(const Element& x) const {
  if (places_.size() != 2) fail(ErrorCode::SpecInvalid, "place swap needs exactly two places");
  unsigned c = f_.add(places_[0], places_[1]);
  const auto& r = std::get<RatFunc>(x);
  return ratfunc::make(f_, poly::reflect(f_, r.num, c), poly::reflect(f_, r.den, c));
}

Element FunctionFieldModel::parse_literal(const std::string& text) const {
  std::string s = trim_copy(text);
  auto strip = [](std::string p) {
    p = trim_copy(p);
    if (p.size() >= 2 && p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
    return p;
  };
  auto to_poly = [&](const std::string& part) {
    auto terms = parse_poly_terms(strip(part), false);
    Poly p;
    for (auto& [k, c] : terms) {
      if (c >= f_.q()) fail(ErrorCode::Usage, "coefficient code out of range in '" + text + "'");
      if (p.size() <= static_cast<size_t>(k)) p.resize(k + 1, 0);
      p[k] = c;
    }
    poly::trim(p);
    return p;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return from_poly(to_poly(s));
  return ratfunc::make(f_, to_poly(s.substr(0, slash)), to_poly(s.substr(slash + 1)));
}

}  // namespace valgraph
