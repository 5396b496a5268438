#include "valgraph/model.hpp"

namespace valgraph {

FiniteFieldModel::FiniteFieldModel(unsigned q, unsigned m) : f_(q), m_(m) {
  if (m < 2) fail(ErrorCode::SpecInvalid, "m must be >= 2 so that N is proper");
  if ((q - 1) % m != 0) fail(ErrorCode::SpecInvalid, "m does not divide q-1");
  unsigned minus_one = f_.neg(1);
  if (f_.log(minus_one) % m != 0) fail(ErrorCode::SpecInvalid, "-1 is not an m-th power in F_" + std::to_string(q));
  std::vector<Element> reps;
  for (unsigned i = 0; i < m; ++i) reps.push_back(Fq{f_.exp(i)});
  set_reps(std::move(reps));
}

std::string FiniteFieldModel::describe() const {
  return "FiniteField(" + std::to_string(f_.q()) + "," + std::to_string(m_) + ")";
}

Element FiniteFieldModel::add(const Element& a, const Element& b) const {
  return Fq{f_.add(std::get<Fq>(a).v, std::get<Fq>(b).v)};
}
Element FiniteFieldModel::neg(const Element& a) const { return Fq{f_.neg(std::get<Fq>(a).v)}; }
Element FiniteFieldModel::mul(const Element& a, const Element& b) const {
  return Fq{f_.mul(std::get<Fq>(a).v, std::get<Fq>(b).v)};
}
Element FiniteFieldModel::inv(const Element& a) const { return Fq{f_.inv(std::get<Fq>(a).v)}; }

bool FiniteFieldModel::in_n(const Element& x) const { return f_.log(std::get<Fq>(x).v) % m_ == 0; }

int FiniteFieldModel::coset_of(const Element& x) const { return static_cast<int>(f_.log(std::get<Fq>(x).v) % m_); }

std::vector<Element> FiniteFieldModel::all_units() const {
  std::vector<Element> r;
  for (unsigned a = 1; a < f_.q(); ++a) r.push_back(Fq{a});
  return r;
}

std::vector<Element> FiniteFieldModel::n_window(const WindowSpec&) const {
  std::vector<Element> r;
  for (unsigned a = 1; a < f_.q(); ++a)
    if (f_.log(a) % m_ == 0) r.push_back(Fq{a});
  return r;
}

Element FiniteFieldModel::random_element(std::mt19937_64& rng) const {
  return Fq{1 + static_cast<unsigned>(rng() % (f_.q() - 1))};
}

Element FiniteFieldModel::parse_literal(const std::string& text) const {
  long v = 0;
  try {
    size_t pos = 0;
    v = std::stol(text, &pos);
    if (pos != text.size()) throw 0;
  } catch (...) {
    fail(ErrorCode::Usage, "finite-field element must be an integer code, got '" + text + "'");
  }
  long q = f_.q();
  if (f_.degree() == 1) {
    v %= q;
    if (v < 0) v += q;
  } else if (v < 0 || v >= q) {
    fail(ErrorCode::Usage, "element code out of range");
  }
  return Fq{static_cast<unsigned>(v)};
}

}  // namespace valgraph
