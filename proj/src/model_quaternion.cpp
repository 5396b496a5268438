#include <cmath>
#include <optional>

#include "valgraph/model.hpp"
#include "valgraph/textparse.hpp"

namespace valgraph {

namespace {

QuadRat qr(long a, long b = 0, long den = 1) {
  QuadRat r{mpq_class(a, den), mpq_class(b, den)};
  r.a.canonicalize();
  r.b.canonicalize();
  return r;
}

}  // namespace

QuaternionModel::QuaternionModel(long d, int branch, PrecisionPolicy pol)
    : d_(d), qa_{QuadArith{d}}, root_(d, branch, pol), f4_(4) {
  if (d <= 1) fail(ErrorCode::SpecInvalid, "d must be a positive non-square");
  long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
  for (long c = s - 1; c <= s + 1; ++c)
    if (c * c == d) fail(ErrorCode::SpecInvalid, "d must not be a square");
  Element th = central(qr(1, 1, 2));
  Element th2 = central(qr(1, -1, 2));
  Element p = pi(), al = a();
  std::vector<Element> gens{p, al};
  gens.push_back(add(mul(al, th), th2));
  gens.push_back(add(mul(p, th), th2));
  gens.push_back(add(mul(al, th2), th));
  gens.push_back(add(mul(p, th2), th));
  finalize_cosets(36, gens);
}

std::string QuaternionModel::describe() const {
  return "Quaternion(" + std::to_string(d_) + (root_.branch() < 0 ? ",branch=-1" : "") + ")";
}

Element QuaternionModel::make(const QuadRat& x0, const QuadRat& x1, const QuadRat& x2, const QuadRat& x3) const {
  Quat q;
  q.x = {x0, x1, x2, x3};
  return q;
}

Element QuaternionModel::central(const QuadRat& c) const { return make(c, QuadRat{}, QuadRat{}, QuadRat{}); }
Element QuaternionModel::one() const { return central(qr(1)); }
Element QuaternionModel::pi() const { return make(QuadRat{}, qr(1), qr(1), QuadRat{}); }
Element QuaternionModel::a() const { return make(qr(-1, 0, 2), qr(1, 0, 2), qr(1, 0, 2), qr(1, 0, 2)); }

Element QuaternionModel::add(const Element& a, const Element& b) const {
  return qa_.add(std::get<Quat>(a), std::get<Quat>(b));
}
Element QuaternionModel::neg(const Element& a) const { return qa_.neg(std::get<Quat>(a)); }
Element QuaternionModel::mul(const Element& a, const Element& b) const {
  return qa_.mul(std::get<Quat>(a), std::get<Quat>(b));
}
Element QuaternionModel::inv(const Element& a) const { return qa_.inv(std::get<Quat>(a)); }

long QuaternionModel::field_valuation(const QuadRat& c, int place) const {
  if (c.is_zero()) fail(ErrorCode::DivisionByZero, "valuation of 0");
  return root_.valuation(c.a, c.b, place == 0 ? 1 : -1);
}

long QuaternionModel::valuation(const Element& x, int place) const { return field_valuation(nrd(x), place); }

unsigned QuaternionModel::residue(const Element& x, int place) const {
  if (valuation(x, place) != 0) fail(ErrorCode::NotAUnit, str(x));
  Element al = a();
  const Element lifts[3] = {one(), al, add(al, one())};
  unsigned found = 0;
  int hits = 0;
  for (unsigned r = 0; r < 3; ++r) {
    Element diff = sub(x, lifts[r]);
    if (is_zero(diff) || valuation(diff, place) > 0) {
      found = r + 1;
      ++hits;
    }
  }
  if (hits != 1) fail(ErrorCode::Internal, "residue lift test matched " + std::to_string(hits) + " candidates");
  return found;
}

int QuaternionModel::place_label(const Element& x, int place) const {
  long w = valuation(x, place);
  Element u = mul(pow(pi(), -w), x);
  unsigned r = residue(u, place);
  return static_cast<int>(((w % 2) + 2) % 2) * 3 + static_cast<int>(r - 1);
}

bool QuaternionModel::in_n_place(const Element& x, int place) const { return place_label(x, place) == 0; }

bool QuaternionModel::in_n(const Element& x) const { return in_n_place(x, 0) && in_n_place(x, 1); }

int QuaternionModel::coset_of(const Element& x) const { return place_label(x, 0) * 6 + place_label(x, 1); }

std::string QuaternionModel::label_name(int label) const {
  static const char* res[3] = {"1", "a", "a+1"};
  auto part = [&](int l) { return std::string(l >= 3 ? "pi*" : "") + res[l % 3]; };
  return "(" + part(label / 6) + "|" + part(label % 6) + ")";
}

std::vector<Element> QuaternionModel::n_window(const WindowSpec& w) const {
  // beta in F with valuation vector (1, 0)
  std::optional<QuadRat> beta;
  for (long b = 1; b <= 7 && !beta; ++b)
    for (long a = -15; a <= 15 && !beta; ++a) {
      QuadRat c = qr(a, b, 2);
      if (c.is_zero()) continue;
      if (field_valuation(c, 0) == 1 && field_valuation(c, 1) == 0) beta = c;
    }
  if (!beta) fail(ErrorCode::Internal, "no element of F with valuation vector (1,0) found");
  QuadRat beta2 = qa_.F.conj(*beta);
  std::vector<Element> units{one()};
  if (w.depth >= 1) units.push_back(make(QuadRat{}, qr(1), QuadRat{}, QuadRat{}));
  if (w.depth >= 2) {
    units.push_back(make(QuadRat{}, QuadRat{}, qr(1), QuadRat{}));
    units.push_back(make(QuadRat{}, qr(1), qr(1), qr(1)));
  }
  std::vector<Element> out;
  for (long i = -w.radius; i <= w.radius; ++i)
    for (long j = -w.radius; j <= w.radius; ++j) {
      Element c = mul(pow(central(*beta), i), pow(central(beta2), j));
      for (const auto& u : units) {
        Element x = mul(c, u);
        if (!in_n(x)) fail(ErrorCode::Internal, "window element outside N: " + str(x));
        out.push_back(x);
      }
    }
  return out;
}

Element QuaternionModel::random_element(std::mt19937_64& rng) const {
  while (true) {
    Quat q;
    for (int c = 0; c < 4; ++c) {
      long den = (rng() & 1) ? 2 : 1;
      q.x[c] = qr(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1, den);
    }
    if (!q.is_zero()) return q;
  }
}

std::vector<mpq_class> QuaternionModel::coordinates(const Element& x) const {
  const auto& q = std::get<Quat>(x);
  std::vector<mpq_class> v;
  for (int c = 0; c < 4; ++c) {
    v.push_back(q.x[c].a);
    v.push_back(q.x[c].b);
  }
  return v;
}

Element QuaternionModel::swap(const Element& x) const { return qa_.galois(std::get<Quat>(x)); }

Element QuaternionModel::parse_literal(const std::string& text) const {
  std::string s = trim_copy(text);
  if (s == "pi") return pi();
  if (s == "a") return a();
  if (s == "i") return make(QuadRat{}, qr(1), QuadRat{}, QuadRat{});
  if (s == "j") return make(QuadRat{}, QuadRat{}, qr(1), QuadRat{});
  if (s == "k") return make(QuadRat{}, QuadRat{}, QuadRat{}, qr(1));
  // q(x0,x1,x2,x3) with xi = A or A@B meaning A + B*sqrt(d)
  if (s.size() > 3 && s.rfind("q(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(2, s.size() - 3);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 4) fail(ErrorCode::Usage, "quaternion literal needs 4 coordinates: '" + text + "'");
    Quat q;
    for (int c = 0; c < 4; ++c) {
      std::string p = trim_copy(parts[c]);
      auto at = p.find('@');
      std::string A = at == std::string::npos ? p : p.substr(0, at);
      std::string B = at == std::string::npos ? "0" : p.substr(at + 1);
      if (q.x[c].a.set_str(trim_copy(A), 10) != 0 || q.x[c].b.set_str(trim_copy(B), 10) != 0)
        fail(ErrorCode::Usage, "bad coordinate '" + p + "'");
      q.x[c].a.canonicalize();
      q.x[c].b.canonicalize();
    }
    return q;
  }
  mpq_class r;
  if (r.set_str(s, 10) == 0) {
    r.canonicalize();
    return central(QuadRat{r, 0});
  }
  fail(ErrorCode::Usage, "cannot parse quaternion '" + text + "'");
}

}  // namespace valgraph
