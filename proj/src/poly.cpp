#include "valgraph/poly.hpp"

#include <algorithm>

#include "valgraph/errors.hpp"

namespace valgraph {
namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly constant(unsigned c) {
  Poly r{c};
  trim(r);
  return r;
}

Poly linear(const GF& f, unsigned root) { return Poly{f.neg(root), 1}; }

Poly add(const GF& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    unsigned x = i < a.size() ? a[i] : 0;
    unsigned y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

Poly neg(const GF& f, const Poly& a) {
  Poly r(a);
  for (auto& c : r) c = f.neg(c);
  return r;
}

Poly sub(const GF& f, const Poly& a, const Poly& b) { return add(f, a, neg(f, b)); }

Poly mul(const GF& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const GF& f, const Poly& a, unsigned c) {
  Poly r(a);
  for (auto& x : r) x = f.mul(x, c);
  trim(r);
  return r;
}

Poly pow(const GF& f, const Poly& a, unsigned k) {
  Poly r{1}, b = a;
  while (k) {
    if (k & 1) r = mul(f, r, b);
    k >>= 1;
    if (k) b = mul(f, b, b);
  }
  return r;
}

void divmod(const GF& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  unsigned lead_inv = f.inv(b.back());
  while (r.size() >= b.size() && !r.empty()) {
    size_t shift = r.size() - b.size();
    unsigned c = f.mul(r.back(), lead_inv);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    trim(r);
  }
  trim(q);
}

Poly gcd(const GF& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly q, r;
    divmod(f, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(f, a, f.inv(a.back()));
  return a;
}

unsigned eval(const GF& f, const Poly& a, unsigned x) {
  unsigned r = 0;
  for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

Poly reflect(const GF& f, const Poly& a, unsigned c) {
  // a(c - t) by Horner
  Poly lin{c, f.neg(1)};
  Poly r;
  for (size_t i = a.size(); i-- > 0;) r = add(f, mul(f, r, lin), constant(a[i]));
  return r;
}

int strip_root(const GF& f, Poly& a, unsigned root) {
  if (a.empty()) fail(ErrorCode::DivisionByZero, "valuation of zero");
  int k = 0;
  Poly lin = linear(f, root);
  while (eval(f, a, root) == 0) {
    Poly q, r;
    divmod(f, a, lin, q, r);
    a = std::move(q);
    ++k;
  }
  return k;
}

std::string str(const Poly& a) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(a[i]);
    } else {
      if (a[i] != 1) s += std::to_string(a[i]) + "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly

namespace ratfunc {

RatFunc make(const GF& f, Poly num, Poly den) {
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.empty()) return RatFunc{{}, {1}};
  Poly g = poly::gcd(f, num, den);
  if (poly::deg(g) > 0) {
    Poly q, r;
    poly::divmod(f, num, g, q, r);
    num = q;
    poly::divmod(f, den, g, q, r);
    den = q;
  }
  unsigned li = f.inv(den.back());
  return RatFunc{poly::scale(f, num, li), poly::scale(f, den, li)};
}

RatFunc add(const GF& f, const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return make(f, poly::add(f, a.num, b.num), a.den);
  return make(f, poly::add(f, poly::mul(f, a.num, b.den), poly::mul(f, b.num, a.den)), poly::mul(f, a.den, b.den));
}

RatFunc neg(const GF& f, const RatFunc& a) { return RatFunc{poly::neg(f, a.num), a.den}; }

RatFunc mul(const GF& f, const RatFunc& a, const RatFunc& b) {
  return make(f, poly::mul(f, a.num, b.num), poly::mul(f, a.den, b.den));
}

RatFunc inv(const GF& f, const RatFunc& a) {
  if (a.num.empty()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return make(f, a.den, a.num);
}

std::string str(const RatFunc& a) {
  if (a.den == Poly{1}) return poly::str(a.num);
  return "(" + poly::str(a.num) + ")/(" + poly::str(a.den) + ")";
}

}  // namespace ratfunc
}  // namespace valgraph
