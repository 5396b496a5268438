#include "valgraph/laurent.hpp"

#include <algorithm>

#include "valgraph/errors.hpp"

namespace valgraph {

namespace {

constexpr long kInf = LONG_MAX / 4;

long horizon(const Laurent& a) { return a.exact() ? kInf : a.val + a.prec; }

Laurent normalize(long lo, std::vector<unsigned> cs, long H, int guard) {
  size_t i = 0;
  while (i < cs.size() && cs[i] == 0) ++i;
  Laurent r;
  if (i == cs.size()) {
    if (H >= kInf) return r;
    fail(ErrorCode::PrecisionExhausted, "cancellation below horizon " + std::to_string(H));
  }
  long v = lo + static_cast<long>(i);
  if (H < kInf && v >= H - guard)
    fail(ErrorCode::PrecisionExhausted, "valuation " + std::to_string(v) + " not certified below horizon " +
                                            std::to_string(H) + " with guard " + std::to_string(guard));
  r.val = v;
  r.c.assign(cs.begin() + static_cast<long>(i), cs.end());
  if (H < kInf) {
    r.prec = static_cast<int>(H - v);
    if (r.c.size() > static_cast<size_t>(r.prec)) r.c.resize(r.prec);
  }
  while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
  return r;
}

}  // namespace

Laurent LaurentArith::monomial(unsigned coef, long k) const {
  Laurent r;
  if (coef == 0) return r;
  r.val = k;
  r.c = {coef};
  return r;
}

Laurent LaurentArith::from_poly(const std::vector<unsigned>& coeffs, long shift) const {
  return normalize(shift, coeffs, kInf, guard);
}

Laurent LaurentArith::add(const Laurent& a, const Laurent& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long H = std::min(horizon(a), horizon(b));
  long lo = std::min(a.val, b.val);
  long end = std::max(a.val + static_cast<long>(a.c.size()), b.val + static_cast<long>(b.c.size()));
  if (H < kInf) end = std::min(end, H);
  if (end <= lo) fail(ErrorCode::PrecisionExhausted, "sum has no certified digits");
  std::vector<unsigned> cs(static_cast<size_t>(end - lo), 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    long pos = a.val + static_cast<long>(i) - lo;
    if (pos < static_cast<long>(cs.size())) cs[pos] = f->add(cs[pos], a.c[i]);
  }
  for (size_t i = 0; i < b.c.size(); ++i) {
    long pos = b.val + static_cast<long>(i) - lo;
    if (pos < static_cast<long>(cs.size())) cs[pos] = f->add(cs[pos], b.c[i]);
  }
  return normalize(lo, std::move(cs), H, guard);
}

Laurent LaurentArith::neg(const Laurent& a) const {
  Laurent r = a;
  for (auto& x : r.c) x = f->neg(x);
  return r;
}

Laurent LaurentArith::mul(const Laurent& a, const Laurent& b) const {
  if (a.is_zero() || b.is_zero()) return Laurent{};
  Laurent r;
  r.val = a.val + b.val;
  r.prec = std::min(a.prec, b.prec);
  size_t n = a.c.size() + b.c.size() - 1;
  if (!r.exact()) n = std::min(n, static_cast<size_t>(r.prec));
  r.c.assign(n, 0);
  for (size_t i = 0; i < a.c.size() && i < n; ++i)
    for (size_t j = 0; j < b.c.size() && i + j < n; ++j) r.c[i + j] = f->add(r.c[i + j], f->mul(a.c[i], b.c[j]));
  while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
  return r;
}

Laurent LaurentArith::inv(const Laurent& a) const {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero series");
  Laurent r;
  r.val = -a.val;
  if (a.exact() && a.c.size() == 1) {
    r.c = {f->inv(a.c[0])};
    return r;
  }
  int P = a.exact() ? default_prec : a.prec;
  r.prec = P;
  std::vector<unsigned> b(static_cast<size_t>(P), 0);
  unsigned b0 = f->inv(a.c[0]);
  b[0] = b0;
  for (int n = 1; n < P; ++n) {
    unsigned s = 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.c.size()); ++k) s = f->add(s, f->mul(a.c[k], b[n - k]));
    b[n] = f->neg(f->mul(b0, s));
  }
  while (!b.empty() && b.back() == 0) b.pop_back();
  r.c = std::move(b);
  return r;
}

bool LaurentArith::equal(const Laurent& a, const Laurent& b) const { return add(a, neg(b)).is_zero(); }

std::string LaurentArith::str(const Laurent& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += "+";
    long k = a.val + static_cast<long>(i);
    if (k == 0) {
      s += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) s += std::to_string(a.c[i]) + "*";
      s += "t";
      if (k != 1) s += "^" + std::to_string(k);
    }
  }
  if (!a.exact()) s += "+O(t^" + std::to_string(a.val + a.prec) + ")";
  return s;
}

}  // namespace valgraph
