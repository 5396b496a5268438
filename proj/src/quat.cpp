#include "valgraph/quat.hpp"

#include "valgraph/errors.hpp"

namespace valgraph {

long v2(const mpz_class& z) {
  if (sgn(z) == 0) fail(ErrorCode::Internal, "v2 of zero");
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

QuadRat QuadArith::inv(const QuadRat& x) const {
  mpq_class n = norm(x);
  if (sgn(n) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt d)");
  return {x.a / n, -x.b / n};
}

std::string QuadArith::str(const QuadRat& x) const {
  if (sgn(x.b) == 0) return x.a.get_str();
  std::string s;
  if (sgn(x.a) != 0) s = x.a.get_str() + (sgn(x.b) > 0 ? "+" : "");
  return s + x.b.get_str() + "*r" + std::to_string(d);
}

Quat QuatArith::add(const Quat& p, const Quat& q) const {
  Quat r;
  for (int c = 0; c < 4; ++c) r.x[c] = F.add(p.x[c], q.x[c]);
  return r;
}

Quat QuatArith::neg(const Quat& p) const {
  Quat r;
  for (int c = 0; c < 4; ++c) r.x[c] = F.neg(p.x[c]);
  return r;
}

Quat QuatArith::mul(const Quat& p, const Quat& q) const {
  const auto& a = p.x;
  const auto& b = q.x;
  auto m = [&](int i, int j) { return F.mul(a[i], b[j]); };
  Quat r;
  r.x[0] = F.sub(F.sub(F.sub(m(0, 0), m(1, 1)), m(2, 2)), m(3, 3));
  r.x[1] = F.sub(F.add(F.add(m(0, 1), m(1, 0)), m(2, 3)), m(3, 2));
  r.x[2] = F.add(F.add(F.sub(m(0, 2), m(1, 3)), m(2, 0)), m(3, 1));
  r.x[3] = F.add(F.sub(F.add(m(0, 3), m(1, 2)), m(2, 1)), m(3, 0));
  return r;
}

Quat QuatArith::scale(const QuadRat& c, const Quat& p) const {
  Quat r;
  for (int k = 0; k < 4; ++k) r.x[k] = F.mul(c, p.x[k]);
  return r;
}

Quat QuatArith::conj(const Quat& p) const {
  Quat r = p;
  for (int c = 1; c < 4; ++c) r.x[c] = F.neg(p.x[c]);
  return r;
}

QuadRat QuatArith::nrd(const Quat& p) const {
  QuadRat s;
  for (int c = 0; c < 4; ++c) s = F.add(s, F.mul(p.x[c], p.x[c]));
  return s;
}

Quat QuatArith::inv(const Quat& p) const {
  QuadRat n = nrd(p);
  if (n.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero quaternion");
  return scale(F.inv(n), conj(p));
}

Quat QuatArith::galois(const Quat& p) const {
  Quat r;
  for (int c = 0; c < 4; ++c) r.x[c] = F.conj(p.x[c]);
  return r;
}

std::string QuatArith::str(const Quat& p) const {
  static const char* unit[4] = {"", "i", "j", "k"};
  std::string s;
  for (int c = 0; c < 4; ++c) {
    if (p.x[c].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + F.str(p.x[c]) + ")" + unit[c];
  }
  return s.empty() ? "0" : s;
}

TwoAdicRoot::TwoAdicRoot(long d, int branch, PrecisionPolicy pol) : d_(d), branch_(branch), pol_(pol) {
  if (((d % 8) + 8) % 8 != 1) fail(ErrorCode::SpecInvalid, "d must be 1 mod 8 to have a 2-adic square root");
  if (branch != 1 && branch != -1) fail(ErrorCode::SpecInvalid, "sqrt branch must be +1 or -1");
  if (pol.p0 < 8 || pol.pmax < pol.p0 || pol.guard < 1) fail(ErrorCode::SpecInvalid, "bad precision policy");
}

mpz_class TwoAdicRoot::root_mod(int P) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(P);
  if (it != cache_.end()) return it->second;
  mpz_class dd = d_;
  mpz_class x = 1;
  for (int k = 3; k <= P; ++k) {
    // x^2 = d mod 2^k; fix mod 2^(k+1)
    mpz_class m = mpz_class(1) << (k + 1);
    mpz_class r = (x * x - dd) % m;
    if (sgn(r) < 0) r += m;
    if (sgn(r) != 0) x += mpz_class(1) << (k - 1);
  }
  mpz_class mod = mpz_class(1) << P;
  x %= mod;
  if (sgn(x) < 0) x += mod;
  mpz_class low = x % 4;
  bool one_mod_4 = (low == 1);
  if ((branch_ == 1) != one_mod_4) x = (mod - x) % mod;
  cache_[P] = x;
  return x;
}

long TwoAdicRoot::valuation(const mpq_class& a, const mpq_class& b, int sign) const {
  mpz_class L;
  mpz_lcm(L.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_class A = a.get_num() * (L / a.get_den());
  mpz_class B = b.get_num() * (L / b.get_den());
  long base = v2(L);
  if (sgn(B) == 0) {
    if (sgn(A) == 0) fail(ErrorCode::DivisionByZero, "valuation of zero");
    return v2(A) - base;
  }
  for (int P = pol_.p0; P <= pol_.pmax; P *= 2) {
    mpz_class mod = mpz_class(1) << P;
    mpz_class z = (A + sign * B * root_mod(P)) % mod;
    if (sgn(z) < 0) z += mod;
    if (sgn(z) != 0) {
      long v = v2(z);
      if (v < P - pol_.guard) return v - base;
    }
  }
  fail(ErrorCode::PrecisionExhausted, "2-adic valuation not certified within " + std::to_string(pol_.pmax) + " digits");
}

}  // namespace valgraph
