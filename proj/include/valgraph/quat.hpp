#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <mutex>
#include <string>

namespace valgraph {

// a + b*sqrt(d)
struct QuadRat {
  mpq_class a{0}, b{0};
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool operator==(const QuadRat& o) const { return a == o.a && b == o.b; }
};

struct QuadArith {
  long d;
  QuadRat add(const QuadRat& x, const QuadRat& y) const { return {x.a + y.a, x.b + y.b}; }
  QuadRat sub(const QuadRat& x, const QuadRat& y) const { return {x.a - y.a, x.b - y.b}; }
  QuadRat neg(const QuadRat& x) const { return {-x.a, -x.b}; }
  QuadRat mul(const QuadRat& x, const QuadRat& y) const {
    return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QuadRat conj(const QuadRat& x) const { return {x.a, -x.b}; }
  mpq_class norm(const QuadRat& x) const { return x.a * x.a - d * x.b * x.b; }
  QuadRat inv(const QuadRat& x) const;
  std::string str(const QuadRat& x) const;
};

// x0 + x1 i + x2 j + x3 k with i^2 = j^2 = -1, ij = k
struct Quat {
  std::array<QuadRat, 4> x;
  bool is_zero() const { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero() && x[3].is_zero(); }
  bool operator==(const Quat& o) const { return x == o.x; }
};

struct QuatArith {
  QuadArith F;
  Quat add(const Quat& p, const Quat& q) const;
  Quat neg(const Quat& p) const;
  Quat mul(const Quat& p, const Quat& q) const;
  Quat scale(const QuadRat& c, const Quat& p) const;
  Quat conj(const Quat& p) const;
  QuadRat nrd(const Quat& p) const;
  Quat inv(const Quat& p) const;
  // sqrt(d) -> -sqrt(d) coefficientwise
  Quat galois(const Quat& p) const;
  std::string str(const Quat& p) const;
};

struct PrecisionPolicy {
  int p0 = 32;
  int pmax = 4096;
  int guard = 4;
};

// Hensel-lifted square root s of d in Z_2 with s = 1 mod 4 (branch +1) or
// its negative (branch -1). Lifts are cached per precision.
class TwoAdicRoot {
 public:
  TwoAdicRoot(long d, int branch, PrecisionPolicy pol);
  // s mod 2^P
  mpz_class root_mod(int P) const;
  // 2-adic valuation of a + b*s (embedding sign = +1) or a - b*s (sign = -1);
  // value must be nonzero. Certified or PrecisionExhausted.
  long valuation(const mpq_class& a, const mpq_class& b, int sign) const;
  const PrecisionPolicy& policy() const { return pol_; }
  int branch() const { return branch_; }

 private:
  long d_;
  int branch_;
  PrecisionPolicy pol_;
  mutable std::mutex mu_;
  mutable std::map<int, mpz_class> cache_;
};

long v2(const mpz_class& z);  // z != 0

}  // namespace valgraph
