#pragma once

#include <climits>
#include <string>
#include <vector>

#include "valgraph/gf.hpp"

namespace valgraph {

// t^val * (c[0] + c[1] t + ...), c[0] != 0. Coefficients past c.size() are
// zero up to the relative precision prec; prec == kExact means a Laurent
// polynomial known exactly. The zero element is exact with empty c.
struct Laurent {
  static constexpr int kExact = INT_MAX;
  long val = 0;
  std::vector<unsigned> c;
  int prec = kExact;

  bool is_zero() const { return c.empty(); }
  bool exact() const { return prec == kExact; }
  bool operator==(const Laurent& o) const { return val == o.val && c == o.c && prec == o.prec; }
};

struct LaurentArith {
  const GF* f;
  int default_prec;  // relative precision for inverses of exact series
  int guard;

  Laurent monomial(unsigned coef, long k) const;
  Laurent from_poly(const std::vector<unsigned>& coeffs, long shift) const;
  Laurent add(const Laurent& a, const Laurent& b) const;
  Laurent neg(const Laurent& a) const;
  Laurent mul(const Laurent& a, const Laurent& b) const;
  Laurent inv(const Laurent& a) const;
  // exact equality test: throws when precision cannot separate
  bool equal(const Laurent& a, const Laurent& b) const;
  std::string str(const Laurent& a) const;
};

}  // namespace valgraph
