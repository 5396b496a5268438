#pragma once

#include <string>
#include <vector>

#include "valgraph/gf.hpp"

namespace valgraph {

// Dense polynomial over F_q, lowest degree first, no trailing zeros.
using Poly = std::vector<unsigned>;

namespace poly {

void trim(Poly& a);
int deg(const Poly& a);  // -1 for zero
Poly constant(unsigned c);
Poly linear(const GF& f, unsigned root);  // t - root
Poly add(const GF& f, const Poly& a, const Poly& b);
Poly neg(const GF& f, const Poly& a);
Poly sub(const GF& f, const Poly& a, const Poly& b);
Poly mul(const GF& f, const Poly& a, const Poly& b);
Poly scale(const GF& f, const Poly& a, unsigned c);
Poly pow(const GF& f, const Poly& a, unsigned k);
void divmod(const GF& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly gcd(const GF& f, Poly a, Poly b);
unsigned eval(const GF& f, const Poly& a, unsigned x);
// substitute t -> c - t
Poly reflect(const GF& f, const Poly& a, unsigned c);
// strip factors (t - root); returns multiplicity
int strip_root(const GF& f, Poly& a, unsigned root);
std::string str(const Poly& a);

}  // namespace poly

// Reduced rational function num/den with monic den.
struct RatFunc {
  Poly num;
  Poly den{1};
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

namespace ratfunc {

RatFunc make(const GF& f, Poly num, Poly den);
RatFunc add(const GF& f, const RatFunc& a, const RatFunc& b);
RatFunc neg(const GF& f, const RatFunc& a);
RatFunc mul(const GF& f, const RatFunc& a, const RatFunc& b);
RatFunc inv(const GF& f, const RatFunc& a);
std::string str(const RatFunc& a);

}  // namespace ratfunc

}  // namespace valgraph
