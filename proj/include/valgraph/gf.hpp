#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace valgraph {

// F_q, q = p^n. Elements are coded as integers 0..q-1 whose base-p digits are
// the coefficients of a polynomial in the generator of a primitive basis.
class GF {
 public:
  explicit GF(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return n_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, long long k) const;

  // primitive element and discrete log (a != 0)
  unsigned gen() const { return exp_[1 % (q_ - 1)]; }
  unsigned log(unsigned a) const;
  unsigned exp(long long k) const;

  std::string str(unsigned a) const;

  static bool prime_power(unsigned q, unsigned& p, unsigned& n);

 private:
  unsigned q_, p_, n_;
  std::vector<unsigned> exp_, log_, neg_;
  std::vector<uint16_t> add_;  // q*q table when small
};

bool is_prime_u64(std::uint64_t n);

}  // namespace valgraph
