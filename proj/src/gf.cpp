#include "valgraph/gf.hpp"

#include "valgraph/errors.hpp"

namespace valgraph {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool GF::prime_power(unsigned q, unsigned& p, unsigned& n) {
  if (q < 2) return false;
  unsigned x = q;
  p = 0;
  for (unsigned d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = x;
  n = 0;
  while (x % p == 0) {
    x /= p;
    ++n;
  }
  return x == 1;
}

namespace {

unsigned digit_add(unsigned a, unsigned b, unsigned p) {
  if (p == 2) return a ^ b;
  unsigned r = 0, scale = 1;
  while (a || b) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

unsigned digit_neg(unsigned a, unsigned p) {
  if (p == 2) return a;
  unsigned r = 0, scale = 1;
  while (a) {
    r += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

}  // namespace

GF::GF(unsigned q) : q_(q) {
  if (q > 65536 || !prime_power(q, p_, n_)) fail(ErrorCode::SpecInvalid, "q must be a prime power <= 65536");
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  if (n_ == 1) {
    for (unsigned g = 1; g < q; ++g) {
      unsigned cur = 1;
      bool ok = true;
      for (unsigned k = 0; k < q - 1; ++k) {
        if (k > 0 && cur == 1) {
          ok = false;
          break;
        }
        exp_[k] = cur;
        cur = static_cast<unsigned>(static_cast<unsigned long long>(cur) * g % q);
      }
      if (ok && cur == 1) break;
    }
  } else {
    // search a monic f of degree n with x primitive mod f
    unsigned pn1 = q / p_;
    bool found = false;
    for (unsigned tail = 0; tail < q && !found; ++tail) {
      std::vector<unsigned> f(n_);
      unsigned t = tail;
      for (unsigned i = 0; i < n_; ++i) {
        f[i] = t % p_;
        t /= p_;
      }
      if (f[0] == 0) continue;
      std::vector<char> seen(q, 0);
      unsigned cur = 1;
      bool ok = true;
      for (unsigned k = 0; k < q - 1; ++k) {
        if (cur == 0 || seen[cur]) {
          ok = false;
          break;
        }
        seen[cur] = 1;
        exp_[k] = cur;
        // multiply by x
        unsigned top = cur / pn1;
        unsigned shifted = (cur % pn1) * p_;
        std::vector<unsigned> d(n_);
        for (unsigned i = 0; i < n_; ++i) {
          d[i] = shifted % p_;
          shifted /= p_;
        }
        for (unsigned i = 0; i < n_; ++i) d[i] = (d[i] + (p_ - f[i]) * top) % p_;
        unsigned nx = 0;
        for (unsigned i = n_; i-- > 0;) nx = nx * p_ + d[i];
        cur = nx;
      }
      if (ok && cur == 1) found = true;
    }
    if (!found) fail(ErrorCode::Internal, "no primitive polynomial found");
  }
  for (unsigned k = 0; k < q - 1; ++k) log_[exp_[k]] = k;
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) neg_[a] = digit_neg(a, p_);
  if (q <= 256) {
    add_.resize(q * q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) add_[a * q + b] = static_cast<uint16_t>(digit_add(a, b, p_));
  }
}

unsigned GF::add(unsigned a, unsigned b) const {
  if (!add_.empty()) return add_[a * q_ + b];
  return digit_add(a, b, p_);
}

unsigned GF::neg(unsigned a) const { return neg_[a]; }

unsigned GF::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0) return 0;
  unsigned k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

unsigned GF::inv(unsigned a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned GF::pow(unsigned a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) fail(ErrorCode::DivisionByZero, "0 to a negative power");
    return 0;
  }
  long long m = q_ - 1;
  long long e = (static_cast<long long>(log_[a]) * (k % m)) % m;
  if (e < 0) e += m;
  return exp_[e];
}

unsigned GF::log(unsigned a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "log of 0");
  return log_[a];
}

unsigned GF::exp(long long k) const {
  long long m = q_ - 1;
  k %= m;
  if (k < 0) k += m;
  return exp_[k];
}

std::string GF::str(unsigned a) const { return std::to_string(a); }

}  // namespace valgraph
