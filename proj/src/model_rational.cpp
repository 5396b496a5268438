#include <numeric>

#include "valgraph/model.hpp"
#include "valgraph/textparse.hpp"

namespace valgraph {

namespace {

long mod_floor(long a, long m) { return ((a % m) + m) % m; }

unsigned long powmod(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long long r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

}  // namespace

RationalModel::RationalModel(unsigned m, unsigned l, unsigned long factor_bound) : m_(m), l_(l), bound_(factor_bound) {
  if (m < 3 || m % 2 == 0) fail(ErrorCode::SpecInvalid, "m must be odd and >= 3");
  if (!is_prime_u64(l) || l > 1000000) fail(ErrorCode::SpecInvalid, "l must be a prime below 10^6");
  g_ = std::gcd(l - 1, m);
  if (g_ <= 1) fail(ErrorCode::SpecInvalid, "gcd(l-1, m) must exceed 1");
  if (factor_bound < l || factor_bound < 100) fail(ErrorCode::SpecInvalid, "factor bound too small");
  unsigned gen = 2;
  for (; gen < l; ++gen) {
    bool prim = true;
    unsigned long n = l - 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      while (n % p == 0) n /= p;
      if (powmod(gen, (l - 1) / p, l) == 1) prim = false;
    }
    if (n > 1 && powmod(gen, (l - 1) / n, l) == 1) prim = false;
    if (prim) break;
  }
  dlog_.assign(l, 0);
  unsigned long cur = 1;
  for (unsigned k = 0; k < l - 1; ++k) {
    dlog_[cur] = k;
    cur = cur * gen % l;
  }
  unsigned long q0 = l + 1, qc = 2;
  while (!(is_prime_u64(q0) && q0 % l == 1)) ++q0;
  while (!(qc != l && is_prime_u64(qc) && dlog_[qc % l] % g_ == 1)) ++qc;
  finalize_cosets(static_cast<int>(m * m * g_),
                  {mpq_class(static_cast<unsigned long>(l)), mpq_class(q0), mpq_class(qc)});
}

std::string RationalModel::describe() const {
  return "RationalCongruence(" + std::to_string(m_) + "," + std::to_string(l_) + ")";
}

Element RationalModel::add(const Element& a, const Element& b) const {
  return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
}
Element RationalModel::neg(const Element& a) const { return mpq_class(-std::get<mpq_class>(a)); }
Element RationalModel::mul(const Element& a, const Element& b) const {
  return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
}
Element RationalModel::inv(const Element& a) const {
  const auto& x = std::get<mpq_class>(a);
  if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "inverse of 0");
  return mpq_class(1 / x);
}

long RationalModel::omega(mpz_class n) const {
  n = abs(n);
  long count = 0;
  for (unsigned long d = 2; d <= bound_; ++d) {
    if (mpz_class(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) {
    mpz_class b = bound_;
    if (n > b * b) fail(ErrorCode::FactorizationTooLarge, "cofactor " + n.get_str() + " beyond trial-division bound");
    ++count;
  }
  return count;
}

long RationalModel::h(const mpq_class& x) const {
  if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "h(0)");
  return omega(x.get_num()) - omega(x.get_den());
}

long RationalModel::vl(const mpq_class& x) const {
  if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "v_l(0)");
  mpz_class lz = static_cast<unsigned long>(l_);
  long v = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), lz.get_mpz_t())) {
    n /= lz;
    ++v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), lz.get_mpz_t())) {
    d /= lz;
    --v;
  }
  return v;
}

unsigned RationalModel::residue_class(const mpq_class& x) const {
  mpz_class lz = static_cast<unsigned long>(l_);
  mpz_class n = x.get_num(), d = x.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), lz.get_mpz_t())) n /= lz;
  while (mpz_divisible_p(d.get_mpz_t(), lz.get_mpz_t())) d /= lz;
  mpz_class nr = n % lz, dr = d % lz;
  if (nr < 0) nr += lz;
  unsigned long a = nr.get_ui(), b = dr.get_ui();
  unsigned long r = a * powmod(b, l_ - 2, l_) % l_;
  return dlog_[r] % g_;
}

bool RationalModel::in_n(const Element& x) const {
  const auto& q = std::get<mpq_class>(x);
  return mod_floor(vl(q), m_) == 0 && residue_class(q) == 0 && mod_floor(h(q), m_) == 0;
}

int RationalModel::coset_of(const Element& x) const {
  const auto& q = std::get<mpq_class>(x);
  long lab = mod_floor(h(q), m_) * m_ * g_ + mod_floor(vl(q), m_) * g_ + residue_class(q);
  return static_cast<int>(lab);
}

std::vector<Element> RationalModel::n_window(const WindowSpec& w) const {
  long B = 30 + 10L * w.radius;
  std::vector<Element> out;
  for (long a = 1; a <= B; ++a)
    for (long b = 1; b <= B; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (int s : {1, -1}) {
        Element x = mpq_class(s * a, b);
        if (in_n(x)) out.push_back(x);
      }
    }
  return out;
}

Element RationalModel::random_element(std::mt19937_64& rng) const {
  long a = 1 + static_cast<long>(rng() % 200), b = 1 + static_cast<long>(rng() % 200);
  if (rng() & 1) a = -a;
  mpq_class x(a, b);
  x.canonicalize();
  return x;
}

Element RationalModel::parse_literal(const std::string& text) const {
  mpq_class x;
  if (x.set_str(trim_copy(text), 10) != 0) fail(ErrorCode::Usage, "cannot parse rational '" + text + "'");
  x.canonicalize();
  return x;
}

}  // namespace valgraph
