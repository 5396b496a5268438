#include "valgraph/vallab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace valgraph {

std::vector<long> ValuationHandle::value(const Model& m, const Element& x) const {
  std::vector<long> v;
  for (size_t i = 0; i < places.size(); ++i) v.push_back(signs[i] * m.valuation(x, places[i]));
  return v;
}

ValuationHandle all_places(const Model& m) {
  if (m.num_places() == 0) fail(ErrorCode::Usage, m.describe() + " has no places");
  ValuationHandle v;
  v.name = "w";
  for (int i = 0; i < m.num_places(); ++i) {
    v.places.push_back(i);
    v.signs.push_back(1);
  }
  return v;
}

ValuationHandle single_place(const Model& m, int place) {
  if (place < 0 || place >= m.num_places()) fail(ErrorCode::Usage, "no place " + std::to_string(place));
  return {"w" + std::to_string(place), {place}, {1}};
}

ValuationHandle negated(ValuationHandle v, int which) {
  v.signs.at(static_cast<size_t>(which)) *= -1;
  v.name += "~neg" + std::to_string(which);
  return v;
}

SampleCheck valuation_axioms(const Model& m, const ValuationHandle& v, int samples, unsigned long seed) {
  std::mt19937_64 rng(seed);
  SampleCheck r;
  for (int s = 0; s < samples; ++s) {
    Element x = m.random_element(rng), y = m.random_element(rng);
    auto vx = v.value(m, x), vy = v.value(m, y), vxy = v.value(m, m.mul(x, y));
    ++r.checked;
    for (size_t i = 0; i < vx.size(); ++i)
      if (vxy[i] != vx[i] + vy[i] && r.ok) {
        r.ok = false;
        r.witness = "v(xy) at x = " + m.str(x) + ", y = " + m.str(y);
      }
    Element z = m.add(x, y);
    if (m.is_zero(z)) continue;
    auto vz = v.value(m, z);
    for (size_t i = 0; i < vx.size(); ++i) {
      bool ok = vz[i] >= std::min(vx[i], vy[i]) && (vx[i] == vy[i] || vz[i] == std::min(vx[i], vy[i]));
      if (!ok && r.ok) {
        r.ok = false;
        r.witness = "v(x+y) at x = " + m.str(x) + ", y = " + m.str(y);
      }
    }
  }
  return r;
}

AssocResult associated_check(const ValuationHandle& v, const OrderedQuotient& oq) {
  AssocResult r;
  const Model& m = oq.model();
  for (const auto& n : oq.window().elems) {
    if (!oq.leq(oq.zero(), oq.phi(n))) continue;
    ++r.checked;
    auto vn = v.value(m, n);
    if (std::any_of(vn.begin(), vn.end(), [](long t) { return t < 0; }) && r.holds) {
      r.holds = false;
      r.witness = m.str(n);
    }
  }
  r.cert = oq.cert();
  return r;
}

Element uniformizer_of(const Model& m) {
  if (auto* l = dynamic_cast<const LaurentModel*>(&m)) return l->t_pow(1);
  if (auto* f = dynamic_cast<const FunctionFieldModel*>(&m)) return f->uniformizer();
  if (auto* q = dynamic_cast<const QuaternionModel*>(&m)) return q->pi();
  fail(ErrorCode::Usage, m.describe() + " has no uniformizer");
}

namespace {

std::vector<std::vector<long>> graded_box(size_t r, long bound) {
  std::vector<std::vector<long>> out;
  std::vector<long> a(r, 0);
  while (true) {
    out.push_back(a);
    size_t i = 0;
    while (i < r && a[i] == bound) a[i++] = 0;
    if (i == r) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace

OpennessResult find_delta(const Model& m, const ValuationHandle& v, long bound, int samples, unsigned long seed) {
  if (static_cast<int>(v.places.size()) != m.num_places())
    fail(ErrorCode::Usage, "find-delta needs every place; use refute-single-place for one place");
  OpennessResult r;
  r.mode = "find-delta";
  r.bound = bound;
  Element u = uniformizer_of(m);
  Element one = m.one();
  for (const auto& delta : graded_box(v.places.size(), bound)) {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
      Element base = m.random_element(rng);
      auto vb = v.value(m, base);
      long k = LONG_MIN;
      for (size_t i = 0; i < vb.size(); ++i) k = std::max(k, delta[i] + 1 - vb[i]);
      k += static_cast<long>(rng() % 2);
      Element x = m.mul(m.pow(u, k), base);
      ++r.checked;
      if (!sum_in_n(m, one, x)) {
        ok = false;
        r.witnesses.push_back({delta.empty() ? 0 : delta[0], -1, m.str(x)});
      }
    }
    if (ok) {
      r.found = true;
      r.delta = delta;
      // every delta - e_i has smaller degree and was rejected above
      r.minimal = true;
      r.cert = Cert::WindowCertified;
      return r;
    }
  }
  fail(ErrorCode::SearchExhausted, "no delta with all components <= " + std::to_string(bound));
}

OpennessResult refute_single_place(const FunctionFieldModel& m, long bound) {
  OpennessResult r;
  r.mode = "refute-single-place";
  r.bound = bound;
  r.found = true;
  const GF& f = m.field();
  for (int i = 0; i < m.num_places(); ++i) {
    for (long d = 0; d <= bound; ++d) {
      Poly base = poly::pow(f, poly::linear(f, m.places()[i]), static_cast<unsigned>(d + 1));
      bool hit = false;
      for (unsigned c = 1; c < f.q() && !hit; ++c) {
        Element x = m.add(m.one(), m.from_poly(poly::scale(f, base, c)));
        ++r.checked;
        if (m.valuation(m.sub(x, m.one()), i) > d && !m.in_n(x)) {
          r.witnesses.push_back({d, i, m.str(x)});
          hit = true;
        }
      }
      if (!hit) r.found = false;
    }
  }
  r.cert = Cert::Certified;
  return r;
}

EscapePrime find_escape_prime(const RationalModel& m, const std::vector<std::pair<unsigned long, unsigned>>& moduli,
                              unsigned long kmax) {
  EscapePrime e;
  e.modulus = 1;
  for (auto [q, r] : moduli)
    for (unsigned i = 0; i < r; ++i) e.modulus *= q;
  for (unsigned long k = 1; k <= kmax; ++k) {
    unsigned long p = 1 + k * e.modulus;
    if (!is_prime_u64(p)) continue;
    e.found = true;
    e.k = k;
    e.p = p;
    mpq_class pq(static_cast<long>(p));
    e.h = m.h(pq);
    e.in_w = (p - 1) % e.modulus == 0;
    e.in_n = m.in_n(pq);
    return e;
  }
  fail(ErrorCode::SearchExhausted, "no prime 1 + k*" + std::to_string(e.modulus) + " with k <= " + std::to_string(kmax));
}

RingWindow generated_ring_window(const OrderedQuotient& oq, RingKind kind, const Gamma& alpha, int length,
                                 bool fake_phi) {
  const Model& m = oq.model();
  RingWindow w;
  w.kind = kind;
  w.alpha = alpha;
  w.length = length;
  w.fake_phi = fake_phi;
  auto phi = [&](const Element& n) { return fake_phi ? oq.neg(oq.phi(n)) : oq.phi(n); };
  int radius = 1;
  if (kind == RingKind::A && oq.kind() == OrderedQuotient::Kind::Local)
    for (long a : alpha) radius = std::max<int>(radius, static_cast<int>(a) + 2);
  NWindow src = oq.kind() == OrderedQuotient::Kind::Finite ? oq.window() : make_window(m, WindowSpec{radius, 2});
  std::vector<Element> base;
  for (const auto& n : src.elems) {
    Gamma g = phi(n);
    if (kind == RingKind::R ? oq.leq(oq.zero(), g) : oq.lt(alpha, g)) base.push_back(n);
  }
  w.base_size = base.size();
  std::map<std::string, std::pair<Element, std::string>> seen;
  Element minus_one = m.neg(m.one());
  long skipped = 0;
  // signed multisets of size 1..length, indices nondecreasing
  // x - x and x + x are formed exactly; truncated series cannot certify the cancellation
  auto rec = [&](auto&& self, size_t from, long last, int last_sign, const Element& acc, const std::string& expr,
                 int depth) -> void {
    if (depth > 0) {
      std::string key = m.str(acc);
      if (!seen.count(key)) seen.emplace(key, std::make_pair(acc, expr));
    }
    if (depth == length) return;
    for (size_t i = from; i < base.size(); ++i)
      for (int s : {1, -1}) {
        Element term = s > 0 ? base[i] : m.neg(base[i]);
        try {
          Element next;
          if (depth == 0)
            next = term;
          else if (depth == 1 && static_cast<long>(i) == last)
            next = s == last_sign ? m.mul(m.from_int(2), term) : m.sub(m.one(), m.one());
          else
            next = m.add(acc, term);
          self(self, i, static_cast<long>(i), s, next, expr + (s > 0 ? " + " : " - ") + m.str(base[i]), depth + 1);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PrecisionExhausted) throw;
          ++skipped;
        }
      }
  };
  rec(rec, 0, -1, 0, m.one(), "", 0);
  for (auto& [key, val] : seen) {
    const auto& [x, expr] = val;
    w.members.push_back(x);
    if (m.is_zero(x)) continue;
    if (kind == RingKind::A && m.equal(x, minus_one) && !w.minus_one) {
      w.minus_one = true;
      w.minus_one_expr = expr;
    }
    if (m.in_n(x)) ++w.members_in_n;
  }
  if (kind == RingKind::R) {
    std::vector<Gamma> cands;
    if (oq.kind() == OrderedQuotient::Kind::Finite) {
      for (int c = 0; c < oq.num_classes(); ++c)
        if (oq.leq(oq.zero(), {c})) cands.push_back({c});
    } else {
      cands = graded_box(static_cast<size_t>(oq.rank()), oq.window().spec.radius);
    }
    for (const auto& g : cands) {
      Gamma ng = oq.neg(g);
      bool ok = true;
      for (const auto& x : w.members)
        if (!m.is_zero(x) && m.in_n(x) && !oq.lt(ng, phi(x))) ok = false;
      if (ok) {
        w.gamma = g;
        break;
      }
    }
  }
  w.cert = skipped ? Cert::Inconclusive : oq.cert();
  return w;
}

Decomposition decompose_ab_inverse(const OrderedQuotient& oq, const Element& x) {
  const Model& m = oq.model();
  Decomposition d;
  Element one = m.one();
  auto nonneg = [&](const Element& n) { return !m.is_zero(n) && m.in_n(n) && oq.leq(oq.zero(), oq.phi(n)); };
  auto verify = [&]() {
    try {
      Element sum = d.a_terms.empty() ? m.sub(one, one) : d.a_terms[0];
      for (size_t i = 1; i < d.a_terms.size(); ++i) sum = m.add(sum, d.a_terms[i]);
      bool terms = true;
      for (const auto& t : d.a_terms) terms = terms && (nonneg(t) || nonneg(m.neg(t)));
      d.verified = terms && m.equal(sum, d.a) && nonneg(d.b) && m.equal(m.mul(d.a, m.inv(d.b)), x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      d.verified = false;
    }
    return d.verified;
  };
  if (m.is_zero(x)) {
    d.found = true;
    d.a = x;
    d.b = one;
    d.route = "zero";
    d.verified = true;
    return d;
  }
  if (nonneg(x)) {
    d.found = true;
    d.a = x;
    d.b = one;
    d.a_terms = {x};
    d.route = "x in N>=0";
    if (verify()) return d;
  }
  for (const auto& n2 : oq.window().elems) {
    Element n1;
    try {
      n1 = m.add(x, n2);
      if (m.is_zero(n1) || !m.in_n(n1)) continue;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      continue;
    }
    Gamma g1 = oq.phi(n1), g2 = oq.phi(n2);
    if (!oq.comparable(g1, g2)) continue;
    d = Decomposition{};
    d.found = true;
    d.n1 = n1;
    d.n2 = n2;
    const Gamma& lo = oq.leq(g2, g1) ? g2 : g1;
    if (oq.leq(oq.zero(), lo)) {
      d.a = x;
      d.b = one;
      d.a_terms = {n1, m.neg(n2)};
      d.route = "n1 - n2";
    } else if (oq.leq(g2, g1)) {
      Element t = m.mul(n1, m.inv(n2));
      d.a = m.sub(t, one);
      d.b = m.inv(n2);
      d.a_terms = {t, m.neg(one)};
      d.route = "n1 n2^-1 - 1";
    } else {
      Element t = m.mul(n2, m.inv(n1));
      d.a = m.sub(one, t);
      d.b = m.inv(n1);
      d.a_terms = {one, m.neg(t)};
      d.route = "1 - n2 n1^-1";
    }
    if (verify()) return d;
  }
  if (oq.kind() == OrderedQuotient::Kind::Finite) {
    // R as the closure of N_{>=0} under +, -, *
    std::map<std::string, Element> R;
    for (const auto& n : oq.window().elems)
      if (nonneg(n)) R.emplace(m.str(n), n);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Element> cur;
      for (auto& [k, v] : R) cur.push_back(v);
      for (const auto& u : cur)
        for (const auto& v : cur)
          for (const auto& z : {m.add(u, v), m.sub(u, v), m.mul(u, v)})
            if (R.emplace(m.str(z), z).second) grew = true;
    }
    for (const auto& b : oq.window().elems) {
      if (!nonneg(b)) continue;
      Element a = m.mul(x, b);
      if (!R.count(m.str(a))) continue;
      d = Decomposition{};
      d.found = true;
      d.a = a;
      d.b = b;
      d.route = "exhaustive";
      d.verified = nonneg(b) && m.equal(m.mul(a, m.inv(b)), x);
      return d;
    }
  }
  fail(ErrorCode::DifferenceSearchExhausted, "no decomposition of " + m.str(x) + " on the window");
}

TurnwaldResult turnwald_search(const Model& m, const std::vector<Element>& xs, long bound) {
  TurnwaldResult r;
  for (const auto& x : xs)
    if (m.is_zero(x)) fail(ErrorCode::Usage, "turnwald_search needs nonzero elements");
  Element one = m.one();
  auto good = [&](const Element& c) {
    ++r.tried;
    for (const auto& x : xs)
      if (!sum_in_n(m, one, m.mul(c, x))) return false;
    return true;
  };
  std::vector<Element> cands;
  if (m.enumerable()) {
    cands = m.all_units();
    r.route = "scan";
  } else if (m.num_places() > 0) {
    Element u = m.kind() == ModelKind::Quaternion ? m.from_int(2) : uniformizer_of(m);
    for (long k = 1; k <= bound; ++k) cands.push_back(m.pow(u, k));
    r.route = "powers of " + m.str(u);
  } else {
    cands = m.n_window(WindowSpec{1, 1});
    r.route = "window scan";
  }
  for (const auto& c : cands)
    if (good(c)) {
      r.found = true;
      r.c = c;
      return r;
    }
  fail(ErrorCode::SearchExhausted, "no c after " + std::to_string(r.tried) + " candidates");
}

int rank_over_base(const Model& m, const std::vector<Element>& xs) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& x : xs) a.push_back(m.coordinates(x));
  int rank = 0;
  size_t cols = a.empty() ? 0 : a[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    size_t piv = static_cast<size_t>(rank);
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<size_t>(rank) || sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

BasisResult basis_in_n_set(const QuaternionModel& m, const Element& a, bool inverse) {
  if (m.in_n(a)) fail(ErrorCode::Usage, "a must lie outside N");
  BasisResult r;
  r.inverse = inverse;
  auto c0 = [](long v) { return QuadRat{mpq_class(v), mpq_class(0)}; };
  std::vector<Element> ys;
  std::vector<Element> inner{m.one(), m.make(c0(1), c0(2), c0(0), c0(0)), m.make(c0(1), c0(0), c0(2), c0(0)),
                             m.make(c0(1), c0(0), c0(0), c0(2))};
  Element root = m.central(QuadRat{mpq_class(0), mpq_class(1)});
  for (const auto& s : {m.one(), root})
    for (const auto& u : inner) {
      Element y = m.mul(u, s);
      if (!m.in_n(y)) fail(ErrorCode::Internal, "basis element outside N: " + m.str(y));
      ys.push_back(y);
    }
  std::vector<Element> family;
  for (const auto& x : m.reps())
    for (const auto& y : ys) family.push_back(inverse ? m.mul(x, y) : m.mul(x, m.inv(y)));
  r.family = static_cast<long>(family.size());
  r.c = turnwald_search(m, family).c;
  r.i0 = m.coset_of(m.mul(m.inv(r.c), a));
  r.s = m.mul(m.mul(m.inv(a), r.c), m.reps()[r.i0]);
  if (!m.in_n(r.s)) fail(ErrorCode::Internal, "s outside N");
  r.all_members = true;
  for (const auto& y : ys) {
    Element e = inverse ? m.mul(r.s, y) : m.mul(y, m.inv(r.s));
    Element n = inverse ? m.inv(e) : e;
    if (!(m.in_n(n) && sum_in_n(m, a, n))) r.all_members = false;
    r.elements.push_back(e);
  }
  r.rank = rank_over_base(m, r.elements);
  return r;
}

TameCertificate tame_symbol_certificate(const RationalModel& m, long a) {
  TameCertificate t;
  t.a = a;
  t.l = m.l();
  t.m = m.m();
  t.g = m.g();
  if (std::gcd(a, static_cast<long>(t.l)) != 1) fail(ErrorCode::Usage, "a must be prime to l");
  t.exponent = (t.l - 1) / t.g;
  mpz_class base = a, res, mod = static_cast<unsigned long>(t.l);
  mpz_mod(base.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
  mpz_powm_ui(res.get_mpz_t(), base.get_mpz_t(), t.exponent, mod.get_mpz_t());
  t.value = res.get_ui();
  t.certificate = t.value != 1;
  return t;
}

}  // namespace valgraph
