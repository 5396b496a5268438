#include <doctest.h>

#include <random>
#include <set>

#include "valgraph/order.hpp"

using namespace valgraph;

namespace {

// N(y) over integers mod 17, N = m-th powers
struct BruteF17 {
  unsigned m;
  std::set<unsigned> n;
  explicit BruteF17(unsigned m_) : m(m_) {
    for (unsigned x = 1; x < 17; ++x) {
      unsigned long r = 1;
      for (unsigned k = 0; k < m; ++k) r = r * x % 17;
      n.insert(static_cast<unsigned>(r));
    }
  }
  std::set<unsigned> nset(unsigned y) const {
    std::set<unsigned> out;
    for (unsigned k : n)
      if (n.count((y + k) % 17)) out.insert(k);
    return out;
  }
  bool rel(unsigned y, unsigned a, unsigned b) const {  // N(ay) subset N(by)
    auto A = nset(a * y % 17), B = nset(b * y % 17);
    for (unsigned k : A)
      if (!B.count(k)) return false;
    return true;
  }
};

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("N(y) on F17 matches brute force") {
  for (unsigned m : {2u, 4u, 8u}) {
    BruteF17 b(m);
    FiniteFieldModel f(17, m);
    auto w = make_window(f, {});
    CHECK(w.exhaustive);
    CHECK(w.elems.size() == b.n.size());
    for (unsigned y = 1; y < 17; ++y) {
      if (b.n.count(y)) continue;
      auto v = n_set(f, Fq{y}, w);
      std::set<unsigned> got;
      for (size_t i = 0; i < w.elems.size(); ++i)
        if (v.member[i]) got.insert(std::get<Fq>(w.elems[i]).v);
      CHECK(got == b.nset(y));
      CHECK(v.cert == Cert::Certified);
    }
  }
  CHECK(BruteF17(4).nset(3) == std::set<unsigned>{1, 13});
  CHECK(BruteF17(4).nset(10).empty());
}

TEST_CASE("ordered quotient on F17 index 4") {
  auto f = std::make_shared<FiniteFieldModel>(17, 4);
  BruteF17 b(4);
  OrderedQuotient oq(f, Fq{3}, {});
  CHECK(oq.kind() == OrderedQuotient::Kind::Finite);
  CHECK(oq.cert() == Cert::Certified);
  // the four translates N(3n) are distinct 2-sets, so U is trivial and no two classes compare
  CHECK(oq.num_classes() == 4);
  for (unsigned a : b.n)
    for (unsigned c : b.n) {
      CHECK(oq.leq(oq.phi(Fq{a}), oq.phi(Fq{c})) == b.rel(3, a, c));
      CHECK(rel_p(*f, Fq{3}, Fq{a}, Fq{c}, oq.window(), RelMethod::Brute).value == b.rel(3, a, c));
    }
  CHECK(oq.in_u(Fq{1}));
  CHECK_FALSE(oq.in_u(Fq{4}));
  CHECK_FALSE(is_totally_ordered(oq).total);
  CHECK(error_of([&] { OrderedQuotient(f, Fq{4}, {}); }) == ErrorCode::YInN);
  CHECK(error_of([&] { OrderedQuotient(f, Fq{10}, {}); }) == ErrorCode::HypothesisNotMet);
}

TEST_CASE("seven conditions agree on every F17 triple") {
  for (unsigned m : {2u, 4u}) {
    auto f = std::make_shared<FiniteFieldModel>(17, m);
    auto w = make_window(*f, {});
    long n = 0;
    for (const auto& y : f->all_units()) {
      if (f->in_n(y)) continue;
      std::optional<OrderedQuotient> oq;
      try {
        oq.emplace(f, y, WindowSpec{});
      } catch (const Error&) {
      }
      for (const auto& a : w.elems)
        for (const auto& c : w.elems) {
          auto r = oq ? seven_conditions(*oq, a, c, w) : seven_conditions_raw(*f, y, a, c, w, w);
          CHECK(r.agree);
          CHECK(r.phi_evaluated == oq.has_value());
          ++n;
        }
    }
    CHECK(n == (m == 4 ? 192 : 512));
  }
}

TEST_CASE("P = N(y)^-1 y on F17") {
  FiniteFieldModel f(17, 4);
  BruteF17 b(4);
  auto w = make_window(f, {});
  auto p = p_set(f, Fq{3}, w);
  CHECK(p.agree);
  // brute: b in 3N with b + 1 in N
  std::set<unsigned> brute, got;
  for (unsigned k : b.n) {
    unsigned x = 3 * k % 17;
    if (b.n.count((x + 1) % 17)) brute.insert(x);
  }
  for (const auto& e : p.left) got.insert(std::get<Fq>(e).v);
  CHECK(got == brute);
  for (unsigned x = 1; x < 17; ++x) CHECK(in_p(f, Fq{3}, Fq{x}) == (brute.count(x) > 0));
}

TEST_CASE("Laurent closed form and Z order") {
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  auto w = make_window(*L, {4, 2});
  for (long v : {-5L, -1L, 0L, 3L}) {
    Element y = L->series({L->residue_field()->gen(), 1}, v);
    REQUIRE(has_closed_form(*L, y));
    auto ns = n_set(*L, y, w);
    CHECK(ns.mismatches == 0);
    CHECK(ns.cert == Cert::WindowCertified);
    // N(y) = {n : w(n) < w(y)}
    for (size_t i = 0; i < w.elems.size(); ++i) CHECK(ns.member[i] == (L->valuation(w.elems[i], 0) < v));
  }
  OrderedQuotient oq(L, L->t_pow(1), {4, 2});
  CHECK(oq.rank() == 1);
  CHECK(oq.phi(L->t_pow(4)) == Gamma{2});
  CHECK(oq.phi(L->t_pow(-2)) == Gamma{-1});
  CHECK(oq.leq(Gamma{-1}, Gamma{2}));
  CHECK(is_totally_ordered(oq).total);
  CHECK(oq.u_mismatches(make_window(*L, {2, 2})) == 0);
  CHECK(error_of([&] { OrderedQuotient(L, L->t_pow(2), {4, 2}); }) == ErrorCode::YInN);
}

TEST_CASE("brute and closed rel_P agree on sampled local triples") {
  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  auto w = make_window(*F, {3, 1});
  auto small = make_window(*F, {1, 1});
  std::mt19937_64 rng(5);
  long decisive = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& a = small.elems[rng() % small.elems.size()];
    const auto& b = small.elems[rng() % small.elems.size()];
    auto r = rel_p(*F, F->uniformizer(), a, b, w, RelMethod::Both);
    CHECK_FALSE(r.disagree);
    decisive += r.cert != Cert::Inconclusive;
  }
  CHECK(decisive == 200);
}

TEST_CASE("Z^2 product order and the diagonal") {
  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  OrderedQuotient oq(F, F->uniformizer(), {2, 1});
  CHECK(oq.rank() == 2);
  CHECK(oq.leq(Gamma{0, -1}, Gamma{1, 0}));
  CHECK_FALSE(oq.comparable(Gamma{1, -1}, Gamma{-1, 1}));
  CHECK(oq.add(Gamma{1, -1}, oq.neg(Gamma{1, -1})) == oq.zero());
  auto t = is_totally_ordered(oq);
  CHECK_FALSE(t.total);
  REQUIRE(t.witness.has_value());
  auto diag = swap_fixed(*F);
  CHECK(is_totally_ordered(oq, &diag).total);
  CHECK(graded_lex_less(Gamma{1, 0}, Gamma{0, 2}));
  CHECK(graded_lex_less(Gamma{0, 1}, Gamma{1, 0}));
}

TEST_CASE("In/Inc relation") {
  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  auto w = make_window(*F, {2, 1});
  auto sub = make_window(*F, {1, 1});
  Subgroup whole = whole_n(*F);
  auto r = check_in_inc(*F, whole, F->uniformizer(), F->uniformizer(), w, sub);
  CHECK(r.implication_ok);
  auto diag = swap_fixed(*F);
  auto rd = check_in_inc(*F, diag, F->uniformizer(), F->uniformizer(), w, sub);
  CHECK(rd.in_rs);
  CHECK(rd.implication_ok);
}

TEST_CASE("identity suite on finite and local models") {
  FiniteFieldModel f2(17, 2), f4(17, 4);
  CHECK(n_minus_n_covers(f2));
  CHECK_FALSE(n_minus_n_covers(f4));
  for (auto* f : {&f2, &f4}) {
    std::vector<Element> ys;
    for (const auto& u : f->all_units())
      if (!f->in_n(u)) ys.push_back(u);
    auto r = identity_suite(*f, ys, make_window(*f, {}), f->all_units(), 100);
    CHECK(r.all_pass());
    CHECK(r.cert == Cert::Certified);
    CHECK(r.find("N(y) nonempty")->applicable == (f == &f2));
  }
  LaurentModel L(4, 2, 8, 4);
  auto r = identity_suite(L, {L.t_pow(1), L.t_pow(-3)}, make_window(L, {3, 2}), {L.t_pow(1)});
  CHECK(r.all_pass());
  CHECK(r.cert == Cert::WindowCertified);
}
