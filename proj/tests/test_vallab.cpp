#include <doctest.h>

#include <random>
#include <set>

#include "valgraph/level.hpp"
#include "valgraph/vallab.hpp"

using namespace valgraph;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("valuation axioms and association") {
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  auto v = all_places(*L);
  CHECK(valuation_axioms(*L, v).ok);
  OrderedQuotient oq(L, L->t_pow(1), {4, 2});
  auto a = associated_check(v, oq);
  CHECK(a.holds);
  CHECK(a.checked > 0);
  auto neg = negated(v, 0);
  CHECK(valuation_axioms(*L, neg).ok == false);
  CHECK_FALSE(associated_check(neg, oq).holds);

  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  CHECK(valuation_axioms(*F, all_places(*F)).ok);
  CHECK(valuation_axioms(*F, single_place(*F, 1)).ok);
  CHECK(all_places(*F).value(*F, F->uniformizer()) == std::vector<long>{1, 1});
}

TEST_CASE("openness: delta and single-place refutation") {
  LaurentModel L(4, 2, 8, 4);
  auto d = find_delta(L, all_places(L));
  CHECK(d.found);
  CHECK(d.delta == std::vector<long>{0});
  FunctionFieldModel F(4, {0, 1}, 2);
  auto df = find_delta(F, all_places(F));
  CHECK(df.found);
  CHECK(df.delta == std::vector<long>{0, 0});
  auto rs = refute_single_place(F, 8);
  CHECK(rs.found);
  std::set<std::pair<int, long>> covered;
  for (const auto& w : rs.witnesses) {
    covered.insert({w.place, w.delta});
    CHECK_FALSE(F.in_n(F.parse(w.x)));
  }
  CHECK(covered.size() == 18);
}

TEST_CASE("escape prime") {
  RationalModel R(3, 7, 1000000);
  auto e = find_escape_prime(R, {{2, 3}, {3, 2}, {7, 1}});
  REQUIRE(e.found);
  CHECK(e.modulus == 504);
  CHECK(e.k == 2);
  CHECK(e.p == 1009);
  CHECK(is_prime(e.p));
  for (unsigned long k = 1; k < e.k; ++k) CHECK_FALSE(is_prime(1 + k * 504));
  CHECK(e.h == 1);
  CHECK_FALSE(e.in_n);
}

TEST_CASE("tame symbol certificates") {
  RationalModel R(3, 7, 1000000);
  // cubes mod 7 are {1, 6}; certificate iff a^2 mod 7 != 1
  for (long a : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 10L}) {
    auto t = tame_symbol_certificate(R, a);
    unsigned long brute = static_cast<unsigned long>(a * a % 7);
    CHECK(t.exponent == 2);
    CHECK(t.value == brute);
    CHECK(t.certificate == (brute != 1));
  }
  CHECK(tame_symbol_certificate(R, 3).value == 2);
  CHECK(tame_symbol_certificate(R, 2).value == 4);
  CHECK(error_of([&] { tame_symbol_certificate(R, 14); }) != ErrorCode::Internal);
}

TEST_CASE("generated ring windows") {
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  OrderedQuotient ol(L, L->t_pow(1), {4, 2});
  auto rl = generated_ring_window(ol, RingKind::R, {0});
  REQUIRE(rl.gamma.has_value());
  CHECK(*rl.gamma == Gamma{1});
  auto al = generated_ring_window(ol, RingKind::A, {0});
  CHECK(al.base_size > 0);
  CHECK_FALSE(al.minus_one);
  auto fake = generated_ring_window(ol, RingKind::A, {0}, 2, true);
  CHECK(fake.fake_phi);
  CHECK(fake.minus_one);

  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  OrderedQuotient of(F, F->uniformizer(), {2, 1});
  auto rf = generated_ring_window(of, RingKind::R, {0, 0});
  REQUIRE(rf.gamma.has_value());
  CHECK(*rf.gamma == Gamma{0, 1});
  auto af = generated_ring_window(of, RingKind::A, {1, 1});
  CHECK(af.base_size > 0);
  CHECK_FALSE(af.minus_one);

  auto Q = std::make_shared<QuaternionModel>(17, 1, PrecisionPolicy{});
  OrderedQuotient oq(Q, Q->pi(), {2, 1});
  auto rq = generated_ring_window(oq, RingKind::R, {0, 0});
  REQUIRE(rq.gamma.has_value());
  CHECK(*rq.gamma == Gamma{0, 1});
  auto aq = generated_ring_window(oq, RingKind::A, {1, 1});
  CHECK(aq.base_size == 32);
  CHECK(aq.members.size() == 2113);
  CHECK_FALSE(aq.minus_one);
}

TEST_CASE("x = a b^-1 decompositions") {
  auto f = std::make_shared<FiniteFieldModel>(17, 4);
  OrderedQuotient o17(f, Fq{3}, {});
  for (unsigned a = 0; a < 17; ++a) CHECK(decompose_ab_inverse(o17, Fq{a}).verified);
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  OrderedQuotient ol(L, L->t_pow(1), {4, 2});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Element x = L->random_element(rng);
    auto d = decompose_ab_inverse(ol, x);
    REQUIRE(d.verified);
    CHECK(L->equal(L->mul(d.a, L->inv(d.b)), x));
    CHECK(ol.phi(d.b) >= Gamma{0});
  }
  auto d = decompose_ab_inverse(ol, L->t_pow(-1));
  CHECK(L->equal(d.a, L->t_pow(7)));
  CHECK(L->equal(d.b, L->t_pow(8)));
}

TEST_CASE("common c with 1 + c x in N") {
  FiniteFieldModel f(17, 4);
  const std::set<unsigned> fourth{1, 4, 13, 16};
  auto cs = [&](unsigned x) {
    std::set<unsigned> out;
    for (unsigned c = 1; c < 17; ++c)
      if (fourth.count((1 + c * x) % 17)) out.insert(c);
    return out;
  };
  CHECK(cs(3) == std::set<unsigned>{1, 4, 5});
  CHECK(cs(9) == std::set<unsigned>{6, 7, 13});
  auto one = turnwald_search(f, {Fq{3}});
  REQUIRE(one.found);
  CHECK(std::get<Fq>(one.c).v == 1);
  CHECK(error_of([&] { turnwald_search(f, {Fq{3}, Fq{9}}); }) == ErrorCode::SearchExhausted);
}

TEST_CASE("quaternion bases inside N(a) and N(a)^-1") {
  QuaternionModel Q(17, 1, PrecisionPolicy{});
  auto tw = turnwald_search(Q, {Q.pi(), Q.a()});
  REQUIRE(tw.found);
  CHECK(Q.in_n(Q.add(Q.one(), Q.mul(tw.c, Q.pi()))));
  CHECK(Q.in_n(Q.add(Q.one(), Q.mul(tw.c, Q.a()))));
  for (bool inv : {false, true}) {
    auto b = basis_in_n_set(Q, Q.pi(), inv);
    CHECK(b.rank == 8);
    CHECK(b.all_members);
    CHECK(rank_over_base(Q, b.elements) == 8);
  }
}
