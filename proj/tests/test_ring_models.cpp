#include <doctest.h>

#include <random>
#include <set>

#include "valgraph/model.hpp"
#include "valgraph/spec.hpp"

using namespace valgraph;

namespace {

unsigned powmod(unsigned a, unsigned k, unsigned p) {
  unsigned long r = 1, b = a % p;
  for (; k; k >>= 1, b = b * b % p)
    if (k & 1) r = r * b % p;
  return static_cast<unsigned>(r);
}

template <class F>
void expect_error(ErrorCode code, F&& f) {
  bool thrown = false;
  try {
    f();
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.code() == code);
  }
  CHECK(thrown);
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod 17") {
  GF f(17);
  for (unsigned a = 0; a < 17; ++a)
    for (unsigned b = 0; b < 17; ++b) {
      CHECK(f.add(a, b) == (a + b) % 17);
      CHECK(f.mul(a, b) == a * b % 17);
    }
  for (unsigned a = 1; a < 17; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.exp(f.log(5)) == 5);
}

TEST_CASE("F4 arithmetic matches polynomials mod x^2+x+1") {
  GF f(4);
  auto brute_mul = [](unsigned a, unsigned b) {
    unsigned a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    unsigned c0 = (a0 & b0) ^ (a1 & b1);              // g^2 = g + 1
    unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return c0 | (c1 << 1);
  };
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(f.add(a, b) == (a ^ b));
      CHECK(f.mul(a, b) == brute_mul(a, b));
    }
}

TEST_CASE("F9 and F8 satisfy the field axioms exhaustively") {
  for (unsigned q : {8u, 9u}) {
    GF f(q);
    for (unsigned a = 0; a < q; ++a) {
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
  }
}

TEST_CASE("FiniteField(17,4) cosets") {
  FiniteFieldModel m(17, 4);
  std::set<unsigned> fourth;
  for (unsigned x = 1; x < 17; ++x) fourth.insert(powmod(x, 4, 17));
  CHECK(fourth == std::set<unsigned>{1, 4, 13, 16});
  CHECK(m.index() == 4);
  std::set<unsigned> reps;
  for (const auto& r : m.reps()) reps.insert(std::get<Fq>(r).v);
  CHECK(reps == std::set<unsigned>{1, 3, 9, 10});
  for (unsigned x = 1; x < 17; ++x) {
    CHECK(m.in_n(Fq{x}) == (fourth.count(x) > 0));
    for (unsigned y = 1; y < 17; ++y) {
      unsigned q = x * powmod(y, 15, 17) % 17;
      CHECK((m.coset_of(Fq{x}) == m.coset_of(Fq{y})) == (fourth.count(q) > 0));
      CHECK(m.coset_of(m.mul(Fq{x}, Fq{y})) == m.mul_label(m.coset_of(Fq{x}), m.coset_of(Fq{y})));
    }
  }
  CHECK(std::get<Fq>(m.parse("label:2")).v == std::get<Fq>(m.reps()[2]).v);
  CHECK(std::get<Fq>(m.parse("-1")).v == 16);
}

TEST_CASE("finite field parameter validation") {
  FiniteFieldModel ok(17, 8);  // 3^8 = 16 = -1 mod 17
  CHECK(ok.in_n(Fq{16}));
  CHECK(powmod(3, 8, 17) == 16);
  expect_error(ErrorCode::SpecInvalid, [] { FiniteFieldModel(17, 16); });
  expect_error(ErrorCode::SpecInvalid, [] { FiniteFieldModel(17, 5); });
  expect_error(ErrorCode::SpecInvalid, [] { FiniteFieldModel(15, 2); });
}

TEST_CASE("Laurent model: N = even valuation, residue 1") {
  LaurentModel m(4, 2, 8, 4);
  CHECK(m.index() == 6);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Element x = m.random_element(rng), y = m.random_element(rng);
    const auto& lx = std::get<Laurent>(x);
    bool brute = lx.val % 2 == 0 && lx.c[0] == 1;
    CHECK(m.in_n(x) == brute);
    CHECK(m.valuation(m.mul(x, y), 0) == m.valuation(x, 0) + m.valuation(y, 0));
    CHECK(m.coset_of(m.mul(x, y)) == m.mul_label(m.coset_of(x), m.coset_of(y)));
    // x * x^-1 is 1 to the tracked precision; exact equality is undecidable
    Element prod = m.mul(x, m.inv(x));
    const auto& one = std::get<Laurent>(prod);
    CHECK(one.val == 0);
    REQUIRE(!one.c.empty());
    CHECK(one.c[0] == 1);
    for (size_t k = 1; k < one.c.size(); ++k) CHECK(one.c[k] == 0);
    CHECK(one.prec >= 8);
  }
  CHECK(m.in_n(m.neg(m.one())));  // char 2
  CHECK(m.equal(m.parse("t^-2 + t"), m.add(m.t_pow(-2), m.t_pow(1))));
}

TEST_CASE("function field with two places") {
  FunctionFieldModel m(4, {0, 1}, 2);
  CHECK(m.index() == 36);
  Element t = m.uniformizer();
  CHECK(m.valuation(t, 0) == 1);
  CHECK(m.valuation(t, 1) == 1);
  Element x = m.parse("t");
  CHECK(m.valuation(x, 0) == 1);
  CHECK(m.valuation(x, 1) == 0);
  CHECK(m.valuation(m.swap(x), 0) == 0);
  CHECK(m.valuation(m.swap(x), 1) == 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Element a = m.random_element(rng), b = m.random_element(rng);
    CHECK(m.in_n(a) == (m.in_n_place(a, 0) && m.in_n_place(a, 1)));
    CHECK(m.equal(m.swap(m.swap(a)), a));
    CHECK(m.equal(m.swap(m.mul(a, b)), m.mul(m.swap(a), m.swap(b))));
    CHECK(m.coset_of(m.mul(a, b)) == m.mul_label(m.coset_of(a), m.coset_of(b)));
  }
}

TEST_CASE("rational congruence model") {
  RationalModel m(3, 7, 1000000);
  CHECK(m.g() == 3);
  CHECK(m.index() == 27);
  CHECK(m.h(mpq_class(12)) == 3);
  CHECK(m.h(mpq_class(1, 2)) == -1);
  CHECK(m.vl(mpq_class(49, 3)) == 2);
  // cubes mod 7 are {1, 6}
  for (long a = 1; a < 7; ++a) CHECK((m.residue_class(mpq_class(a)) == 0) == (a == 1 || a == 6));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    Element a = m.random_element(rng), b = m.random_element(rng);
    CHECK(m.coset_of(m.mul(a, b)) == m.mul_label(m.coset_of(a), m.coset_of(b)));
  }
  CHECK(m.in_n(m.from_int(-1)));
}

TEST_CASE("quaternion model arithmetic") {
  QuaternionModel m(17, 1, PrecisionPolicy{});
  Element i = m.parse("i"), j = m.parse("j"), k = m.parse("k");
  CHECK(m.equal(m.mul(i, i), m.from_int(-1)));
  CHECK(m.equal(m.mul(i, j), k));
  CHECK(m.equal(m.mul(j, i), m.neg(k)));
  CHECK(m.index() == 36);
  CHECK(m.in_n(m.from_int(-1)));
  std::mt19937_64 rng(4);
  for (int n = 0; n < 30; ++n) {
    Element a = m.random_element(rng), b = m.random_element(rng);
    QuadArith F{17};
    CHECK(m.nrd(m.mul(a, b)) == F.mul(m.nrd(a), m.nrd(b)));
    CHECK(m.equal(m.swap(m.swap(a)), a));
    CHECK(m.valuation(m.swap(a), 0) == m.valuation(a, 1));
    CHECK(m.coset_of(m.mul(a, b)) == m.mul_label(m.coset_of(a), m.coset_of(b)));
  }
}

TEST_CASE("spec parsing") {
  auto s = parse_spec_text("# comment\nkind = finite-field\nq = 17\nm = 4 # trailing\n");
  CHECK(s.kind == "finite-field");
  CHECK(s.get_int("q", 0) == 17);
  CHECK(build_model(s)->index() == 4);
  expect_error(ErrorCode::SpecInvalid, [] { parse_spec_text("q = 17\n"); });
  expect_error(ErrorCode::SpecInvalid, [] { parse_spec_text("kind = finite-field\ncolour = red\n"); });
  expect_error(ErrorCode::SpecInvalid, [] { parse_spec_text("kind = finite-field\nq = 1\nq = 2\n"); });
  expect_error(ErrorCode::SpecInvalid, [] { parse_spec_text("kind = torus\n"); });
  expect_error(ErrorCode::SpecInvalid, [] { parse_spec_text("kind = finite-field\nq\n"); });
  expect_error(ErrorCode::SpecInvalid, [] { build_model(parse_spec_text("kind = finite-field\nq = x\nm = 2\n")); });
  expect_error(ErrorCode::SpecInvalid, [] { build_model(parse_spec_text("kind = finite-field\nq = 17\n")); });
  expect_error(ErrorCode::SpecInvalid, [] { build_model(parse_spec_text("kind = kappa\nfactors = 2\n")); });
  expect_error(ErrorCode::Usage, [] { load_spec_file("/nonexistent/spec"); });
  auto ff = build_model(parse_spec_text("kind = function-field\nq = 4\ne = 2\nplaces = 0, 1\n"));
  CHECK(ff->num_places() == 2);
}
