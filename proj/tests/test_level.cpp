#include <doctest.h>

#include "valgraph/level.hpp"

using namespace valgraph;

namespace {

std::shared_ptr<QuaternionModel> quaternion() {
  static auto q = std::make_shared<QuaternionModel>(17, 1, PrecisionPolicy{});
  return q;
}

}  // namespace

TEST_CASE("Laurent map is strongly leveled at 0") {
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  OrderedQuotient oq(L, L->t_pow(1), {4, 2});
  CHECK(check_level(oq, {0}, LevelMode::SL).verdict == Verdict::Pass);
  CHECK(check_level(oq, {0}, LevelMode::L).verdict == Verdict::Pass);
  auto r = classify_map(oq);
  REQUIRE(r.s_level.has_value());
  CHECK(*r.s_level == Gamma{0});
  CHECK(r.s_level_zero);
  CHECK(r.total);
  CHECK(r.valuation_like);
  CHECK(r.strong_valuation_like);
  CHECK(r.sl_implies_l);
  CHECK(r.monotone);
}

TEST_CASE("two-place function field: leveled but not valuation-like") {
  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  OrderedQuotient oq(F, F->uniformizer(), {2, 1});
  auto r = classify_map(oq);
  CHECK(r.strongly_leveled);
  REQUIRE(r.s_level.has_value());
  CHECK(*r.s_level == Gamma{1, 1});
  CHECK_FALSE(r.total);
  CHECK_FALSE(r.valuation_like);
  CHECK(r.incomparable.has_value());
  CHECK(r.sl_implies_l);

  auto diag = swap_fixed(*F);
  auto rd = classify_map(oq, &diag);
  REQUIRE(rd.s_level.has_value());
  CHECK(*rd.s_level == Gamma{0, 0});
  CHECK(rd.total);
  CHECK(rd.valuation_like);
  CHECK(rd.sl_implies_l);
}

TEST_CASE("no s-level on F17 index 4") {
  auto f = std::make_shared<FiniteFieldModel>(17, 4);
  OrderedQuotient oq(f, Fq{3}, {});
  auto r = classify_map(oq);
  CHECK_FALSE(r.s_level.has_value());
  CHECK_FALSE(r.valuation_like);
  CHECK(r.sl_implies_l);
  auto f2 = std::make_shared<FiniteFieldModel>(17, 2);
  OrderedQuotient o2(f2, Fq{3}, {});
  CHECK_FALSE(find_s_level(o2).level.has_value());
}

TEST_CASE("SL implies L on every candidate") {
  auto L = std::make_shared<LaurentModel>(4, 2, 8, 4);
  OrderedQuotient ol(L, L->t_pow(1), {4, 2});
  auto F = std::make_shared<FunctionFieldModel>(4, std::vector<unsigned>{0, 1}, 2);
  OrderedQuotient of(F, F->uniformizer(), {2, 1});
  for (const OrderedQuotient* q : {&ol, &of})
    for (const auto& a : level_candidates(*q)) {
      auto sl = check_level(*q, a, LevelMode::SL);
      auto l = check_level(*q, a, LevelMode::L);
      if (sl.verdict == Verdict::Pass) CHECK(l.verdict != Verdict::Fail);
    }
}

TEST_CASE("quaternion s-level") {
  auto Q = quaternion();
  OrderedQuotient oq(Q, Q->pi(), {2, 1});
  auto r = classify_map(oq);
  REQUIRE(r.s_level.has_value());
  CHECK(*r.s_level == Gamma{1, 1});
  CHECK(r.sl_implies_l);
}

TEST_CASE("kappa path-breaking property needs the swap") {
  auto g = build_kappa_graph({2});
  std::vector<int> id(g.order), sw(g.order);
  for (int i = 0; i < g.order; ++i) {
    id[i] = i;
    sw[i] = kappa_swap(i, 2);
  }
  EthConfig cfg;
  cfg.x = kappa_label({1, 1});
  cfg.y = kappa_label({2, 2});
  cfg.sigma = {{"id", id, {}}, {"swap", sw, {}}};
  auto r = check_eth(nullptr, g, cfg);
  CHECK(r.distance == 3);
  CHECK(r.paths.size() == 2);
  CHECK(r.holds);
  for (const auto& p : r.paths) CHECK(p.sigma.has_value());
  cfg.sigma = {{"id", id, {}}};
  CHECK_FALSE(check_eth(nullptr, g, cfg).holds);
}

TEST_CASE("quaternion distance theorems and path-breaking") {
  auto Q = quaternion();
  auto g = build_commuting_graph(group_from_model(*Q));
  CHECK(diameter_bfs(g) == 3);
  int x = Q->coset_of(Q->a()), y = Q->coset_of(Q->pi());
  CHECK(bfs(g, x)[y] == 3);
  auto tr = verify_diameter_theorems(Q, g, Q->a(), Q->pi(), {2, 1}, 2);
  CHECK(tr.distance == 3);
  CHECK(tr.hypothesis_met);
  CHECK(tr.all_pass());

  std::function<Element(const Element&)> ident = [](const Element& e) { return e; };
  std::function<Element(const Element&)> gal = [Q](const Element& e) { return Q->swap(e); };
  EthConfig cfg;
  cfg.sigma = {{"id", induced_perm(*Q, ident), ident}, {"galois", induced_perm(*Q, gal), gal}};
  cfg.M = rational_part(*Q);
  cfg.x = x;
  cfg.y = y;
  cfg.affine_samples = 10;
  auto er = check_eth(Q.get(), g, cfg);
  CHECK(er.distance == 3);
  CHECK(er.paths.size() == 4);
  CHECK(er.holds);
  CHECK(er.affine == Verdict::Pass);
}
