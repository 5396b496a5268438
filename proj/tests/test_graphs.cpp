#include <doctest.h>

#include <array>
#include <queue>
#include <random>
#include <set>

#include "valgraph/graph.hpp"
#include "valgraph/level.hpp"

using namespace valgraph;

namespace {

// permutations of {0,1,2} in the library's label order
using Perm = std::array<int, 3>;
const std::array<Perm, 6> kS3 = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

int brute_diameter(const std::vector<std::vector<char>>& adj) {
  int n = static_cast<int>(adj.size()), best = 0;
  for (int s = 1; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 1; v < n; ++v)
        if (adj[u][v] && d[v] < 0) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    for (int v = 1; v < n; ++v) best = d[v] < 0 ? kInf : std::max(best, d[v]);
    if (best == kInf) return kInf;
  }
  return best;
}

unsigned powmod(unsigned a, unsigned k, unsigned p) {
  unsigned long r = 1, b = a % p;
  for (; k; k >>= 1, b = b * b % p)
    if (k & 1) r = r * b % p;
  return static_cast<unsigned>(r);
}

}  // namespace

TEST_CASE("S3 table matches permutation composition") {
  auto s3 = symmetric3();
  s3.validate();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm c = compose(kS3[a], kS3[b]);
      CHECK(kS3[s3.op(a, b)] == c);
    }
  CHECK(order_profile(s3) == std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("commuting graph of S3 x S3") {
  auto g = build_commuting_graph(direct_product(symmetric3(), symmetric3()));
  // brute adjacency from permutation pairs
  std::vector<std::vector<char>> adj(36, std::vector<char>(36, 0));
  int edges = 0;
  for (int x = 1; x < 36; ++x)
    for (int y = x + 1; y < 36; ++y) {
      const Perm &a1 = kS3[x / 6], &a2 = kS3[x % 6], &b1 = kS3[y / 6], &b2 = kS3[y % 6];
      bool c = compose(a1, b1) == compose(b1, a1) && compose(a2, b2) == compose(b2, a2);
      adj[x][y] = adj[y][x] = c;
      edges += c;
      CHECK(g.edge(x, y) == c);
    }
  CHECK(edges == 109);
  CHECK(g.num_edges() == 109);
  CHECK(g.num_vertices() == 35);
  CHECK(brute_diameter(adj) == 3);
  CHECK(diameter_bfs(g) == 3);
  CHECK(diameter_fw(g) == 3);
  int x = 1 * 6 + 1, y = 4 * 6 + 4;  // transposition pair, 3-cycle pair
  CHECK(bfs(g, x)[y] == 3);
  CHECK(paths_of_length(g, x, y, 3).size() == 4);
  for (const auto& p : paths_of_length(g, x, y, 3)) CHECK(is_path(g, p));
  CHECK_FALSE(is_path(g, {x, y}));
}

TEST_CASE("isomorphism search") {
  auto a = direct_product(symmetric3(), symmetric3());
  auto iso = find_isomorphism(a, a);
  REQUIRE(iso.has_value());
  auto c36 = cyclic_group(36);
  CHECK_FALSE(find_isomorphism(a, c36).has_value());
  auto b = direct_product(symmetric3(), cyclic_group(6));
  CHECK_FALSE(find_isomorphism(a, b).has_value());
}

TEST_CASE("broken tables are rejected") {
  auto t = symmetric3();
  t.mul[1][2] = t.mul[1][1];
  bool thrown = false;
  try {
    t.validate();
  } catch (const Error& e) {
    thrown = e.code() == ErrorCode::TableInconsistent;
  }
  CHECK(thrown);
}

TEST_CASE("kappa graph") {
  auto g = build_kappa_graph({2});
  CHECK(g.num_vertices() == 15);
  CHECK(diameter_bfs(g) == 3);
  int x = kappa_label({1, 1}), y = kappa_label({2, 2});
  CHECK(kappa_name(x, 2) == "alpha+gamma");
  CHECK(kappa_name(y, 2) == "beta+delta");
  CHECK(bfs(g, x)[y] == 3);
  CHECK(paths_of_length(g, x, y, 3).size() == 2);
  for (int v = 0; v < 16; ++v) CHECK(kappa_swap(kappa_swap(v, 2), 2) == v);
  // swap is a graph automorphism
  for (int a = 1; a < 16; ++a)
    for (int b = 1; b < 16; ++b) CHECK(g.edge(a, b) == g.edge(kappa_swap(a, 2), kappa_swap(b, 2)));
}

TEST_CASE("Milnor graphs of F17") {
  for (unsigned m : {4u, 8u}) {
    FiniteFieldModel f(17, m);
    auto g = build_milnor_graph(f, false);
    // brute: edge between the classes of u and 1-u
    std::set<std::pair<int, int>> brute;
    auto cls = [&](unsigned u) {
      for (unsigned k = 0; k < m; ++k)
        for (unsigned x = 1; x < 17; ++x)
          if (powmod(3, k, 17) * powmod(x, m, 17) % 17 == u) return static_cast<int>(k);
      return -1;
    };
    for (unsigned u = 2; u < 17; ++u) {
      int a = cls(u), b = cls((18 - u) % 17);
      if (a > 0 && b > 0 && a != b) brute.insert({std::min(a, b), std::max(a, b)});
    }
    CHECK(g.num_edges() == static_cast<int>(brute.size()));
    CHECK(g.num_edges() == (m == 4 ? 3 : 6));
    auto ax = check_vgraph_axioms(&f, g);
    CHECK(ax.get("V1'").verdict == Verdict::Pass);
    // raw Steinberg edges are not closed under inversion at index 8
    Verdict want = m == 4 ? Verdict::Pass : Verdict::Fail;
    CHECK(ax.get("V2").verdict == want);
    CHECK(ax.get("V3").verdict == want);
    auto gc = build_milnor_graph(f, true);
    auto axc = check_vgraph_axioms(&f, gc);
    CHECK(axc.all_pass());
    CHECK(gc.num_edges() >= g.num_edges());
    for (int a = 1; a < g.order; ++a)
      for (int b = 1; b < g.order; ++b)
        if (g.edge(a, b)) CHECK(gc.edge(a, b));
    if (m == 8) CHECK(gc.num_edges() == 21);
  }
}

TEST_CASE("axiom checker finds planted violations") {
  auto s = direct_product(symmetric3(), symmetric3());
  auto g = build_commuting_graph(s);
  auto ok = check_vgraph_axioms(nullptr, g);
  CHECK(ok.get("V2").verdict == Verdict::Pass);
  CHECK(ok.get("V3").verdict == Verdict::Pass);
  CHECK(ok.get("V1").verdict == Verdict::NotApplicable);
  // remove (x, y) with x of order 3: x^-1 stays adjacent to y
  int x = 4 * 6, y = 4 * 6 + 1;
  REQUIRE(g.edge(x, y));
  g.set_edge(x, y, false);
  auto bad = check_vgraph_axioms(nullptr, g);
  CHECK(bad.get("V2").verdict == Verdict::Fail);
  CHECK_FALSE(bad.get("V2").witness.empty());
  auto mut = edge_removal_mutations(nullptr, build_commuting_graph(s));
  CHECK(mut.mutants == 109);
  CHECK(mut.caught == 109);
  CHECK(mut.escaped.empty());
}

TEST_CASE("BFS and Floyd-Warshall agree on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 20);
    auto g = empty_graph(n, EdgeRule::Explicit);
    std::bernoulli_distribution coin(0.1 + 0.05 * (trial % 8));
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) g.set_edge(a, b, true);
    CHECK(diameter_bfs(g) == diameter_fw(g));
    CHECK(diameter_bfs(g) == brute_diameter(g.adj));
    CHECK(all_pairs_bfs(g) == floyd_warshall(g));
  }
}

TEST_CASE("DOT export") {
  auto e = empty_graph(1, EdgeRule::Explicit);
  std::string d0 = to_dot(e, "trivial");
  CHECK(d0.find("graph") == 0);
  CHECK(d0.find("label=") == std::string::npos);
  auto k = build_kappa_graph({2});
  std::string dk = to_dot(k, "kappa");
  CHECK(dk == to_dot(k, "kappa"));
  size_t nodes = 0, pos = 0, last = 0;
  bool sorted = true;
  while ((pos = dk.find("[label=", pos)) != std::string::npos) {
    size_t start = dk.rfind('v', pos);
    size_t id = std::stoul(dk.substr(start + 1, pos - start - 2));
    sorted = sorted && id > last;
    last = id;
    ++nodes;
    ++pos;
  }
  CHECK(nodes == 15);
  CHECK(sorted);
  auto s = build_commuting_graph(direct_product(symmetric3(), symmetric3()));
  std::string ds = to_dot(s, "s3xs3");
  CHECK(ds.find("v35 [") != std::string::npos);
  CHECK(ds.find("v36 [") == std::string::npos);
}

TEST_CASE("path-breaking property on S3 x S3") {
  auto g = build_commuting_graph(direct_product(symmetric3(), symmetric3()));
  std::vector<int> id(36), fs(36);
  for (int i = 0; i < 36; ++i) {
    id[i] = i;
    fs[i] = (i % 6) * 6 + i / 6;
  }
  EthConfig cfg;
  cfg.sigma = {{"id", id, {}}, {"factor-swap", fs, {}}};
  cfg.x = 4 * 6 + 4;
  cfg.y = 1 * 6 + 1;
  auto r = check_eth(nullptr, g, cfg);
  CHECK(r.distance == 3);
  CHECK(r.paths.size() == 4);
  CHECK(r.holds);
  cfg.x = 1;
  cfg.y = 2;
  bool thrown = false;
  try {
    check_eth(nullptr, g, cfg);
  } catch (const Error& e) {
    thrown = e.code() == ErrorCode::HypothesisNotMet;
  }
  CHECK(thrown);
}
