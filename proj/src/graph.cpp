#include "valgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace valgraph {

const char* rule_name(EdgeRule r) {
  switch (r) {
    case EdgeRule::Commuting: return "commuting";
    case EdgeRule::SteinbergBrute: return "steinberg";
    case EdgeRule::SteinbergClosure: return "steinberg-closure";
    case EdgeRule::KappaPairing: return "kappa";
    case EdgeRule::CentralizerClosure: return "centralizer-closure";
    case EdgeRule::Explicit: return "explicit";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

std::string dist_str(int d) { return d == kInf ? "inf" : std::to_string(d); }

int QuotientGraph::num_edges() const {
  int e = 0;
  for (int a = 1; a < order; ++a)
    for (int b = a + 1; b < order; ++b) e += adj[a][b];
  return e;
}

void QuotientGraph::set_edge(int a, int b, bool on) {
  if (a == b || a == 0 || b == 0) return;
  adj[a][b] = adj[b][a] = on;
}

QuotientGraph empty_graph(int order, EdgeRule rule) {
  QuotientGraph g;
  g.order = order;
  g.rule = rule;
  g.adj.assign(order, std::vector<char>(order, 0));
  for (int a = 0; a < order; ++a) g.names.push_back(std::to_string(a));
  return g;
}

QuotientGraph build_commuting_graph(const GroupTable& t) {
  t.validate();
  QuotientGraph g = empty_graph(t.n, EdgeRule::Commuting);
  if (!t.names.empty()) g.names = t.names;
  for (int a = 1; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b)
      if (t.commute(a, b)) g.set_edge(a, b, true);
  g.group = std::make_shared<GroupTable>(t);
  return g;
}

std::vector<std::pair<int, int>> steinberg_pairs(const Model& m) {
  if (!m.enumerable()) fail(ErrorCode::NotEnumerable, m.describe());
  std::set<std::pair<int, int>> out;
  Element one = m.one();
  for (const auto& u : m.all_units()) {
    Element v = m.sub(one, u);
    if (m.is_zero(v)) continue;
    int a = m.coset_of(u), b = m.coset_of(v);
    if (a != 0 && b != 0) out.insert({a, b});
  }
  return {out.begin(), out.end()};
}

QuotientGraph build_milnor_graph(const Model& m, bool closure) {
  auto pairs = steinberg_pairs(m);
  auto t = std::make_shared<GroupTable>(group_from_model(m));
  QuotientGraph g = empty_graph(t->n, closure ? EdgeRule::SteinbergClosure : EdgeRule::SteinbergBrute);
  g.names = t->names;
  g.group = t;
  if (!closure) {
    for (auto [a, b] : pairs) g.set_edge(a, b, true);
    return g;
  }
  // G cyclic of order n: G (x) G = Z/n via z^i (x) z^j -> ij
  int n = t->n, z = -1;
  for (int a = 0; a < n && z < 0; ++a)
    if (t->order_of(a) == n) z = a;
  if (z < 0) fail(ErrorCode::Usage, "closure mode needs a cyclic quotient");
  std::vector<int> lg(n);
  for (int k = 0, x = 0; k < n; ++k, x = t->mul[x][z]) lg[x] = k;
  int s = n;  // subgroup generated by the relation exponents is sZ/n
  for (auto [a, b] : pairs) s = std::gcd(s, static_cast<int>((static_cast<long>(lg[a]) * lg[b]) % n));
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((static_cast<long>(lg[a]) * lg[b]) % n % s == 0) g.set_edge(a, b, true);
  return g;
}

int kappa_label(const std::vector<int>& comps) {
  int l = 0;
  for (size_t i = 0; i < comps.size(); ++i) l |= (comps[i] & 3) << (2 * i);
  return l;
}

std::string kappa_name(int label, int factors) {
  if (label == 0) return "0";
  static const char* greek[2][2] = {{"alpha", "beta"}, {"gamma", "delta"}};
  std::string out;
  for (int i = 0; i < factors; ++i)
    for (int j = 0; j < 2; ++j)
      if (label >> (2 * i + j) & 1) {
        if (!out.empty()) out += "+";
        out += i < 2 ? std::string(greek[i][j]) : std::string(j ? "u" : "e") + std::to_string(i);
      }
  return out;
}

int kappa_swap(int label, int factors) {
  if (factors < 2) return label;
  int lo = label & 3, hi = (label >> 2) & 3;
  return (label & ~15) | (lo << 2) | hi;
}

QuotientGraph build_kappa_graph(const KappaPresentation& p) {
  if (p.factors < 1 || p.factors > 4) fail(ErrorCode::BadPresentation, "factor count must be in [1,4]");
  int n = 1 << (2 * p.factors);
  auto t = std::make_shared<GroupTable>();
  t->n = n;
  t->mul.assign(n, std::vector<int>(n));
  t->inv.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t->mul[a][b] = a ^ b;
    t->inv[a] = a;
    t->names.push_back(kappa_name(a, p.factors));
  }
  QuotientGraph g = empty_graph(n, EdgeRule::KappaPairing);
  g.names = t->names;
  g.group = t;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool zero = true;
      for (int i = 0; i < p.factors && zero; ++i) {
        int x = (a >> (2 * i)) & 3, y = (b >> (2 * i)) & 3;
        zero = x == 0 || y == 0 || x == y;
      }
      if (zero) g.set_edge(a, b, true);
    }
  return g;
}

namespace {

std::vector<char> subgroup_closure(const GroupTable& t, std::vector<char> s) {
  s[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < t.n; ++a)
      if (s[a])
        for (int b = 0; b < t.n; ++b)
          if (s[b] && !s[t.mul[a][b]]) {
            s[t.mul[a][b]] = 1;
            grew = true;
          }
  }
  return s;
}

}  // namespace

QuotientGraph build_min_centralizer_vgraph(const Model& m) {
  if (!m.enumerable()) fail(ErrorCode::NotEnumerable, m.describe());
  auto t = std::make_shared<GroupTable>(group_from_model(m));
  int n = t->n;
  std::vector<Element> nset;
  for (const auto& u : m.all_units())
    if (m.in_n(u)) nset.push_back(u);
  std::vector<std::vector<char>> S(n, std::vector<char>(n, 0));
  for (int a = 1; a < n; ++a) {
    S[a][a] = 1;
    for (const Element& base : {m.reps()[a], m.inv(m.reps()[a])})
      for (const auto& k : nset) {
        Element x = m.add(base, k);
        if (!m.is_zero(x)) S[a][m.coset_of(x)] = 1;
      }
    S[a] = subgroup_closure(*t, S[a]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b)
        if (S[a][b] && !S[b][a]) {
          S[b][a] = 1;
          S[b] = subgroup_closure(*t, S[b]);
          changed = true;
        }
      int ai = t->inv[a];
      for (int b = 0; b < n; ++b)
        if (S[a][b] && !S[ai][b]) {
          S[ai][b] = 1;
          changed = true;
        }
      if (changed) S[ai] = subgroup_closure(*t, S[ai]);
    }
  }
  QuotientGraph g = empty_graph(n, EdgeRule::CentralizerClosure);
  g.names = t->names;
  g.group = t;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (S[a][b]) {
        if (!t->commute(a, b))
          fail(ErrorCode::ClosureEscapesCentralizer,
               "coset " + t->names[b] + " entered the neighbourhood of " + t->names[a] + " without commuting");
        g.set_edge(a, b, true);
      }
  return g;
}

std::vector<int> bfs(const QuotientGraph& g, int src) {
  std::vector<int> d(g.order, kInf);
  std::vector<int> q{src};
  d[src] = 0;
  for (size_t h = 0; h < q.size(); ++h) {
    int x = q[h];
    for (int y = 1; y < g.order; ++y)
      if (g.adj[x][y] && d[y] == kInf) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

std::vector<std::vector<int>> all_pairs_bfs(const QuotientGraph& g) {
  std::vector<std::vector<int>> d(g.order);
  for (int a = 1; a < g.order; ++a) d[a] = bfs(g, a);
  d[0].assign(g.order, kInf);
  return d;
}

std::vector<std::vector<int>> floyd_warshall(const QuotientGraph& g) {
  int n = g.order;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int a = 1; a < n; ++a) {
    d[a][a] = 0;
    for (int b = 1; b < n; ++b)
      if (g.adj[a][b]) d[a][b] = 1;
  }
  for (int k = 1; k < n; ++k)
    for (int a = 1; a < n; ++a) {
      if (d[a][k] == kInf) continue;
      for (int b = 1; b < n; ++b)
        if (d[k][b] != kInf && d[a][k] + d[k][b] < d[a][b]) d[a][b] = d[a][k] + d[k][b];
    }
  return d;
}

int diameter(const std::vector<std::vector<int>>& dist) {
  int best = 0;
  for (size_t a = 1; a < dist.size(); ++a)
    for (size_t b = 1; b < dist.size(); ++b) best = std::max(best, dist[a][b]);
  return best;
}

int diameter_bfs(const QuotientGraph& g) { return diameter(all_pairs_bfs(g)); }
int diameter_fw(const QuotientGraph& g) { return diameter(floyd_warshall(g)); }

std::vector<int> eccentricities(const QuotientGraph& g) {
  std::vector<int> e(g.order, 0);
  for (int a = 1; a < g.order; ++a) {
    auto d = bfs(g, a);
    for (int b = 1; b < g.order; ++b) e[a] = std::max(e[a], d[b]);
  }
  return e;
}

std::vector<std::vector<int>> paths_of_length(const QuotientGraph& g, int u, int v, int len) {
  if (len < 0 || len > 6) fail(ErrorCode::Usage, "path length must be in [0,6]");
  std::vector<std::vector<int>> out;
  std::vector<int> cur{u};
  std::vector<char> used(g.order, 0);
  used[u] = 1;
  auto rec = [&](auto&& self) -> void {
    int x = cur.back();
    if (static_cast<int>(cur.size()) == len + 1) {
      if (x == v) out.push_back(cur);
      return;
    }
    for (int y = 1; y < g.order; ++y)
      if (g.adj[x][y] && !used[y]) {
        used[y] = 1;
        cur.push_back(y);
        self(self);
        cur.pop_back();
        used[y] = 0;
      }
  };
  rec(rec);
  return out;
}

bool is_path(const QuotientGraph& g, const std::vector<int>& seq) {
  for (int x : seq)
    if (x <= 0 || x >= g.order) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adj[seq[i]][seq[i + 1]]) return false;
  return true;
}

const AxiomResult& AxiomReport::get(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  fail(ErrorCode::Internal, "no axiom " + axiom);
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.verdict != Verdict::Fail; });
}

namespace {

struct Checker {
  AxiomResult r;
  explicit Checker(const std::string& name) {
    r.axiom = name;
    r.verdict = Verdict::Pass;
  }
  void check(bool ok, const std::vector<std::string>& w) {
    ++r.checked;
    if (!ok && r.verdict == Verdict::Pass) {
      r.verdict = Verdict::Fail;
      r.witness = w;
    }
  }
};

void check_v1_model(const Model& m, const QuotientGraph& g, int samples, unsigned long seed, AxiomReport& rep) {
  Checker v1("V1"), v1p("V1'");
  Element one = m.one();
  auto pair_ok = [&](int a, int b) { return g.near(a, b); };
  if (m.enumerable()) {
    auto units = m.all_units();
    std::vector<Element> nset;
    for (const auto& u : units)
      if (m.in_n(u)) nset.push_back(u);
    for (const auto& a : units) {
      int ca = m.coset_of(a);
      if (ca == 0) continue;
      for (const auto& k : nset) {
        Element b = m.sub(a, k);
        if (m.is_zero(b)) continue;
        int cb = m.coset_of(b);
        if (cb == 0) continue;
        v1.check(pair_ok(ca, cb), {m.str(a), m.str(b)});
      }
      Element v = m.sub(one, a);
      if (m.is_zero(v)) continue;
      int cv = m.coset_of(v);
      if (cv == 0) continue;
      v1p.check(pair_ok(ca, cv), {m.str(a), m.str(v)});
    }
  } else {
    v1.r.sampled = v1p.r.sampled = true;
    std::mt19937_64 rng(seed);
    auto nwin = m.n_window(WindowSpec{1, 1});
    std::vector<Element> pool;
    for (const auto& r : m.reps())
      for (size_t i = 0; i < nwin.size() && i < 6; ++i) pool.push_back(m.mul(r, nwin[(i * 7) % nwin.size()]));
    while (static_cast<int>(pool.size()) < samples) pool.push_back(m.random_element(rng));
    for (const auto& a : pool) {
      try {
        int ca = m.coset_of(a);
        if (ca == 0) continue;
        Element v = m.sub(one, a);
        if (!m.is_zero(v)) {
          int cv = m.coset_of(v);
          if (cv != 0) v1p.check(pair_ok(ca, cv), {m.str(a), m.str(v)});
        }
        const Element& k = nwin[rng() % nwin.size()];
        Element b = m.sub(a, k);
        if (!m.is_zero(b)) {
          int cb = m.coset_of(b);
          if (cb != 0) v1.check(pair_ok(ca, cb), {m.str(a), m.str(b)});
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PrecisionExhausted) throw;
      }
    }
  }
  rep.results.push_back(v1.r);
  rep.results.push_back(v1p.r);
}

}  // namespace

AxiomReport check_vgraph_axioms(const Model* m, const QuotientGraph& g, int samples, unsigned long seed) {
  if (m && m->index() != g.order)
    fail(ErrorCode::VertexMismatch, "graph has " + std::to_string(g.order - 1) + " vertices, model quotient has " +
                                        std::to_string(m->index() - 1) + " nontrivial cosets");
  std::shared_ptr<const GroupTable> t = g.group;
  if (!t) {
    if (!m) fail(ErrorCode::VertexMismatch, "graph carries no group table");
    t = std::make_shared<GroupTable>(group_from_model(*m));
  }
  AxiomReport rep;
  if (m) {
    check_v1_model(*m, g, samples, seed, rep);
  } else {
    AxiomResult a, b;
    a.axiom = "V1";
    b.axiom = "V1'";
    rep.results.push_back(a);
    rep.results.push_back(b);
  }
  int n = g.order;
  const auto& nm = g.names;
  Checker v2("V2"), v3("V3"), v3p("V3'"), v3pp("V3''");
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      if (g.near(a, b)) v2.check(g.near(t->inv[a], b), {nm[a], nm[b]});
    }
  auto dist = all_pairs_bfs(g);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      int ab = t->mul[a][b], ba = t->mul[b][a];
      if (ab != 0) {
        bool hyp = dist[a][ab] <= 2 || dist[a][ba] <= 2;
        if (hyp) v3p.check(dist[a][b] <= 2, {nm[a], nm[b]});
        for (int c = 1; c < n; ++c)
          if (g.near(a, c) && g.near(ab, c)) v3.check(g.near(b, c), {nm[a], nm[b], nm[c]});
      }
      if (a != b) {
        int q = t->mul[t->inv[a]][b];
        for (int c = 1; c < n; ++c)
          if (g.near(a, c) && g.near(b, c)) v3pp.check(g.near(q, c), {nm[a], nm[b], nm[c]});
      }
    }
  rep.results.push_back(v2.r);
  rep.results.push_back(v3.r);
  rep.results.push_back(v3p.r);
  rep.results.push_back(v3pp.r);
  return rep;
}

MutationSummary edge_removal_mutations(const Model* m, const QuotientGraph& g) {
  MutationSummary s;
  for (int a = 1; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b) {
      if (!g.adj[a][b]) continue;
      QuotientGraph h = g;
      h.rule = EdgeRule::Explicit;
      h.set_edge(a, b, false);
      ++s.mutants;
      if (!check_vgraph_axioms(m, h).all_pass())
        ++s.caught;
      else
        s.escaped.push_back({a, b});
    }
  return s;
}

std::string to_dot(const QuotientGraph& g, const std::string& name) {
  std::ostringstream o;
  auto esc = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  o << "graph \"" << esc(name) << "\" {\n";
  for (int a = 1; a < g.order; ++a) o << "  v" << a << " [label=\"" << esc(g.names[a]) << "\"];\n";
  for (int a = 1; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.adj[a][b]) o << "  v" << a << " -- v" << b << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace valgraph
