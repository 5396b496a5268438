#include <algorithm>
#include <deque>
#include <map>

#include "valgraph/graph.hpp"

namespace valgraph {

int GroupTable::order_of(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul[x][a]) ++k;
  return k;
}

void GroupTable::validate() const {
  auto bad = [](const std::string& s) { fail(ErrorCode::TableInconsistent, s); };
  if (n < 1 || static_cast<int>(mul.size()) != n || static_cast<int>(inv.size()) != n) bad("table shape");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) bad("row " + std::to_string(a) + " has wrong length");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      int c = mul[a][b];
      if (c < 0 || c >= n) bad("entry out of range");
      if (seen[c]) bad("row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
    if (mul[0][a] != a || mul[a][0] != a) bad("0 is not the identity at " + std::to_string(a));
    if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0) bad("bad inverse of " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          bad("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

GroupTable group_from_model(const Model& m) {
  GroupTable g;
  g.n = m.index();
  g.mul = m.table();
  g.inv.resize(g.n);
  for (int a = 0; a < g.n; ++a) {
    g.inv[a] = m.inv_label(a);
    g.names.push_back(m.label_name(a));
  }
  g.validate();
  return g;
}

GroupTable cyclic_group(int n) {
  GroupTable g;
  g.n = n;
  g.mul.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
    g.names.push_back(std::to_string(a));
  }
  return g;
}

GroupTable symmetric3() {
  // permutations of {0,1,2} as images
  const int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable g;
  g.n = 6;
  g.names = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.mul.assign(6, std::vector<int>(6));
  g.inv.resize(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      // (ab)(x) = a(b(x))
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perm[a][perm[b][x]];
      for (int r = 0; r < 6; ++r)
        if (perm[r][0] == c[0] && perm[r][1] == c[1] && perm[r][2] == c[2]) g.mul[a][b] = r;
    }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g.mul[a][b] == 0) g.inv[a] = b;
  return g;
}

GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  GroupTable g;
  g.n = A.n * B.n;
  g.mul.assign(g.n, std::vector<int>(g.n));
  g.inv.resize(g.n);
  for (int a = 0; a < g.n; ++a) {
    int a1 = a / B.n, a2 = a % B.n;
    for (int b = 0; b < g.n; ++b) g.mul[a][b] = A.mul[a1][b / B.n] * B.n + B.mul[a2][b % B.n];
    g.inv[a] = A.inv[a1] * B.n + B.inv[a2];
    g.names.push_back("(" + A.names[a1] + "," + B.names[a2] + ")");
  }
  return g;
}

std::vector<std::pair<int, int>> order_profile(const GroupTable& g) {
  std::map<int, int> c;
  for (int a = 0; a < g.n; ++a) ++c[g.order_of(a)];
  return {c.begin(), c.end()};
}

namespace {

// greedy generating set
std::vector<int> generators(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<char> in(g.n, 0);
  in[0] = 1;
  std::vector<int> span{0};
  // try elements of large order first
  std::vector<int> cand(g.n);
  for (int i = 0; i < g.n; ++i) cand[i] = i;
  std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) { return g.order_of(x) > g.order_of(y); });
  for (int c : cand) {
    if (in[c]) continue;
    gens.push_back(c);
    std::deque<int> q(span.begin(), span.end());
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int s : gens) {
        int y = g.mul[x][s];
        if (!in[y]) {
          in[y] = 1;
          span.push_back(y);
          q.push_back(y);
        }
      }
    }
    if (static_cast<int>(span.size()) == g.n) break;
  }
  return gens;
}

// extend generator images to a map; empty on inconsistency
std::vector<int> extend(const GroupTable& a, const GroupTable& b, const std::vector<int>& gens, const std::vector<int>& imgs) {
  std::vector<int> f(a.n, -1);
  f[0] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = a.mul[x][gens[i]];
      int fy = b.mul[f[x]][imgs[i]];
      if (f[y] == -1) {
        f[y] = fy;
        q.push_back(y);
      } else if (f[y] != fy) {
        return {};
      }
    }
  }
  std::vector<char> hit(b.n, 0);
  for (int x = 0; x < a.n; ++x) {
    if (f[x] < 0 || hit[f[x]]) return {};
    hit[f[x]] = 1;
  }
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (f[a.mul[x][y]] != b.mul[f[x]][f[y]]) return {};
  return f;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.n != b.n || order_profile(a) != order_profile(b)) return std::nullopt;
  std::vector<int> gens = generators(a);
  std::vector<std::vector<int>> choices;
  for (int s : gens) {
    std::vector<int> c;
    for (int y = 0; y < b.n; ++y)
      if (b.order_of(y) == a.order_of(s)) c.push_back(y);
    choices.push_back(c);
  }
  std::vector<int> imgs(gens.size());
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (found) return;
    if (i == gens.size()) {
      auto f = extend(a, b, gens, imgs);
      if (!f.empty()) found = f;
      return;
    }
    for (int y : choices[i]) {
      imgs[i] = y;
      self(self, i + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace valgraph
