#include "valgraph/level.hpp"

#include <algorithm>
#include <random>

namespace valgraph {

const char* level_mode_name(LevelMode m) { return m == LevelMode::L ? "L" : "SL"; }

namespace {

bool in_target(const Model& m, const Subgroup* M, const Element& z) {
  if (m.is_zero(z) || !m.in_n(z)) return false;
  return !M || M->contains(z);
}

std::vector<Element> members(const OrderedQuotient& oq, const Subgroup* M) {
  std::vector<Element> out;
  for (const auto& n : oq.window().elems)
    if (!M || M->contains(n)) out.push_back(n);
  return out;
}

std::vector<char> bits(const Model& m, const Element& z, const std::vector<Element>& w) {
  std::vector<char> b(w.size());
  for (size_t i = 0; i < w.size(); ++i) b[i] = sum_in_n(m, z, w[i]);
  return b;
}

bool sub(const std::vector<char>& a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::vector<char> meet(std::vector<char> a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

std::vector<char> join(std::vector<char> a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

}  // namespace

LevelCheck check_level(const OrderedQuotient& oq, const Gamma& alpha, LevelMode mode, const Subgroup* M) {
  const Model& m = oq.model();
  LevelCheck r;
  if (!oq.leq(oq.zero(), alpha)) fail(ErrorCode::Usage, "level candidate " + oq.str(alpha) + " is not >= 0");
  Gamma na = oq.neg(alpha);
  bool any = false, precision = false;
  Element one = m.one();
  for (const auto& n : members(oq, M)) {
    Gamma g = oq.phi(n);
    bool in_set = mode == LevelMode::L ? oq.lt(g, na) : oq.lt(alpha, g);
    if (!in_set) continue;
    any = true;
    try {
      std::vector<Element> images;
      if (mode == LevelMode::L) {
        images.push_back(m.add(n, one));
      } else {
        images.push_back(m.add(one, n));
        images.push_back(m.sub(one, n));
      }
      for (const auto& z : images) {
        ++r.checked;
        bool ok = in_target(m, M, z);
        if (ok) ok = mode == LevelMode::L ? oq.lt(oq.phi(z), na) : oq.leq(oq.phi(z), oq.zero());
        if (!ok && r.witness.empty()) r.witness = {m.str(n), m.str(z)};
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      precision = true;
    }
  }
  if (!any) {
    r.verdict = Verdict::NotApplicable;
    r.cert = oq.cert();
    return r;
  }
  r.verdict = r.witness.empty() ? Verdict::Pass : Verdict::Fail;
  r.cert = precision && r.verdict == Verdict::Pass ? Cert::Inconclusive : oq.cert();
  return r;
}

std::vector<Gamma> level_candidates(const OrderedQuotient& oq) {
  std::vector<Gamma> out;
  if (oq.kind() == OrderedQuotient::Kind::Finite) {
    for (int c = 0; c < oq.num_classes(); ++c)
      if (oq.leq(oq.zero(), {c})) out.push_back({c});
    std::stable_partition(out.begin(), out.end(), [&](const Gamma& g) { return g == oq.zero(); });
    return out;
  }
  int r = oq.rank();
  // beyond R-1 the refuting elements leave the window
  long R = oq.window().spec.radius - 1;
  if (R < 0) return out;
  Gamma a(static_cast<size_t>(r), 0);
  while (true) {
    out.push_back(a);
    int i = 0;
    while (i < r && a[i] == R) a[i++] = 0;
    if (i == r) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

LevelSearch find_level(const OrderedQuotient& oq, LevelMode mode, const Subgroup* M) {
  LevelSearch s;
  s.cert = oq.cert();
  for (const auto& a : level_candidates(oq)) {
    LevelCheck c = check_level(oq, a, mode, M);
    if (c.verdict != Verdict::NotApplicable) s.cert = weakest(s.cert, c.cert);
    if (!s.level && c.verdict == Verdict::Pass) s.level = a;
    s.candidates.emplace_back(a, std::move(c));
  }
  if (s.level)
    for (const auto& [b, c] : s.candidates)
      if (oq.leq(*s.level, b) && c.verdict == Verdict::Fail) s.monotone = false;
  return s;
}

LevelReport classify_map(const OrderedQuotient& oq, const Subgroup* M) {
  LevelReport r;
  r.subgroup = M ? M->name : "N";
  r.l_search = find_level(oq, LevelMode::L, M);
  r.sl_search = find_level(oq, LevelMode::SL, M);
  r.level = r.l_search.level;
  r.s_level = r.sl_search.level;
  r.leveled = r.level.has_value();
  r.strongly_leveled = r.s_level.has_value();
  auto t = is_totally_ordered(oq, M);
  r.total = t.total;
  r.incomparable = t.witness;
  r.valuation_like = r.leveled && r.total;
  r.strong_valuation_like = r.strongly_leveled && r.total;
  r.s_level_zero = r.s_level && *r.s_level == oq.zero();
  for (size_t i = 0; i < r.sl_search.candidates.size(); ++i)
    if (r.sl_search.candidates[i].second.verdict == Verdict::Pass &&
        r.l_search.candidates[i].second.verdict != Verdict::Pass)
      r.sl_implies_l = false;
  r.monotone = r.sl_search.monotone;
  r.cert = weakest(r.l_search.cert, r.sl_search.cert);
  return r;
}

bool TheoremReport::all_pass() const {
  for (const auto& c : checks)
    if (c.asserted && c.verdict == Verdict::Fail) return false;
  return true;
}

const TheoremCheck* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

TheoremReport verify_diameter_theorems(ModelPtr model, const QuotientGraph& g, const Element& x, const Element& y,
                                       const WindowSpec& w, int samples) {
  const Model& M = *model;
  TheoremReport r;
  int cx = M.coset_of(x), cy = M.coset_of(y);
  r.distance = (cx == 0 || cy == 0) ? 0 : bfs(g, cx)[cy];
  if (r.distance < 3) {
    r.checks.push_back({"hypothesis", Verdict::NotApplicable, Cert::Certified, 0,
                        "d(x*,y*) = " + dist_str(r.distance) + " < 3", false});
    return r;
  }
  r.hypothesis_met = true;
  NWindow W = make_window(M, w);
  Cert wc = W.exhaustive ? Cert::Certified : Cert::WindowCertified;
  const auto& E = W.elems;

  // levels on both sides
  std::optional<OrderedQuotient> oy, ox;
  std::optional<LevelReport> ly, lx;
  auto build = [&](std::optional<OrderedQuotient>& oq, std::optional<LevelReport>& lr, const Element& z) {
    try {
      oq.emplace(model, z, w);
      lr = classify_map(*oq);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotMet) throw;
    }
  };
  build(oy, ly, y);
  build(ox, lx, x);
  auto side_check = [&](const std::string& side, const std::optional<LevelReport>& lr, bool asserted) {
    TheoremCheck c{"strongly leveled (" + side + ")", Verdict::Fail, Cert::Inconclusive, 0, "", asserted};
    if (!lr) {
      c.detail = "Gamma not available for this side";
    } else {
      c.verdict = lr->strongly_leveled ? Verdict::Pass : Verdict::Fail;
      c.cert = lr->cert;
      c.checked = static_cast<long>(lr->sl_search.candidates.size());
      c.detail = lr->s_level ? "s-level " + gamma_str(*lr->s_level) : "no s-level on the window";
    }
    if (c.verdict == Verdict::Pass) r.passing_sides.push_back(side);
    return c;
  };
  r.checks.push_back(side_check("y", ly, r.distance == 3));
  r.checks.push_back(side_check("x", lx, false));
  if (r.distance >= 4) {
    TheoremCheck c{"strongly leveled (some side)", r.passing_sides.empty() ? Verdict::Fail : Verdict::Pass, wc, 2, ""};
    r.checks.push_back(c);
    TheoremCheck t{"total order on a passing side", Verdict::Fail, wc, 0, ""};
    for (const auto& s : r.passing_sides) {
      const auto& lr = s == "y" ? ly : lx;
      if (lr->total) t.verdict = Verdict::Pass, t.detail += s + " ";
    }
    r.checks.push_back(t);
  }
  if (r.distance >= 5) {
    TheoremCheck c{"s-level 0 on a passing side", Verdict::Fail, wc, 0, ""};
    for (const auto& s : r.passing_sides) {
      const auto& lr = s == "y" ? ly : lx;
      if (lr->s_level_zero) c.verdict = Verdict::Pass, c.detail += s + " ";
    }
    r.checks.push_back(c);
  }

  // N(x+y) = N(x) cap N(y)
  {
    TheoremCheck c{"N(x+y) = N(x) cap N(y)", Verdict::Pass, wc, static_cast<long>(E.size()), ""};
    Element s = M.add(x, y);
    if (!M.is_zero(s) && M.in_n(s)) {
      c.verdict = Verdict::Fail;
      c.detail = "x+y in N";
    } else if (bits(M, s, E) != meet(bits(M, x, E), bits(M, y, E))) {
      c.verdict = Verdict::Fail;
      c.detail = "sets differ on the window";
    }
    r.checks.push_back(c);
  }

  NWindow S = make_window(M, WindowSpec{1, 0});
  std::vector<Element> ks(S.elems.begin(), S.elems.begin() + std::min<long>(samples, static_cast<long>(S.elems.size())));
  if (std::find_if(ks.begin(), ks.end(), [&](const Element& k) { return M.equal(k, M.one()); }) == ks.end())
    ks.insert(ks.begin(), M.one());

  // N(ab) lemma, parts (2) and (3), with a in Nx, b in Ny and the reverse
  {
    TheoremCheck c2{"N(ab) lemma (2)", Verdict::Pass, wc, 0, ""};
    TheoremCheck c3{"N(ab) lemma (3)", Verdict::Pass, wc, 0, ""};
    for (int orient = 0; orient < 2; ++orient)
      for (const auto& k1 : ks)
        for (const auto& k2 : ks) {
          Element a = M.mul(k1, orient ? y : x), b = M.mul(k2, orient ? x : y);
          Element ab = M.mul(a, b), ba = M.mul(b, a);
          for (long eps : {1L, -1L}) {
            Element e = M.from_int(eps);
            if (sum_in_n(M, M.inv(b), e)) {
              ++c2.checked;
              auto lhs = join(bits(M, ab, E), bits(M, ba, E));
              auto rhs = meet(bits(M, a, E), bits(M, M.neg(a), E));
              if (!sub(lhs, rhs) && c2.verdict == Verdict::Pass) {
                c2.verdict = Verdict::Fail;
                c2.detail = "a = " + M.str(a) + ", b = " + M.str(b);
              }
            }
            if (sum_in_n(M, a, e)) {
              ++c3.checked;
              auto rhs = meet(bits(M, ab, E), bits(M, ba, E));
              if (!sub(bits(M, b, E), rhs) && c3.verdict == Verdict::Pass) {
                c3.verdict = Verdict::Fail;
                c3.detail = "a = " + M.str(a) + ", b = " + M.str(b);
              }
            }
          }
        }
    if (c2.checked == 0) c2.verdict = Verdict::NotApplicable;
    if (c3.checked == 0) c3.verdict = Verdict::NotApplicable;
    r.checks.push_back(c2);
    r.checks.push_back(c3);
  }

  // P_x against P_y
  {
    // smallest valuations first: these reach the n-range of parts (4)-(6)
    auto first = [&](std::vector<Element> v) {
      if (M.num_places() > 0) {
        auto key = [&](const Element& z) {
          long s = 0;
          for (long t : M.valuations(z)) s += t;
          return s;
        };
        std::stable_sort(v.begin(), v.end(), [&](const Element& u, const Element& t) { return key(u) < key(t); });
      }
      if (static_cast<int>(v.size()) > samples) v.resize(static_cast<size_t>(samples));
      return v;
    };
    auto Px = first(p_set(M, x, W).left), Py = first(p_set(M, y, W).left);
    Element xy = M.mul(M.inv(x), M.inv(y));
    auto Pxy = first(p_set(M, xy, W).left);
    auto ybits = bits(M, y, E);
    auto in_uy = [&](const Element& u) {
      if (oy) return oy->in_u(u);
      return bits(M, M.mul(u, y), E) == ybits;
    };
    TheoremCheck p[6];
    for (int i = 0; i < 6; ++i)
      p[i] = TheoremCheck{"Px vs Py (" + std::to_string(i + 1) + ")", Verdict::Pass, wc, 0, ""};
    auto flag = [&](int i, const std::string& what) {
      if (p[i].verdict == Verdict::Pass) {
        p[i].verdict = Verdict::Fail;
        p[i].detail = what;
      }
    };
    Element one = M.one();
    for (const auto& a : Px)
      for (const auto& b : Py) {
        std::string tag = "a = " + M.str(a) + ", b = " + M.str(b);
        Element a1 = M.add(a, one);
        ++p[0].checked;
        if (!(in_target(M, nullptr, a1) && in_uy(a1) && sum_in_n(M, b, a1))) flag(0, tag);
        Element ai = M.inv(a), bi = M.inv(b);
        ++p[1].checked;
        if (!sub(bits(M, ai, E), bits(M, b, E))) flag(1, tag);
        Element aibi = M.mul(ai, bi);
        auto lhs = bits(M, aibi, E);
        for (long eps : {1L, -1L}) {
          Element e = M.from_int(eps);
          ++p[2].checked;
          if (!sub(lhs, meet(bits(M, M.mul(e, ai), E), bits(M, M.mul(e, bi), E)))) flag(2, tag);
        }
        auto ab = meet(bits(M, a, E), bits(M, b, E));
        for (const auto& n : E) {
          if (!sum_in_n(M, aibi, M.inv(n))) continue;
          std::string nt = tag + ", n = " + M.str(n);
          ++p[3].checked;
          if (!(sum_in_n(M, M.mul(n, b), n) && !sum_in_n(M, b, n))) flag(3, nt);
          for (size_t i = 0; i < E.size(); ++i) {
            if (!ab[i]) continue;
            for (const auto& z : {M.add(E[i], n), M.sub(E[i], n)}) {
              ++p[4].checked;
              if (!(in_target(M, nullptr, z) && sum_in_n(M, a, z) && sum_in_n(M, b, z))) flag(4, nt);
            }
          }
          for (const auto& cc : Pxy)
            for (const auto& z : {M.add(one, n), M.sub(one, n)}) {
              ++p[5].checked;
              if (!sum_in_n(M, cc, z)) flag(5, nt + ", c = " + M.str(cc));
            }
        }
      }
    for (auto& c : p) {
      if (c.checked == 0) c.verdict = Verdict::NotApplicable;
      r.checks.push_back(c);
    }
  }
  return r;
}

std::vector<int> induced_perm(const Model& m, const std::function<Element(const Element&)>& f) {
  std::vector<int> p(static_cast<size_t>(m.index()));
  for (int l = 0; l < m.index(); ++l) p[l] = m.coset_of(f(m.reps()[l]));
  return p;
}

Subgroup rational_part(const Model& m) {
  if (m.kind() != ModelKind::Quaternion) fail(ErrorCode::Usage, "rational part is defined for the quaternion model");
  const Model* p = &m;
  return {"N cap Q", [p](const Element& x) {
            const auto& q = std::get<Quat>(x);
            for (int c = 1; c < 4; ++c)
              if (!q.x[c].is_zero()) return false;
            return sgn(q.x[0].b) == 0 && p->in_n(x);
          }};
}

EthReport check_eth(const Model* model, const QuotientGraph& g, const EthConfig& cfg) {
  EthReport r;
  for (const auto& s : cfg.sigma) {
    if (static_cast<int>(s.perm.size()) != g.order || s.perm[0] != 0)
      fail(ErrorCode::Usage, "sigma '" + s.name + "' must permute the labels and fix the identity coset");
    std::vector<char> hit(g.order, 0);
    for (int v : s.perm) {
      if (v < 0 || v >= g.order || hit[v]) fail(ErrorCode::Usage, "sigma '" + s.name + "' is not a permutation");
      hit[v] = 1;
    }
  }
  auto dist = all_pairs_bfs(g);
  r.distance = dist[cfg.x][cfg.y];
  if (r.distance < 3) fail(ErrorCode::HypothesisNotMet, "d(x*,y*) = " + dist_str(r.distance) + " < 3");

  bool has_map = std::any_of(cfg.sigma.begin(), cfg.sigma.end(), [](const EthSigma& s) { return bool(s.map); });
  if (model && cfg.M && has_map) {
    if (!cfg.M->contains(model->from_int(-1))) fail(ErrorCode::Usage, "-1 must lie in M");
    std::vector<Element> ks;
    for (const auto& k : model->n_window(WindowSpec{1, 1}))
      if (cfg.M->contains(k)) ks.push_back(k);
    std::mt19937_64 rng(cfg.seed);
    for (const auto& s : cfg.sigma) {
      if (!s.map) continue;
      for (int i = 0; i < cfg.affine_samples; ++i) {
        Element a = model->random_element(rng);
        Element sa = s.map(a);
        if (s.perm[model->coset_of(a)] != model->coset_of(sa))
          fail(ErrorCode::AffineRuleViolated, s.name + " disagrees with its label action at " + model->str(a));
        for (const auto& k : ks) {
          Element ak = model->add(a, k), sak = model->add(sa, k);
          if (model->is_zero(ak) || model->is_zero(sak)) continue;
          ++r.affine_checked;
          if (model->coset_of(s.map(ak)) != model->coset_of(sak))
            fail(ErrorCode::AffineRuleViolated, s.name + " at a = " + model->str(a) + ", k = " + model->str(k));
        }
      }
    }
    r.affine = Verdict::Pass;
  }

  r.holds = true;
  for (const auto& path : paths_of_length(g, cfg.x, cfg.y, 3)) {
    EthPath ep{path, std::nullopt};
    for (const auto& s : cfg.sigma) {
      int sx = s.perm[path[0]], sr = s.perm[path[1]];
      if (dist[sx][cfg.y] >= 3 && !is_path(g, {sx, sr, path[2], path[3]})) {
        ep.sigma = s.name;
        break;
      }
    }
    if (!ep.sigma) r.holds = false;
    r.paths.push_back(std::move(ep));
  }
  return r;
}

}  // namespace valgraph
