#include "valgraph/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>

namespace valgraph {

const std::vector<std::string>& analysis_names() {
  static const std::vector<std::string> names = {"graph",    "axioms", "order",     "classify",
                                                 "theorems", "eth",    "valuation", "all"};
  return names;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

namespace {

Json dist_json(int d) { return d == kInf ? Json("inf") : Json(d); }

Json gamma_json(const std::optional<Gamma>& g) {
  if (!g) return nullptr;
  return gamma_str(*g);
}

}  // namespace

Json graph_json(const QuotientGraph& g, const std::string& name) {
  Json j;
  j["name"] = name;
  j["rule"] = rule_name(g.rule);
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  int db = diameter_bfs(g), df = diameter_fw(g);
  j["diameter"] = dist_json(db);
  j["diameter_fw"] = dist_json(df);
  j["oracle_agree"] = db == df;
  Json ecc = Json::array();
  for (int e : eccentricities(g)) ecc.push_back(dist_json(e));
  j["eccentricities"] = ecc;
  return j;
}

Json axioms_json(const AxiomReport& r) {
  Json j = Json::array();
  for (const auto& a : r.results) {
    Json e;
    e["axiom"] = a.axiom;
    e["verdict"] = verdict_name(a.verdict);
    e["sampled"] = a.sampled;
    e["checked"] = a.checked;
    e["witness"] = a.witness;
    j.push_back(e);
  }
  return j;
}

Json quotient_json(const OrderedQuotient& oq, size_t max_reps) {
  const Model& m = oq.model();
  Json j;
  j["y"] = m.str(oq.y());
  j["kind"] = oq.kind() == OrderedQuotient::Kind::Finite ? "finite" : "local";
  j["rank"] = oq.rank();
  j["cert"] = cert_name(oq.cert());
  j["window"] = {{"radius", oq.window().spec.radius},
                 {"depth", oq.window().spec.depth},
                 {"size", oq.window().elems.size()},
                 {"exhaustive", oq.window().exhaustive}};
  const auto& ns = oq.nset();
  j["n_set"] = {{"size", ns.count()},
                {"closed_form", !ns.closed.empty()},
                {"mismatches", ns.mismatches},
                {"precision_failures", ns.precision_failures},
                {"cert", cert_name(ns.cert)}};
  Json phi = Json::array();
  for (size_t i = 0; i < oq.window().elems.size() && i < max_reps; ++i) {
    const auto& n = oq.window().elems[i];
    phi.push_back({{"n", m.str(n)}, {"phi", gamma_str(oq.phi(n))}});
  }
  j["phi"] = phi;
  auto vals = oq.window_values();
  Json vs = Json::array();
  for (const auto& v : vals) vs.push_back(oq.str(v));
  j["values"] = vs;
  if (oq.kind() == OrderedQuotient::Kind::Finite) {
    Json mat = Json::array();
    for (const auto& a : vals) {
      std::string row;
      for (const auto& b : vals) row += oq.leq(a, b) ? '1' : '0';
      mat.push_back(row);
    }
    j["order_matrix"] = mat;
  }
  return j;
}

Json level_json(const LevelReport& r, const OrderedQuotient& oq) {
  Json j;
  j["subgroup"] = r.subgroup;
  j["leveled"] = r.leveled;
  j["level"] = gamma_json(r.level);
  j["strongly_leveled"] = r.strongly_leveled;
  j["s_level"] = gamma_json(r.s_level);
  j["total"] = r.total;
  if (r.incomparable)
    j["incomparable"] = {r.incomparable->first, r.incomparable->second};
  else
    j["incomparable"] = nullptr;
  j["valuation_like"] = r.valuation_like;
  j["strong_valuation_like"] = r.strong_valuation_like;
  j["s_level_zero"] = r.s_level_zero;
  j["sl_implies_l"] = r.sl_implies_l;
  j["monotone"] = r.monotone;
  auto cands = [&](const LevelSearch& s) {
    Json a = Json::array();
    for (const auto& [alpha, c] : s.candidates) {
      Json e = {{"alpha", oq.str(alpha)}, {"verdict", verdict_name(c.verdict)}, {"checked", c.checked}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      a.push_back(e);
    }
    return a;
  };
  j["l_candidates"] = cands(r.l_search);
  j["sl_candidates"] = cands(r.sl_search);
  j["cert"] = cert_name(r.cert);
  return j;
}

Json theorem_json(const TheoremReport& r) {
  Json j;
  j["distance"] = dist_json(r.distance);
  j["hypothesis_met"] = r.hypothesis_met;
  j["passing_sides"] = r.passing_sides;
  Json cs = Json::array();
  for (const auto& c : r.checks)
    cs.push_back({{"name", c.name},
                  {"verdict", verdict_name(c.verdict)},
                  {"asserted", c.asserted},
                  {"cert", cert_name(c.cert)},
                  {"checked", c.checked},
                  {"detail", c.detail}});
  j["checks"] = cs;
  return j;
}

Json eth_json(const EthReport& r, const QuotientGraph& g) {
  Json j;
  j["distance"] = dist_json(r.distance);
  j["holds"] = r.holds;
  Json ps = Json::array();
  for (const auto& p : r.paths) {
    Json path = Json::array();
    for (int v : p.path) path.push_back(g.names.empty() ? std::to_string(v) : g.names[v]);
    ps.push_back({{"path", path}, {"sigma", p.sigma ? Json(*p.sigma) : Json(nullptr)}});
  }
  j["paths"] = ps;
  j["affine"] = verdict_name(r.affine);
  j["affine_checked"] = r.affine_checked;
  return j;
}

namespace {

struct Section {
  Json body;
  Status status = Status::Pass;
};

Status from_cert(bool ok, Cert c) {
  if (!ok) return Status::Fail;
  return c == Cert::Inconclusive ? Status::Inconclusive : Status::Pass;
}

Status combine(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Fail:
        return 3;
      case Status::Inconclusive:
        return 2;
      case Status::Pass:
        return 1;
      case Status::NotApplicable:
        return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

class Runner {
 public:
  Runner(const AnalysisRequest& req, ModelSpec spec, RunOutcome& out) : req_(req), spec_(std::move(spec)), out_(out) {
    if (spec_.kind != "kappa") model_ = build_model(spec_);
    window_ = default_window();
    if (spec_.has("window")) window_.radius = static_cast<int>(spec_.get_int("window", window_.radius));
    if (spec_.has("depth")) window_.depth = static_cast<int>(spec_.get_int("depth", window_.depth));
    if (req.window) window_.radius = *req.window;
    if (window_.radius < 1 || window_.radius > 64 || window_.depth < 1 || window_.depth > 16)
      fail(ErrorCode::Usage, "window radius must be in [1,64] and depth in [1,16]");
    delta_bound_ = req.delta_bound ? *req.delta_bound : spec_.get_int("delta-bound", 8);
    if (delta_bound_ < 0 || delta_bound_ > 64) fail(ErrorCode::Usage, "delta bound must be in [0,64]");
    std::string ys = req.y ? *req.y : spec_.get("y", "");
    std::string xs = req.x ? *req.x : spec_.get("x", "");
    if (model_) {
      y_ = ys.empty() ? default_y() : model_->parse(ys);
      if (!xs.empty()) x_ = model_->parse(xs);
      if (model_->is_zero(y_) || (x_ && model_->is_zero(*x_))) fail(ErrorCode::Usage, "x and y must be nonzero");
    } else {
      kappa_y_ = ys.empty() ? 10 : label_arg(ys);
      kappa_x_ = xs.empty() ? 5 : label_arg(xs);
    }
  }

  Json model_echo() const {
    Json j;
    j["kind"] = spec_.kind;
    if (spec_.has("name")) j["name"] = spec_.get("name", "");
    j["description"] = model_ ? model_->describe() : "kappa structure, " + spec_.get("factors", "2") + " factors";
    if (model_) j["index"] = model_->index();
    Json vals;
    for (const auto& [k, v] : spec_.values) vals[k] = v;
    j["spec"] = vals;
    return j;
  }

  Json parameters() const {
    Json j;
    j["window"] = {{"radius", window_.radius}, {"depth", window_.depth}};
    j["delta_bound"] = delta_bound_;
    if (model_) {
      j["y"] = model_->str(y_);
      j["x"] = x_ ? Json(model_->str(*x_)) : Json(nullptr);
    } else {
      j["y"] = "label:" + std::to_string(kappa_y_);
      j["x"] = "label:" + std::to_string(kappa_x_);
    }
    return j;
  }

  Section run(const std::string& name) {
    if (name == "graph") return graph();
    if (name == "axioms") return axioms();
    if (name == "order") return order();
    if (name == "classify") return classify();
    if (name == "theorems") return theorems();
    if (name == "eth") return eth();
    if (name == "valuation") return valuation();
    fail(ErrorCode::Usage, "unknown analysis '" + name + "'");
  }

 private:
  WindowSpec default_window() const {
    if (spec_.kind == "laurent-local") return {4, 2};
    if (spec_.kind == "function-field") return {2, 1};
    if (spec_.kind == "quaternion") return {2, 1};
    if (spec_.kind == "rational-congruence") return {2, 1};
    return {1, 1};
  }

  int label_arg(const std::string& s) const {
    int n = 1 << (2 * static_cast<int>(spec_.get_int("factors", 2)));
    std::string t = s.rfind("label:", 0) == 0 ? s.substr(6) : s;
    int v = -1;
    try {
      size_t pos = 0;
      v = std::stoi(t, &pos);
      if (pos != t.size()) v = -1;
    } catch (...) {
    }
    if (v <= 0 || v >= n) fail(ErrorCode::Usage, "kappa vertex must be a label in [1," + std::to_string(n - 1) + "]");
    return v;
  }

  Element default_y() const {
    const Model& m = *model_;
    switch (m.kind()) {
      case ModelKind::LaurentLocal:
        return static_cast<const LaurentModel&>(m).t_pow(1);
      case ModelKind::FunctionField:
        return static_cast<const FunctionFieldModel&>(m).uniformizer();
      case ModelKind::Quaternion:
        return static_cast<const QuaternionModel&>(m).pi();
      default:
        break;
    }
    // first coset with N(y) nonempty
    for (int l = 1; l < m.index(); ++l) {
      const Element& r = m.reps()[static_cast<size_t>(l)];
      if (m.enumerable()) {
        for (const auto& n : m.n_window({}))
          if (sum_in_n(m, r, n)) return r;
      } else {
        return r;
      }
    }
    return m.reps().size() > 1 ? m.reps()[1] : m.one();
  }

  Element default_x(const QuotientGraph& g) const {
    const Model& m = *model_;
    if (m.kind() == ModelKind::Quaternion) return static_cast<const QuaternionModel&>(m).a();
    auto d = bfs(g, m.coset_of(y_));
    int best = 1;
    for (int v = 1; v < g.order; ++v)
      if (d[v] != kInf && (d[best] == kInf || d[v] > d[best])) best = v;
    return m.reps()[static_cast<size_t>(best)];
  }

  // graphs are built once per run
  const std::vector<std::pair<std::string, QuotientGraph>>& graphs() {
    if (!graphs_.empty()) return graphs_;
    if (!model_) {
      KappaPresentation p;
      p.factors = static_cast<int>(spec_.get_int("factors", 2));
      if (p.factors < 1 || p.factors > 4) fail(ErrorCode::SpecInvalid, "kappa factors must be in [1,4]");
      graphs_.emplace_back("kappa", build_kappa_graph(p));
      return graphs_;
    }
    const Model& m = *model_;
    if (m.enumerable()) {
      graphs_.emplace_back("milnor", build_milnor_graph(m, false));
      graphs_.emplace_back("milnor-closure", build_milnor_graph(m, true));
    }
    graphs_.emplace_back("commuting", build_commuting_graph(group_from_model(m)));
    return graphs_;
  }

  // graph used by the distance theorems
  const QuotientGraph& primary_graph() {
    const auto& gs = graphs();
    if (model_ && model_->enumerable()) return gs.front().second;
    for (const auto& [n, g] : gs)
      if (n == "commuting" || n == "kappa") return g;
    return gs.front().second;
  }

  Section graph() {
    Section s;
    Json list = Json::array();
    for (const auto& [name, g] : graphs()) {
      Json j = graph_json(g, name);
      if (!j["oracle_agree"].get<bool>()) s.status = Status::Fail;
      out_.dot[name + ".dot"] = to_dot(g, name);
      list.push_back(j);
    }
    s.body["graphs"] = list;
    const auto& pg = graphs().front().second;
    if (model_ && model_->kind() == ModelKind::Quaternion) {
      const QuotientGraph& cg = graphs().back().second;
      const auto& qm = static_cast<const QuaternionModel&>(*model_);
      auto target = direct_product(symmetric3(), symmetric3());
      bool iso = find_isomorphism(*cg.group, target).has_value();
      Json prof = Json::array();
      for (auto [o, c] : order_profile(*cg.group)) prof.push_back({o, c});
      s.body["group"] = {{"order", cg.group->n}, {"order_profile", prof}, {"isomorphic_to_s3xs3", iso}};
      int a = qm.coset_of(qm.a()), p = qm.coset_of(qm.pi());
      s.body["d(a*,pi*)"] = dist_json(bfs(cg, a)[p]);
      if (!iso) s.status = Status::Fail;
    }
    if (spec_.has("graph.expect-diameter")) {
      long want = spec_.get_int("graph.expect-diameter", 0);
      const QuotientGraph& g = (model_ && model_->kind() == ModelKind::Quaternion) ? graphs().back().second : pg;
      int got = diameter_bfs(g);
      s.body["expect_diameter"] = {{"expected", want}, {"actual", dist_json(got)}};
      if (got != want) s.status = Status::Fail;
    }
    s.body["cert"] = "certified";
    return s;
  }

  // axioms each graph family is expected to satisfy
  static std::set<std::string> asserted_axioms(EdgeRule r) {
    switch (r) {
      case EdgeRule::SteinbergBrute:
        return {"V1'"};
      case EdgeRule::SteinbergClosure:
      case EdgeRule::CentralizerClosure:
        return {"V1", "V1'", "V2", "V3"};
      default:
        return {"V2", "V3"};
    }
  }

  Section axioms() {
    Section s;
    Json list = Json::array();
    for (const auto& [name, g] : graphs()) {
      const Model* mp = model_ ? model_.get() : nullptr;
      AxiomReport r = check_vgraph_axioms(mp, g);
      auto want = asserted_axioms(g.rule);
      bool ok = true, sampled = false;
      for (const auto& a : r.results) {
        sampled = sampled || a.sampled;
        if (want.count(a.axiom) && a.verdict == Verdict::Fail) ok = false;
      }
      Json j;
      j["graph"] = name;
      j["asserted"] = std::vector<std::string>(want.begin(), want.end());
      j["results"] = axioms_json(r);
      if (g.num_edges() <= 600) {
        auto mut = edge_removal_mutations(mp, g);
        Json esc = Json::array();
        for (auto [a, b] : mut.escaped) esc.push_back({a, b});
        j["mutations"] = {{"mutants", mut.mutants}, {"caught", mut.caught}, {"escaped", esc}};
      }
      j["holds"] = ok;
      j["cert"] = sampled ? "window-certified" : "certified";
      if (!ok) s.status = Status::Fail;
      list.push_back(j);
    }
    s.body["graphs"] = list;
    return s;
  }

  std::optional<OrderedQuotient> quotient(Section& s) {
    if (!model_) {
      s.status = Status::NotApplicable;
      s.body["reason"] = "no ring model";
      return std::nullopt;
    }
    try {
      return OrderedQuotient(model_, y_, window_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::HypothesisNotMet) {
        s.status = Status::NotApplicable;
        s.body["reason"] = e.what();
        return std::nullopt;
      }
      throw;
    }
  }

  Section order() {
    Section s;
    auto oq = quotient(s);
    if (!oq) return s;
    const Model& m = *model_;
    s.body["quotient"] = quotient_json(*oq);
    bool ok = oq->nset().mismatches == 0;
    Cert cert = oq->nset().precision_failures ? Cert::Inconclusive : oq->cert();
    // seven conditions
    std::vector<Element> sample;
    for (const auto& n : oq->window().elems) {
      if (sample.size() >= (m.enumerable() ? 64u : 6u)) break;
      sample.push_back(n);
    }
    const NWindow& ys = oq->window();
    long triples = 0, agree = 0;
    for (const auto& a : sample)
      for (const auto& b : sample) {
        ++triples;
        if (seven_conditions(*oq, a, b, ys).agree) ++agree;
      }
    s.body["conditions"] = {{"pairs", triples}, {"agree", agree}};
    ok = ok && agree == triples;
    if (oq->kind() == OrderedQuotient::Kind::Local) {
      long um = oq->u_mismatches(make_window(m, WindowSpec{std::max(1, window_.radius - 1), 1}));
      long dis = 0, decisive = 0;
      for (const auto& a : sample)
        for (const auto& b : sample) {
          auto r = rel_p(m, y_, a, b, oq->window(), RelMethod::Both);
          if (r.disagree) ++dis;
          if (r.cert != Cert::Inconclusive) ++decisive;
        }
      s.body["u_mismatches"] = um;
      s.body["rel_p"] = {{"pairs", sample.size() * sample.size()}, {"brute_decisive", decisive}, {"disagreements", dis}};
      ok = ok && um == 0 && dis == 0;
    }
    std::vector<Element> idy{y_}, xs;
    if (m.enumerable()) {
      idy.clear();
      for (const auto& u : m.all_units())
        if (!m.in_n(u)) idy.push_back(u);
      xs = m.all_units();
    } else {
      for (int l = 1; l < m.index() && xs.size() < 3; ++l) xs.push_back(m.reps()[static_cast<size_t>(l)]);
    }
    IdentityReport ir = identity_suite(m, idy, m.enumerable() ? oq->window() : make_window(m, {2, 1}), xs);
    Json ids = Json::array();
    for (const auto& c : ir.checks) {
      Json e = {{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"checked", c.checked}};
      if (c.skipped) e["skipped"] = c.skipped;
      if (!c.witness.empty()) e["witness"] = c.witness;
      if (!c.note.empty()) e["note"] = c.note;
      ids.push_back(e);
    }
    s.body["identities"] = ids;
    if (ir.n_minus_n) s.body["d_equals_n_minus_n"] = *ir.n_minus_n;
    ok = ok && ir.all_pass();
    cert = weakest(cert, ir.cert);
    auto tot = is_totally_ordered(*oq);
    s.body["total"] = tot.total;
    if (tot.witness) s.body["incomparable"] = {tot.witness->first, tot.witness->second};
    s.body["cert"] = cert_name(cert);
    s.status = from_cert(ok, cert);
    return s;
  }

  std::optional<Subgroup> subgroup(const std::string& name) const {
    if (name == "full") return std::nullopt;
    if (name == "diagonal") {
      if (!model_->has_swap()) fail(ErrorCode::SpecInvalid, "subgroup 'diagonal' needs a place swap");
      return swap_fixed(*model_);
    }
    if (name == "rational") {
      if (model_->kind() != ModelKind::Quaternion) fail(ErrorCode::SpecInvalid, "subgroup 'rational' needs the quaternion model");
      return rational_part(*model_);
    }
    fail(ErrorCode::SpecInvalid, "unknown classify.subgroup '" + name + "'");
  }

  Section classify() {
    Section s;
    auto oq = quotient(s);
    if (!oq) return s;
    auto M = subgroup(spec_.get("classify.subgroup", "full"));
    LevelReport r = classify_map(*oq, M ? &*M : nullptr);
    s.body = level_json(r, *oq);
    bool ok = r.sl_implies_l;
    if (spec_.has("classify.expect")) {
      std::string want = spec_.get("classify.expect", "");
      bool got;
      if (want == "valuation-like")
        got = r.valuation_like;
      else if (want == "not-valuation-like")
        got = !r.valuation_like;
      else if (want == "strongly-valuation-like")
        got = r.strong_valuation_like;
      else if (want == "not-strongly-valuation-like")
        got = !r.strong_valuation_like;
      else
        fail(ErrorCode::SpecInvalid, "unknown classify.expect '" + want + "'");
      s.body["expect"] = {{"claim", want}, {"met", got}};
      ok = ok && got;
    }
    s.status = from_cert(ok, r.cert);
    return s;
  }

  Section theorems() {
    Section s;
    if (!model_) {
      s.status = Status::NotApplicable;
      s.body["reason"] = "no ring model";
      return s;
    }
    const QuotientGraph& g = primary_graph();
    Element x = x_ ? *x_ : default_x(g);
    s.body["x"] = model_->str(x);
    s.body["y"] = model_->str(y_);
    TheoremReport r;
    try {
      r = verify_diameter_theorems(model_, g, x, y_, window_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotMet) throw;
      s.body["reason"] = e.what();
      r.hypothesis_met = false;
    }
    Json tj = theorem_json(r);
    for (auto& [k, v] : tj.items()) s.body[k] = v;
    std::string want = spec_.get("theorems.expect", "");
    if (!r.hypothesis_met) {
      s.status = want == "hypothesis-not-met" ? Status::Pass : Status::NotApplicable;
      return s;
    }
    if (!want.empty() && want != "pass") fail(ErrorCode::SpecInvalid, "unknown theorems.expect '" + want + "'");
    Cert cert = Cert::Certified;
    for (const auto& c : r.checks)
      if (c.asserted) cert = weakest(cert, c.cert);
    s.body["cert"] = cert_name(cert);
    s.status = from_cert(r.all_pass(), cert);
    return s;
  }

  Section eth() {
    Section s;
    EthConfig cfg;
    const QuotientGraph* g = nullptr;
    int n = 0;
    if (!model_) {
      g = &graphs().front().second;
      n = g->order;
      int f = static_cast<int>(spec_.get_int("factors", 2));
      std::vector<int> id(n), sw(n);
      for (int i = 0; i < n; ++i) {
        id[i] = i;
        sw[i] = kappa_swap(i, f);
      }
      cfg.sigma = {{"id", id, {}}, {"swap", sw, {}}};
      cfg.x = kappa_x_;
      cfg.y = kappa_y_;
    } else if (model_->kind() == ModelKind::Quaternion) {
      g = &graphs().back().second;
      n = g->order;
      auto Q = model_;
      std::function<Element(const Element&)> gal = [Q](const Element& e) { return Q->swap(e); };
      std::function<Element(const Element&)> ident = [](const Element& e) { return e; };
      cfg.sigma = {{"id", induced_perm(*Q, ident), ident}, {"galois", induced_perm(*Q, gal), gal}};
      cfg.M = rational_part(*Q);
      cfg.x = Q->coset_of(x_ ? *x_ : static_cast<const QuaternionModel&>(*Q).a());
      cfg.y = Q->coset_of(y_);
    } else {
      s.status = Status::NotApplicable;
      s.body["reason"] = "no permutation set for this model";
      return s;
    }
    s.body["sigma"] = {cfg.sigma.front().name, cfg.sigma.back().name};
    if (cfg.M) s.body["M"] = cfg.M->name;
    EthReport r;
    try {
      r = check_eth(model_ ? model_.get() : nullptr, *g, cfg);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::HypothesisNotMet) {
        s.status = Status::NotApplicable;
        s.body["reason"] = e.what();
        return s;
      }
      if (e.code() == ErrorCode::AffineRuleViolated) {
        s.status = Status::Fail;
        s.body["error"] = e.what();
        return s;
      }
      throw;
    }
    Json ej = eth_json(r, *g);
    for (auto& [k, v] : ej.items()) s.body[k] = v;
    std::string want = spec_.get("eth.expect", "holds");
    if (want != "holds" && want != "fails") fail(ErrorCode::SpecInvalid, "unknown eth.expect '" + want + "'");
    bool ok = (want == "holds") == r.holds && r.affine != Verdict::Fail;
    s.body["expect"] = want;
    s.body["cert"] = "certified";
    s.status = ok ? Status::Pass : Status::Fail;
    return s;
  }

  static Json ring_json(const RingWindow& r, const OrderedQuotient& oq) {
    Json j;
    j["kind"] = r.kind == RingKind::R ? "R" : "A";
    j["alpha"] = oq.str(r.alpha);
    j["length"] = r.length;
    j["base_size"] = r.base_size;
    j["members"] = r.members.size();
    if (r.kind == RingKind::A) {
      j["minus_one"] = r.minus_one;
      if (r.minus_one) j["minus_one_expr"] = r.minus_one_expr;
    } else {
      j["gamma"] = gamma_json(r.gamma);
    }
    j["cert"] = cert_name(r.cert);
    return j;
  }

  Section valuation() {
    Section s;
    if (!model_) {
      s.status = Status::NotApplicable;
      s.body["reason"] = "no ring model";
      return s;
    }
    const Model& m = *model_;
    bool ok = true;
    Cert cert = Cert::Certified;
    Json claims = Json::array();
    auto claim = [&](const std::string& name, bool holds, Cert c, Json detail) {
      claims.push_back({{"claim", name}, {"holds", holds}, {"cert", cert_name(c)}, {"detail", std::move(detail)}});
      ok = ok && holds;
      cert = weakest(cert, c);
    };
    if (m.num_places() > 0) {
      ValuationHandle v = all_places(m);
      auto ax = valuation_axioms(m, v);
      claim("valuation axioms", ax.ok, Cert::WindowCertified, {{"checked", ax.checked}, {"witness", ax.witness}});
      auto fd = find_delta(m, v, delta_bound_);
      claim("congruence subgroup inside N", fd.found, fd.cert,
            {{"delta", fd.found ? Json(gamma_str(fd.delta)) : Json(nullptr)}, {"minimal", fd.minimal}, {"bound", fd.bound}});
    }
    if (m.kind() == ModelKind::FunctionField) {
      auto rs = refute_single_place(static_cast<const FunctionFieldModel&>(m), delta_bound_);
      Json w = Json::array();
      for (const auto& x : rs.witnesses) w.push_back({{"place", x.place}, {"delta", x.delta}, {"x", x.x}});
      claim("no single place controls N", rs.found, rs.cert, {{"bound", rs.bound}, {"witnesses", w}});
    }
    if (m.kind() == ModelKind::RationalCongruence) {
      const auto& R = static_cast<const RationalModel&>(m);
      auto ep = find_escape_prime(R, {{2, 3}, {3, 2}, {7, 1}});
      claim("escape prime", ep.found && ep.h == 1 && !ep.in_n && ep.in_w, Cert::Certified,
            {{"modulus", ep.modulus}, {"k", ep.k}, {"p", ep.p}, {"h", ep.h}, {"in_n", ep.in_n}, {"in_w", ep.in_w}});
      Json tames = Json::array();
      for (long a = 2; a <= 10; ++a) {
        if (a % static_cast<long>(R.l()) == 0) continue;
        auto t = tame_symbol_certificate(R, a);
        tames.push_back({{"a", a}, {"certificate", t.certificate}, {"value", t.value}, {"exponent", t.exponent}});
      }
      s.body["tame_symbols"] = tames;
    }
    if (m.kind() == ModelKind::Quaternion) {
      const auto& Q = static_cast<const QuaternionModel&>(m);
      for (bool inv : {false, true}) {
        auto b = basis_in_n_set(Q, y_, inv);
        claim(inv ? "basis in N(y)^-1" : "basis in N(y)", b.rank == 8 && b.all_members, Cert::Certified,
              {{"rank", b.rank}, {"all_members", b.all_members}, {"c", Q.str(b.c)}, {"family", b.family}});
      }
    }
    if (m.kind() == ModelKind::Quaternion || m.enumerable()) {
      std::vector<Element> xs{y_};
      if (x_) xs.push_back(*x_);
      try {
        auto t = turnwald_search(m, xs);
        claim("c with 1 + c x in N", t.found, Cert::Certified, {{"c", m.str(t.c)}, {"tried", t.tried}, {"route", t.route}});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchExhausted) throw;
        claim("c with 1 + c x in N", false, Cert::Certified, {{"error", e.what()}});
      }
    }
    Section tmp;
    auto oq = quotient(tmp);
    if (oq) {
      if (oq->kind() == OrderedQuotient::Kind::Local) {
        auto sl = find_s_level(*oq);
        if (sl.level) {
          auto aw = generated_ring_window(*oq, RingKind::A, *sl.level);
          claim("-1 not in A", !aw.minus_one && aw.base_size > 0, aw.cert, ring_json(aw, *oq));
        }
        auto rw = generated_ring_window(*oq, RingKind::R, oq->zero());
        claim("R cap N bounded below", rw.gamma.has_value(), rw.cert, ring_json(rw, *oq));
        std::mt19937_64 rng(11);
        long good = 0, total = 0;
        for (int i = 0; i < 40; ++i) {
          ++total;
          try {
            if (decompose_ab_inverse(*oq, m.random_element(rng)).verified) ++good;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::DifferenceSearchExhausted && e.code() != ErrorCode::PrecisionExhausted) throw;
          }
        }
        claim("x = a b^-1 decompositions", good == total, Cert::WindowCertified, {{"sampled", total}, {"verified", good}});
      } else {
        long good = 0, total = 0;
        for (const auto& u : m.all_units()) {
          ++total;
          if (decompose_ab_inverse(*oq, u).verified) ++good;
        }
        claim("x = a b^-1 decompositions", good == total, Cert::Certified, {{"elements", total}, {"verified", good}});
      }
    } else if (tmp.body.contains("reason")) {
      s.body["quotient"] = tmp.body["reason"];
    }
    s.body["claims"] = claims;
    s.body["cert"] = cert_name(cert);
    s.status = claims.empty() ? Status::NotApplicable : from_cert(ok, cert);
    return s;
  }

  const AnalysisRequest& req_;
  ModelSpec spec_;
  RunOutcome& out_;
  ModelPtr model_;
  WindowSpec window_;
  long delta_bound_ = 8;
  Element y_;
  std::optional<Element> x_;
  int kappa_x_ = 5, kappa_y_ = 10;
  std::vector<std::pair<std::string, QuotientGraph>> graphs_;
};

bool is_usage(ErrorCode c) { return c == ErrorCode::SpecInvalid || c == ErrorCode::Usage || c == ErrorCode::YInN; }

Json error_json(const Error& e) { return {{"code", error_name(e.code())}, {"message", e.what()}}; }

}  // namespace

RunOutcome run_analysis(const AnalysisRequest& req) {
  RunOutcome out;
  out.report["schema"] = kReportSchema;
  out.report["analysis"] = req.analysis;
  const auto& names = analysis_names();
  if (std::find(names.begin(), names.end(), req.analysis) == names.end()) {
    out.report["error"] = {{"code", "Usage"}, {"message", "unknown analysis '" + req.analysis + "'"}};
    out.diagnostics.push_back("unknown analysis '" + req.analysis + "'");
    out.exit_code = 3;
    return out;
  }
  std::optional<Runner> runner;
  try {
    ModelSpec spec = load_spec_file(req.spec_path);
    runner.emplace(req, spec, out);
    out.report["model"] = runner->model_echo();
    out.report["parameters"] = runner->parameters();
  } catch (const Error& e) {
    out.report["error"] = error_json(e);
    out.diagnostics.push_back(e.what());
    out.exit_code = 3;
    return out;
  }
  std::vector<std::string> todo;
  if (req.analysis == "all")
    todo.assign(names.begin(), names.end() - 1);
  else
    todo.push_back(req.analysis);
  Json results, summary, timing;
  Status overall = Status::NotApplicable;
  for (const auto& a : todo) {
    auto t0 = std::chrono::steady_clock::now();
    Section s;
    try {
      s = runner->run(a);
    } catch (const Error& e) {
      if (is_usage(e.code())) {
        out.report.erase("results");
        out.report["error"] = error_json(e);
        out.diagnostics.push_back(e.what());
        out.exit_code = 3;
        out.dot.clear();
        return out;
      }
      s.body = Json::object();
      s.body["error"] = error_json(e);
      bool soft = e.code() == ErrorCode::PrecisionExhausted || e.code() == ErrorCode::WindowInconclusive;
      s.status = soft ? Status::Inconclusive : Status::Fail;
      out.diagnostics.push_back(a + ": " + e.what());
    }
    s.body["status"] = status_name(s.status);
    results[a] = s.body;
    summary[a] = status_name(s.status);
    timing[a] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    overall = combine(overall, s.status);
  }
  out.report["results"] = results;
  out.report["summary"] = summary;
  if (req.timing) out.report["timing_seconds"] = timing;
  switch (overall) {
    case Status::Pass:
      out.exit_code = 0;
      break;
    case Status::Fail:
      out.exit_code = 1;
      break;
    default:
      out.exit_code = 2;
  }
  out.report["exit_code"] = out.exit_code;
  return out;
}

RunOutcome run_and_write(const AnalysisRequest& req) {
  RunOutcome out = run_analysis(req);
  if (req.out_dir.empty()) return out;
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(req.out_dir, ec);
  if (ec) {
    out.diagnostics.push_back("cannot create output directory '" + req.out_dir + "': " + ec.message());
    out.exit_code = 3;
    return out;
  }
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(fs::path(req.out_dir) / name, std::ios::binary);
    f << text;
    if (!f) {
      out.diagnostics.push_back("cannot write " + name);
      out.exit_code = 3;
    }
  };
  write("report.json", out.report.dump(2) + "\n");
  for (const auto& [name, text] : out.dot) write(name, text);
  return out;
}

}  // namespace valgraph
