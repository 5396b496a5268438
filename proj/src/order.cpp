#include "valgraph/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace valgraph {

const char* cert_name(Cert c) {
  switch (c) {
    case Cert::Certified:
      return "certified";
    case Cert::WindowCertified:
      return "window-certified";
    case Cert::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Cert weakest(Cert a, Cert b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

std::string gamma_str(const Gamma& g) {
  if (g.size() == 1) return std::to_string(g[0]);
  std::string s = "(";
  for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

bool graded_lex_less(const Gamma& a, const Gamma& b) {
  long sa = std::accumulate(a.begin(), a.end(), 0L), sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  return a < b;
}

bool sum_in_n(const Model& m, const Element& a, const Element& b) {
  Element s = m.add(a, b);
  return !m.is_zero(s) && m.in_n(s);
}

bool has_closed_form(const Model& m, const Element& y) {
  if (m.num_places() == 0) return false;
  for (int i = 0; i < m.num_places(); ++i)
    if (m.in_n_place(y, i)) return false;
  return true;
}

NWindow make_window(const Model& m, const WindowSpec& w) {
  NWindow r;
  r.spec = w;
  r.elems = m.n_window(w);
  r.exhaustive = m.enumerable();
  return r;
}

size_t NSetView::count() const { return static_cast<size_t>(std::count(member.begin(), member.end(), 1)); }

namespace {

bool below(const Model& m, const Element& n, const Element& y) {
  for (int i = 0; i < m.num_places(); ++i)
    if (m.valuation(n, i) >= m.valuation(y, i)) return false;
  return true;
}

bool vec_leq(const std::vector<long>& a, const std::vector<long>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// every witness needed to refute N(z) inclusions lies in the window box
bool decisive(const Model& m, const Element& z, const NWindow& w) {
  long e = m.place_e(), R = w.spec.radius;
  for (int i = 0; i < m.num_places(); ++i) {
    long v = m.valuation(z, i);
    long K = e * floor_div(v - 1, e);
    if (!(-R * e < v) || K > R * e) return false;
  }
  return true;
}

std::vector<char> nset_bits(const Model& m, const Element& z, const std::vector<Element>& elems) {
  std::vector<char> b(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) b[i] = sum_in_n(m, z, elems[i]);
  return b;
}

bool subset(const std::vector<char>& a, const std::vector<char>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

NSetView n_set(const Model& m, const Element& y, const NWindow& w) {
  NSetView v;
  v.y = y;
  bool cf = has_closed_form(m, y);
  v.member.assign(w.elems.size(), 0);
  if (cf) v.closed.assign(w.elems.size(), 0);
  for (size_t i = 0; i < w.elems.size(); ++i) {
    try {
      v.member[i] = sum_in_n(m, y, w.elems[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      ++v.precision_failures;
    }
    if (cf) {
      v.closed[i] = below(m, w.elems[i], y);
      if (v.closed[i] != v.member[i]) ++v.mismatches;
    }
  }
  if (w.exhaustive)
    v.cert = Cert::Certified;
  else if (cf && v.mismatches == 0 && v.precision_failures == 0)
    v.cert = Cert::WindowCertified;
  return v;
}

bool in_p(const Model& m, const Element& y, const Element& b) {
  return m.in_n(m.mul(b, m.inv(y))) && sum_in_n(m, b, m.one());
}

PSet p_set(const Model& m, const Element& y, const NWindow& w) {
  NSetView v = n_set(m, y, w);
  PSet p;
  for (size_t i = 0; i < w.elems.size(); ++i) {
    if (!v.member[i]) continue;
    Element ni = m.inv(w.elems[i]);
    p.left.push_back(m.mul(ni, y));
    p.right.push_back(m.mul(y, ni));
  }
  bool ok = true;
  for (const auto& b : p.left) ok = ok && in_p(m, y, b);
  for (const auto& b : p.right) ok = ok && in_p(m, y, b);
  if (w.exhaustive) {
    std::set<std::string> L, R;
    for (const auto& b : p.left) L.insert(m.str(b));
    for (const auto& b : p.right) R.insert(m.str(b));
    ok = ok && L == R;
  }
  p.agree = ok;
  p.cert = v.cert;
  return p;
}

RelResult rel_p(const Model& model, const Element& y, const Element& m, const Element& n, const NWindow& w,
                RelMethod method) {
  Element my = model.mul(m, y), ny = model.mul(n, y);
  RelResult brute, closed;
  bool want_brute = method != RelMethod::Closed || w.exhaustive;
  bool want_closed = method != RelMethod::Brute && !w.exhaustive;
  if (want_brute) {
    brute.value = true;
    for (const auto& k : w.elems) {
      if (sum_in_n(model, my, k) && !sum_in_n(model, ny, k)) {
        brute.value = false;
        brute.witness = model.str(k);
        break;
      }
    }
    if (w.exhaustive)
      brute.cert = Cert::Certified;
    else if (has_closed_form(model, y) && decisive(model, my, w) && decisive(model, ny, w))
      brute.cert = Cert::WindowCertified;
  }
  if (want_closed) {
    if (!has_closed_form(model, y)) {
      if (method == RelMethod::Closed) fail(ErrorCode::HypothesisNotMet, "no closed form for y = " + model.str(y));
      return brute;
    }
    closed.value = vec_leq(model.valuations(m), model.valuations(n));
    closed.cert = Cert::Certified;
  }
  if (!want_closed) return brute;
  if (!want_brute) return closed;
  closed.witness = brute.witness;
  closed.disagree = brute.cert != Cert::Inconclusive && brute.value != closed.value;
  return closed;
}

OrderedQuotient::OrderedQuotient(ModelPtr model, const Element& y, const WindowSpec& w)
    : model_(std::move(model)), y_(y) {
  const Model& M = *model_;
  if (M.is_zero(y) || M.in_n(y)) fail(ErrorCode::YInN, "y = " + M.str(y) + " lies in N");
  window_ = make_window(M, w);
  nset_ = n_set(M, y, window_);
  if (nset_.empty()) fail(ErrorCode::HypothesisNotMet, "N(y) is empty for y = " + M.str(y));
  if (window_.exhaustive) {
    kind_ = Kind::Finite;
    const auto& E = window_.elems;
    std::vector<std::vector<char>> bits;
    std::vector<int> cls(E.size());
    for (size_t i = 0; i < E.size(); ++i) {
      auto b = nset_bits(M, M.mul(E[i], y), E);
      auto it = std::find(bits.begin(), bits.end(), b);
      if (it == bits.end()) {
        bits.push_back(b);
        class_rep_.push_back(E[i]);
        cls[i] = static_cast<int>(bits.size()) - 1;
      } else {
        cls[i] = static_cast<int>(it - bits.begin());
      }
      class_of_[M.str(E[i])] = cls[i];
    }
    int c = num_classes();
    leq_.assign(c, std::vector<char>(c, 0));
    add_.assign(c, std::vector<int>(c, 0));
    neg_.assign(c, 0);
    for (int a = 0; a < c; ++a) {
      for (int b = 0; b < c; ++b) {
        leq_[a][b] = subset(bits[a], bits[b]);
        add_[a][b] = class_of_.at(M.str(M.mul(class_rep_[a], class_rep_[b])));
      }
      neg_[a] = class_of_.at(M.str(M.inv(class_rep_[a])));
    }
    zero_ = class_of_.at(M.str(M.one()));
    // phi must be a homomorphism: the class of a product depends only on the classes
    for (size_t i = 0; i < E.size(); ++i)
      for (size_t j = 0; j < E.size(); ++j)
        if (class_of_.at(M.str(M.mul(E[i], E[j]))) != add_[cls[i]][cls[j]])
          fail(ErrorCode::Internal, "U is not a subgroup on this model");
  } else {
    if (!has_closed_form(M, y))
      fail(ErrorCode::HypothesisNotMet, "y = " + M.str(y) + " lies in N_i at some place; no description of Gamma");
    kind_ = Kind::Local;
  }
}

Gamma OrderedQuotient::phi(const Element& n) const {
  if (kind_ == Kind::Finite) {
    auto it = class_of_.find(model_->str(n));
    if (it == class_of_.end()) fail(ErrorCode::Usage, model_->str(n) + " is not in N");
    return {it->second};
  }
  long e = model_->place_e();
  Gamma g;
  for (int i = 0; i < model_->num_places(); ++i) {
    long v = model_->valuation(n, i);
    if (v % e != 0) fail(ErrorCode::Usage, model_->str(n) + " is not in N");
    g.push_back(v / e);
  }
  return g;
}

Gamma OrderedQuotient::zero() const {
  if (kind_ == Kind::Finite) return {zero_};
  return Gamma(static_cast<size_t>(rank()), 0);
}

bool OrderedQuotient::leq(const Gamma& a, const Gamma& b) const {
  if (kind_ == Kind::Finite) return leq_[a[0]][b[0]] != 0;
  return vec_leq(a, b);
}

Gamma OrderedQuotient::add(const Gamma& a, const Gamma& b) const {
  if (kind_ == Kind::Finite) return {add_[a[0]][b[0]]};
  Gamma r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Gamma OrderedQuotient::neg(const Gamma& a) const {
  if (kind_ == Kind::Finite) return {neg_[a[0]]};
  Gamma r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::vector<Gamma> OrderedQuotient::window_values() const {
  std::set<Gamma> s;
  if (kind_ == Kind::Finite) {
    for (int c = 0; c < num_classes(); ++c) s.insert({c});
  } else {
    for (const auto& n : window_.elems) s.insert(phi(n));
  }
  std::vector<Gamma> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), graded_lex_less);
  return v;
}

std::string OrderedQuotient::str(const Gamma& g) const {
  if (kind_ == Kind::Finite) return "c" + std::to_string(g[0]) + "[" + model_->str(class_rep_[g[0]]) + "]";
  return gamma_str(g);
}

long OrderedQuotient::u_mismatches(const NWindow& sample) const {
  const Model& M = *model_;
  auto base = nset_bits(M, y_, window_.elems);
  long bad = 0;
  for (const auto& n : sample.elems) {
    bool brute = nset_bits(M, M.mul(n, y_), window_.elems) == base;
    if (brute != in_u(n)) ++bad;
  }
  return bad;
}

namespace {

SevenConditionsResult seven_conditions_core(const Model& M, const Element& y, const Element& m, const Element& n, const NWindow& w,
                           const NWindow& ys, const NSetView& ny) {
  const auto& W = w.elems;
  SevenConditionsResult r;
  r.cond[0] = rel_p(M, y, m, n, w, RelMethod::Brute).value;
  bool c3 = true, c7 = true;
  for (const auto& k : ys.elems) {
    Element yp = M.mul(k, y);
    if (!subset(nset_bits(M, M.mul(m, yp), W), nset_bits(M, M.mul(n, yp), W))) c3 = false;
    if (sum_in_n(M, yp, n) && !sum_in_n(M, yp, m)) c7 = false;
  }
  r.cond[2] = c3;
  r.cond[6] = c7;
  bool c4 = true, c5 = true, c6 = true;
  Element mi = M.inv(m);
  for (size_t i = 0; i < W.size(); ++i) {
    if (!ny.member[i]) continue;
    Element b = M.mul(M.inv(W[i]), y);
    Element nb = M.mul(n, b);
    if (!(M.in_n(m) && sum_in_n(M, nb, m))) c4 = false;
    Element s = M.add(m, nb);
    if (M.is_zero(s) || !M.in_n(s)) c5 = false;
    if (!in_p(M, y, M.mul(mi, nb))) c6 = false;
  }
  r.cond[3] = c4;
  r.cond[4] = c5;
  r.cond[5] = c6;
  return r;
}

void settle(SevenConditionsResult& r) {
  r.agree = std::all_of(r.cond.begin(), r.cond.end(), [&](bool c) { return c == r.cond[0]; });
}

}  // namespace

SevenConditionsResult seven_conditions(const OrderedQuotient& oq, const Element& m, const Element& n, const NWindow& ys) {
  SevenConditionsResult r = seven_conditions_core(oq.model(), oq.y(), m, n, oq.window(), ys, oq.nset());
  r.cond[1] = oq.leq(oq.phi(m), oq.phi(n));
  settle(r);
  return r;
}

SevenConditionsResult seven_conditions_raw(const Model& model, const Element& y, const Element& m, const Element& n, const NWindow& w,
                          const NWindow& ys) {
  SevenConditionsResult r = seven_conditions_core(model, y, m, n, w, ys, n_set(model, y, w));
  r.cond[1] = r.cond[0];
  r.phi_evaluated = false;
  settle(r);
  return r;
}

Subgroup whole_n(const Model& m) {
  const Model* p = &m;
  return {"N", [p](const Element& x) { return p->in_n(x); }};
}

Subgroup swap_fixed(const Model& m) {
  if (!m.has_swap()) fail(ErrorCode::Usage, m.describe() + " has no place swap");
  const Model* p = &m;
  return {"N^sigma", [p](const Element& x) { return p->in_n(x) && p->equal(p->swap(x), x); }};
}

InIncResult check_in_inc(const Model& model, const Subgroup& M, const Element& r, const Element& s, const NWindow& w,
                         const NWindow& sub) {
  std::vector<Element> mw;
  for (const auto& x : w.elems)
    if (M.contains(x)) mw.push_back(x);
  auto ndot = [&](const Element& a) { return nset_bits(model, a, mw); };
  auto orbit = [&](const Element& z) {
    std::vector<std::vector<char>> out;
    for (const auto& k : sub.elems) out.push_back(ndot(model.mul(k, z)));
    return out;
  };
  auto pset = [&](const Element& z) {
    std::vector<std::vector<char>> out;
    for (const auto& k : sub.elems)
      if (sum_in_n(model, z, k)) out.push_back(ndot(model.mul(model.inv(k), z)));
    return out;
  };
  InIncResult res;
  auto A = orbit(r), B = orbit(s);
  res.in_rs = true;
  for (const auto& a : A)
    for (const auto& b : B) {
      ++res.pairs;
      if (!subset(a, b) && !subset(b, a)) res.in_rs = false;
    }
  auto Pr = pset(r), Ps = pset(s);
  auto covers = [](const std::vector<std::vector<char>>& from, const std::vector<std::vector<char>>& to) {
    for (const auto& b : from) {
      bool any = false;
      for (const auto& a : to) any = any || subset(a, b);
      if (!any) return false;
    }
    return true;
  };
  res.inc_sr = res.in_rs && covers(Ps, Pr);
  res.inc_rs = res.in_rs && covers(Pr, Ps);
  res.implication_ok = !res.in_rs || res.inc_sr || res.inc_rs;
  res.cert = w.exhaustive ? Cert::Certified : Cert::WindowCertified;
  return res;
}

TotalOrderResult is_totally_ordered(const OrderedQuotient& oq, const Subgroup* M) {
  std::set<Gamma> vals;
  std::map<Gamma, std::string> who;
  for (const auto& n : oq.window().elems) {
    if (M && !M->contains(n)) continue;
    Gamma g = oq.phi(n);
    if (vals.insert(g).second) who[g] = oq.model().str(n);
  }
  TotalOrderResult r;
  for (auto a = vals.begin(); a != vals.end(); ++a)
    for (auto b = std::next(a); b != vals.end(); ++b) {
      ++r.checked;
      if (!oq.comparable(*a, *b)) {
        r.total = false;
        if (!r.witness) r.witness = std::make_pair(who[*a], who[*b]);
      }
    }
  return r;
}

}  // namespace valgraph

namespace valgraph {

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.holds) return false;
  return true;
}

const IdentityCheck* IdentityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool n_minus_n_covers(const Model& m) {
  if (!m.enumerable()) fail(ErrorCode::NotEnumerable, m.describe());
  std::vector<Element> nset;
  for (const auto& u : m.all_units())
    if (m.in_n(u)) nset.push_back(u);
  std::set<std::string> diffs;
  for (const auto& a : nset)
    for (const auto& b : nset) {
      Element d = m.sub(a, b);
      if (!m.is_zero(d)) diffs.insert(m.str(d));
    }
  for (const auto& u : m.all_units())
    if (!diffs.count(m.str(u))) return false;
  return true;
}

IdentityReport identity_suite(const Model& m, const std::vector<Element>& ys, const NWindow& w,
                              const std::vector<Element>& xs, size_t max_n) {
  IdentityReport rep;
  auto named = [](const char* n) {
    IdentityCheck c;
    c.name = n;
    return c;
  };
  IdentityCheck left = named("N(ny) = nN(y)"), right = named("N(yn) = N(y)n"),
                conj = named("N(y^x) = x^-1 N(y) x"), nonempty = named("N(y) nonempty"),
                proper = named("N(y) != N"), inv = named("n in N(y^-1) => y + n^-1 in Ny, n^-1 notin N(y)"),
                pset = named("P = N(y)^-1 y = y N(y)^-1");
  if (m.enumerable()) {
    rep.n_minus_n = n_minus_n_covers(m);
    if (!*rep.n_minus_n) {
      nonempty.note = "D != N - N";
      nonempty.applicable = false;
    }
  }
  std::vector<Element> ns(w.elems.begin(), w.elems.begin() + std::min(max_n, w.elems.size()));
  auto guarded = [](IdentityCheck& c, auto&& f) {
    try {
      ++c.checked;
      f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      --c.checked;
      ++c.skipped;
    }
  };
  auto miss = [&](IdentityCheck& c, const std::string& wit) {
    if (c.holds) c.witness = wit;
    c.holds = false;
  };
  for (const auto& y : ys) {
    std::string ys_ = m.str(y);
    for (const auto& n : ns) {
      Element ni = m.inv(n), ny = m.mul(n, y), yn = m.mul(y, n);
      for (const auto& k : w.elems) {
        guarded(left, [&] {
          if (sum_in_n(m, ny, k) != sum_in_n(m, y, m.mul(ni, k)))
            miss(left, "y=" + ys_ + " n=" + m.str(n) + " k=" + m.str(k));
        });
        guarded(right, [&] {
          if (sum_in_n(m, yn, k) != sum_in_n(m, y, m.mul(k, ni)))
            miss(right, "y=" + ys_ + " n=" + m.str(n) + " k=" + m.str(k));
        });
      }
    }
    for (const auto& x : xs) {
      Element xi = m.inv(x), yx = m.mul(m.mul(xi, y), x);
      for (const auto& k : w.elems)
        guarded(conj, [&] {
          if (sum_in_n(m, yx, k) != sum_in_n(m, y, m.mul(m.mul(x, k), xi)))
            miss(conj, "y=" + ys_ + " x=" + m.str(x) + " k=" + m.str(k));
        });
    }
    NSetView v = n_set(m, y, w);
    nonempty.checked++;
    proper.checked++;
    if (v.empty()) miss(nonempty, "y=" + ys_);
    if (v.count() == w.elems.size()) miss(proper, "y=" + ys_);
    Element yi = m.inv(y);
    for (const auto& n : w.elems)
      guarded(inv, [&] {
        if (!sum_in_n(m, yi, n)) return;
        Element ni = m.inv(n), s = m.add(y, ni);
        if (m.is_zero(s) || !m.in_n(m.mul(s, yi)) || sum_in_n(m, y, ni)) miss(inv, "y=" + ys_ + " n=" + m.str(n));
      });
    guarded(pset, [&] {
      PSet P = p_set(m, y, w);
      bool ok = P.agree;
      if (ok && w.exhaustive) {
        std::set<std::string> L, direct;
        for (const auto& b : P.left) L.insert(m.str(b));
        for (const auto& n : w.elems) {
          Element b = m.mul(n, y);
          if (in_p(m, y, b)) direct.insert(m.str(b));
        }
        ok = L == direct;
      }
      if (!ok) miss(pset, "y=" + ys_);
    });
  }
  rep.checks = {left, right, conj, nonempty, proper, inv, pset};
  bool skipped = false;
  for (const auto& c : rep.checks) skipped = skipped || c.skipped > 0;
  rep.cert = w.exhaustive ? Cert::Certified : (skipped ? Cert::Inconclusive : Cert::WindowCertified);
  return rep;
}

}  // namespace valgraph
