#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "valgraph/errors.hpp"
#include "valgraph/gf.hpp"
#include "valgraph/laurent.hpp"
#include "valgraph/poly.hpp"
#include "valgraph/quat.hpp"

namespace valgraph {

struct Fq {
  unsigned v = 0;
  bool operator==(const Fq& o) const { return v == o.v; }
};

using Element = std::variant<Fq, Laurent, RatFunc, mpq_class, Quat>;

enum class ModelKind { FiniteField, LaurentLocal, FunctionField, RationalCongruence, Quaternion };

const char* kind_name(ModelKind k);

// Bounded window of N used for quantifiers on infinite models. radius is in
// units of the value group of phi (valuation / e); depth controls how many
// unit parts are enumerated per valuation vector.
struct WindowSpec {
  int radius = 4;
  int depth = 2;
};

class Model {
 public:
  virtual ~Model() = default;
  virtual ModelKind kind() const = 0;
  virtual std::string describe() const = 0;

  // arithmetic
  virtual Element one() const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element neg(const Element& a) const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual bool is_zero(const Element& a) const = 0;
  virtual std::string str(const Element& a) const = 0;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element from_int(long n) const;
  Element pow(const Element& a, long k) const;
  virtual bool equal(const Element& a, const Element& b) const { return is_zero(sub(a, b)); }
  // "label:N" gives the stored coset representative; otherwise model syntax
  Element parse(const std::string& text) const;

  // the subgroup N and its cosets; label 0 is N
  virtual bool in_n(const Element& x) const = 0;
  virtual int coset_of(const Element& x) const = 0;
  int index() const { return static_cast<int>(reps_.size()); }
  const std::vector<Element>& reps() const { return reps_; }
  int mul_label(int a, int b) const { return table_[a][b]; }
  int inv_label(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  virtual std::string label_name(int label) const { return std::to_string(label); }

  // full enumeration for finite kinds
  virtual bool enumerable() const { return false; }
  virtual std::vector<Element> all_units() const { fail(ErrorCode::NotEnumerable, describe()); }

  // places: N = intersection of N_i = <pi^e> x U^(1) at place i
  virtual int num_places() const { return 0; }
  virtual int place_e() const { return 0; }
  virtual long valuation(const Element& x, int place) const;
  virtual unsigned residue(const Element& x, int place) const;
  virtual bool in_n_place(const Element& x, int place) const;
  virtual const GF* residue_field() const { return nullptr; }
  std::vector<long> valuations(const Element& x) const;

  // N-window (all of N for enumerable models)
  virtual std::vector<Element> n_window(const WindowSpec& w) const = 0;
  // random nonzero element for property tests
  virtual Element random_element(std::mt19937_64& rng) const = 0;

  // coordinates over the prime field / Q when D is finite-dimensional there
  virtual int base_dimension() const { return 0; }
  virtual std::vector<mpq_class> coordinates(const Element& x) const;

  // a ring automorphism swapping the two places, when available
  virtual bool has_swap() const { return false; }
  virtual Element swap(const Element& x) const;

 protected:
  virtual Element parse_literal(const std::string& text) const = 0;
  // label count must be known; reps found by closure over generators
  void finalize_cosets(int index, const std::vector<Element>& generators);
  void set_reps(std::vector<Element> reps);

 private:
  void build_table();
  std::vector<Element> reps_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

using ModelPtr = std::shared_ptr<const Model>;

class FiniteFieldModel : public Model {
 public:
  FiniteFieldModel(unsigned q, unsigned m);
  ModelKind kind() const override { return ModelKind::FiniteField; }
  std::string describe() const override;
  Element one() const override { return Fq{1}; }
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_zero(const Element& a) const override { return std::get<Fq>(a).v == 0; }
  bool equal(const Element& a, const Element& b) const override { return std::get<Fq>(a) == std::get<Fq>(b); }
  std::string str(const Element& a) const override { return std::to_string(std::get<Fq>(a).v); }
  bool in_n(const Element& x) const override;
  int coset_of(const Element& x) const override;
  bool enumerable() const override { return true; }
  std::vector<Element> all_units() const override;
  std::vector<Element> n_window(const WindowSpec& w) const override;
  Element random_element(std::mt19937_64& rng) const override;
  int base_dimension() const override { return 1; }
  const GF& field() const { return f_; }
  unsigned m() const { return m_; }

 protected:
  Element parse_literal(const std::string& text) const override;

 private:
  GF f_;
  unsigned m_;
};

class LaurentModel : public Model {
 public:
  LaurentModel(unsigned q, int e, int k, int guard);
  ModelKind kind() const override { return ModelKind::LaurentLocal; }
  std::string describe() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_zero(const Element& a) const override { return std::get<Laurent>(a).is_zero(); }
  std::string str(const Element& a) const override { return ar_.str(std::get<Laurent>(a)); }
  bool in_n(const Element& x) const override;
  int coset_of(const Element& x) const override;
  int num_places() const override { return 1; }
  int place_e() const override { return e_; }
  long valuation(const Element& x, int place) const override;
  unsigned residue(const Element& x, int place) const override;
  bool in_n_place(const Element& x, int) const override { return in_n(x); }
  const GF* residue_field() const override { return &f_; }
  std::vector<Element> n_window(const WindowSpec& w) const override;
  Element random_element(std::mt19937_64& rng) const override;
  Element series(const std::vector<unsigned>& coeffs, long shift) const;
  Element t_pow(long k) const;
  const LaurentArith& arith() const { return ar_; }
  int precision() const { return k_; }

 protected:
  Element parse_literal(const std::string& text) const override;

 private:
  GF f_;
  int e_, k_;
  LaurentArith ar_;
};

class FunctionFieldModel : public Model {
 public:
  FunctionFieldModel(unsigned q, std::vector<unsigned> places, int e);
  ModelKind kind() const override { return ModelKind::FunctionField; }
  std::string describe() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_zero(const Element& a) const override { return std::get<RatFunc>(a).num.empty(); }
  bool equal(const Element& a, const Element& b) const override { return std::get<RatFunc>(a) == std::get<RatFunc>(b); }
  std::string str(const Element& a) const override { return ratfunc::str(std::get<RatFunc>(a)); }
  bool in_n(const Element& x) const override;
  int coset_of(const Element& x) const override;
  int num_places() const override { return static_cast<int>(places_.size()); }
  int place_e() const override { return e_; }
  long valuation(const Element& x, int place) const override;
  unsigned residue(const Element& x, int place) const override;
  bool in_n_place(const Element& x, int place) const override;
  const GF* residue_field() const override { return &f_; }
  std::vector<Element> n_window(const WindowSpec& w) const override;
  Element random_element(std::mt19937_64& rng) const override;
  bool has_swap() const override { return places_.size() == 2; }
  Element swap(const Element& x) const override;
  Element uniformizer() const;
  Element from_poly(const Poly& p) const;
  // polynomial with prescribed nonzero values at the places
  Poly interpolate(const std::vector<unsigned>& values) const;
  const std::vector<unsigned>& places() const { return places_; }
  const GF& field() const { return f_; }

 protected:
  Element parse_literal(const std::string& text) const override;

 private:
  // residue at place i of x * pi^(-v_i(x))
  unsigned unit_residue(const RatFunc& x, int place, long& val) const;
  GF f_;
  std::vector<unsigned> places_;
  int e_;
};

class RationalModel : public Model {
 public:
  RationalModel(unsigned m, unsigned l, unsigned long factor_bound);
  ModelKind kind() const override { return ModelKind::RationalCongruence; }
  std::string describe() const override;
  Element one() const override { return mpq_class(1); }
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_zero(const Element& a) const override { return sgn(std::get<mpq_class>(a)) == 0; }
  bool equal(const Element& a, const Element& b) const override { return std::get<mpq_class>(a) == std::get<mpq_class>(b); }
  std::string str(const Element& a) const override { return std::get<mpq_class>(a).get_str(); }
  bool in_n(const Element& x) const override;
  int coset_of(const Element& x) const override;
  std::vector<Element> n_window(const WindowSpec& w) const override;
  Element random_element(std::mt19937_64& rng) const override;
  int base_dimension() const override { return 1; }
  std::vector<mpq_class> coordinates(const Element& x) const override { return {std::get<mpq_class>(x)}; }

  // total prime-exponent sum h
  long h(const mpq_class& x) const;
  long vl(const mpq_class& x) const;
  // class of the l-adic unit part in F_l^x/(F_l^x)^m, in [0, g)
  unsigned residue_class(const mpq_class& x) const;
  unsigned m() const { return m_; }
  unsigned l() const { return l_; }
  unsigned g() const { return g_; }

 protected:
  Element parse_literal(const std::string& text) const override;

 private:
  long omega(mpz_class n) const;
  unsigned m_, l_, g_;
  unsigned long bound_;
  std::vector<unsigned> dlog_;  // discrete log mod l
};

class QuaternionModel : public Model {
 public:
  QuaternionModel(long d, int branch, PrecisionPolicy pol);
  ModelKind kind() const override { return ModelKind::Quaternion; }
  std::string describe() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_zero(const Element& a) const override { return std::get<Quat>(a).is_zero(); }
  bool equal(const Element& a, const Element& b) const override { return std::get<Quat>(a) == std::get<Quat>(b); }
  std::string str(const Element& a) const override { return qa_.str(std::get<Quat>(a)); }
  bool in_n(const Element& x) const override;
  int coset_of(const Element& x) const override;
  std::string label_name(int label) const override;
  int num_places() const override { return 2; }
  int place_e() const override { return 2; }
  long valuation(const Element& x, int place) const override;
  unsigned residue(const Element& x, int place) const override;
  bool in_n_place(const Element& x, int place) const override;
  const GF* residue_field() const override { return &f4_; }
  std::vector<Element> n_window(const WindowSpec& w) const override;
  Element random_element(std::mt19937_64& rng) const override;
  int base_dimension() const override { return 8; }
  std::vector<mpq_class> coordinates(const Element& x) const override;
  bool has_swap() const override { return true; }
  Element swap(const Element& x) const override;

  Element make(const QuadRat& x0, const QuadRat& x1, const QuadRat& x2, const QuadRat& x3) const;
  Element central(const QuadRat& c) const;
  Element pi() const;  // i + j
  Element a() const;   // (-1+i+j+k)/2
  QuadRat nrd(const Element& x) const { return qa_.nrd(std::get<Quat>(x)); }
  // valuation of c in F at place i, normalized so v(2) = 1
  long field_valuation(const QuadRat& c, int place) const;
  const QuatArith& arith() const { return qa_; }
  const TwoAdicRoot& root() const { return root_; }
  long d() const { return d_; }
  // per-place label in [0,6): parity*3 + residue index of {1, a, a+1}
  int place_label(const Element& x, int place) const;

 protected:
  Element parse_literal(const std::string& text) const override;

 private:
  long d_;
  QuatArith qa_;
  TwoAdicRoot root_;
  GF f4_;
};

}  // namespace valgraph
