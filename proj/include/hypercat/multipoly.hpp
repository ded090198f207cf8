#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercat/rational.hpp"

namespace hypercat {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// One of v, e, f or t_k (k >= 2). Total order: v < e < f < t2 < t3 < ...
class Variable {
 public:
  static Variable v() { return Variable(0); }
  static Variable e() { return Variable(1); }
  static Variable f() { return Variable(2); }
  static Variable t(int k);

  bool is_t() const { return code_ >= 3; }
  // the polygon subscript k of a t-kind variable
  int t_index() const;
  // dense ordinal: 0 = v, 1 = e, 2 = f, k+1 = t_k
  int code() const { return code_; }

  std::string name() const;
  static std::optional<Variable> parse(const std::string& name);

  auto operator<=>(const Variable&) const = default;

 private:
  explicit Variable(int code) : code_(code) {}
  int code_;  // 0 = v, 1 = e, 2 = f, k+1 = t_k
};

// Sparse exponent map over Variables. Entries with exponent 0 are never
// stored; two vectors are equal iff their nonzero entries coincide.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::pair<Variable, int>> entries);

  static ExponentVector single(Variable var, int exp);

  const std::vector<std::pair<Variable, int>>& entries() const { return entries_; }
  int exponent(Variable var) const;
  bool empty() const { return entries_.empty(); }

  int total_degree() const;
  // sum of exponents over t-kind variables only
  int t_degree() const;

  // componentwise sum (monomial product)
  ExponentVector plus(const ExponentVector& other) const;
  // removes var; returns the stripped vector and the old exponent
  std::pair<ExponentVector, int> without(Variable var) const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<std::pair<Variable, int>> entries_;  // sorted by Variable, exps > 0
};

// Canonical term order: graded by total degree, ties broken by walking
// variables in Variable order and putting the larger exponent first.
struct TermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable in practice: all operations return new values.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, TermOrder>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return constant(1); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly monomial(const ExponentVector& ev, const Rational& c);
  static MultiPoly var(Variable v) { return monomial(ExponentVector::single(v, 1), 1); }
  // canonicalizing bulk constructor; duplicate exponent vectors are summed
  static MultiPoly from_terms(const std::vector<std::pair<ExponentVector, Rational>>& terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const ExponentVector& ev) const;

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

  MultiPoly pow(int n) const;  // n >= 0

  // p mod z^{d+1}: drops every term whose exponent on z exceeds d. d >= 0.
  MultiPoly truncated(Variable z, int d) const;
  // drops every term whose total degree over t-kind variables exceeds d
  MultiPoly truncated_t_degree(int d) const;
  // replaces z^a by r^a in every term
  MultiPoly substituted(Variable z, const MultiPoly& r) const;

  // exact value at a full variable assignment; throws std::invalid_argument
  // naming the first unassigned variable
  Rational evaluated(const std::map<Variable, Rational>& assign) const;

  // Canonical text form, e.g. "1 + 2*t2*v^2 + -1/3*e". Zero prints as "0".
  std::string to_text() const;
  static MultiPoly from_text(const std::string& text);  // throws ParseError

  // JSON form: list of {"coeff": "p/q", "exps": {var: int}}
  std::string to_json() const;
  static MultiPoly from_json(const std::string& json_text);

 private:
  TermMap terms_;
  void add_term(const ExponentVector& ev, const Rational& c);
  friend MultiPoly mul_serial(const MultiPoly&, const MultiPoly&);
  friend MultiPoly mul_parallel(const MultiPoly&, const MultiPoly&);
};

// Multiplication kernels. mul_serial is the reference implementation;
// mul_parallel splits the left operand across OpenMP threads and merges the
// partial maps. Both produce identical canonical results (exact arithmetic,
// order-independent merge). operator* dispatches on operand size.
MultiPoly mul_serial(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul_parallel(const MultiPoly& p, const MultiPoly& q);

// Evaluates sum c_k * arg^k for a sparse coefficient list (degree, c_k),
// truncating intermediates mod trunc->first^{trunc->second + 1} when given.
// Rejects duplicate or negative degrees.
MultiPoly eval_poly_at_series(const std::vector<std::pair<int, MultiPoly>>& coeffs,
                              const MultiPoly& arg,
                              const std::optional<std::pair<Variable, int>>& trunc = std::nullopt);

}  // namespace hypercat
