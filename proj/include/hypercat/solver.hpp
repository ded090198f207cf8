#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypercat/hypercatalan.hpp"
#include "hypercat/rational.hpp"

namespace hypercat {

// 1 - x + a_2 x^2 + ... + a_q x^q: constant fixed at 1, linear at -1.
struct GeometricPoly {
  std::map<int, Rational> coeffs;  // k in 2..q, zeros allowed

  GeometricPoly() = default;
  explicit GeometricPoly(std::map<int, Rational> a);

  // parses "k=p/q" pairs, e.g. {"2=1/5", "3=-1/7"}
  static GeometricPoly from_coeff_args(const std::vector<std::string>& args);

  int degree() const;  // largest k present (2 when none)
  Rational value_at(const Rational& x) const;       // 1 - x + sum a_k x^k
  Rational derivative_at(const Rational& x) const;  // -1 + sum k a_k x^(k-1)
};

struct ApproxResult {
  Rational x;
  Rational residual;  // value_at(x), exact
  LevelKind kind;
  int d = 0;
  int q = 0;
};

// x = the truncated series evaluated at t_k = a_k; exact rational.
// For the face kind the polygon bound is the polynomial's degree.
ApproxResult approx_root(const GeometricPoly& p, const TruncationSpec& trunc);

// Newton iteration from x0 in exact rational arithmetic; returns the last
// iterate. Throws on a zero derivative at any iterate.
Rational newton_root(const GeometricPoly& p, const Rational& x0, int iters);

struct ConvergenceRow {
  int d = 0;
  Rational x;
  Rational abs_residual;
};

// one row per d = 0..d_max; rows are independent and computed in parallel
std::vector<ConvergenceRow> convergence_table(const GeometricPoly& p, LevelKind kind, int d_max);

}  // namespace hypercat
