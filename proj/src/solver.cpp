#include "hypercat/solver.hpp"

#include <omp.h>

#include <algorithm>

#include "hypercat/series.hpp"

namespace hypercat {

GeometricPoly::GeometricPoly(std::map<int, Rational> a) : coeffs(std::move(a)) {
  for (auto& [k, c] : coeffs) {
    if (k < 2) throw std::invalid_argument("geometric coefficients start at degree 2");
    c.canonicalize();
  }
}

GeometricPoly GeometricPoly::from_coeff_args(const std::vector<std::string>& args) {
  std::map<int, Rational> a;
  for (const auto& arg : args) {
    auto eq = arg.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("coefficient must look like k=p/q, got '" + arg + "'");
    int k = 0;
    const std::string kstr = arg.substr(0, eq);
    if (kstr.empty()) throw std::invalid_argument("missing degree in '" + arg + "'");
    for (char c : kstr) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed degree in '" + arg + "'");
      k = k * 10 + (c - '0');
      if (k > 1000000) throw std::invalid_argument("degree too large in '" + arg + "'");
    }
    if (k < 2) throw std::invalid_argument("geometric coefficients start at degree 2");
    if (!a.emplace(k, rational_from_string(arg.substr(eq + 1))).second)
      throw std::invalid_argument("duplicate coefficient for degree " + std::to_string(k));
  }
  return GeometricPoly(std::move(a));
}

int GeometricPoly::degree() const {
  int q = 2;
  for (const auto& [k, c] : coeffs) q = std::max(q, k);
  return q;
}

Rational GeometricPoly::value_at(const Rational& x) const {
  Rational total = 1 - x;
  for (const auto& [k, a] : coeffs) {
    if (a == 0) continue;
    Rational pw = 1;
    for (int i = 0; i < k; ++i) pw *= x;
    total += a * pw;
  }
  return total;
}

Rational GeometricPoly::derivative_at(const Rational& x) const {
  Rational total = -1;
  for (const auto& [k, a] : coeffs) {
    if (a == 0) continue;
    Rational pw = 1;
    for (int i = 0; i < k - 1; ++i) pw *= x;
    total += k * a * pw;
  }
  return total;
}

ApproxResult approx_root(const GeometricPoly& p, const TruncationSpec& trunc) {
  TruncationSpec used = trunc;
  int degree = p.degree();
  if (used.kind == LevelKind::face) {
    if (used.q && *used.q != degree)
      throw std::invalid_argument("face-level polygon bound must equal the polynomial degree");
    used.q = degree;
  } else {
    // types mentioning k beyond the degree would only pick up a_k = 0 terms
    used.q = std::min(used.q.value_or(degree), degree);
  }
  used.validate();

  LayeredSeries series = build_S(used);
  std::map<Variable, Rational> assign;
  for (int k = 2; k <= used.effective_q(); ++k) {
    auto it = p.coeffs.find(k);
    assign[Variable::t(k)] = it == p.coeffs.end() ? Rational(0) : it->second;
  }
  Rational x = series.poly.evaluated(assign);
  return {x, p.value_at(x), used.kind, used.d, used.effective_q()};
}

Rational newton_root(const GeometricPoly& p, const Rational& x0, int iters) {
  if (iters < 0) throw std::invalid_argument("iteration count must be >= 0");
  Rational x = x0;
  x.canonicalize();
  for (int i = 0; i < iters; ++i) {
    Rational deriv = p.derivative_at(x);
    if (deriv == 0)
      throw std::invalid_argument("zero derivative at iterate " + std::to_string(i));
    x -= p.value_at(x) / deriv;
  }
  return x;
}

std::vector<ConvergenceRow> convergence_table(const GeometricPoly& p, LevelKind kind,
                                              int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  std::vector<ConvergenceRow> rows(static_cast<std::size_t>(d_max) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int d = 0; d <= d_max; ++d) {
    TruncationSpec trunc{kind, d, std::nullopt};
    ApproxResult res = approx_root(p, trunc);
    rows[static_cast<std::size_t>(d)] = {d, res.x, abs(res.residual)};
  }
  return rows;
}

}  // namespace hypercat
