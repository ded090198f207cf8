#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hypercat/series.hpp"
#include "hypercat/solver.hpp"

using namespace hypercat;

namespace {

GeometricPoly quadratic(const Rational& a2) { return GeometricPoly({{2, a2}}); }

// (1 - sqrt(1 - 4a)) / (2a), the root the series converges to, at 256 bits
mpf_class quadratic_root(const Rational& a2) {
  mpf_class a(a2, 256);
  mpf_class disc = 1 - 4 * a;
  return (1 - sqrt(disc)) / (2 * a);
}

mpf_class abs_diff(const Rational& x, const mpf_class& y) {
  mpf_class d = mpf_class(x, 256) - y;
  return d < 0 ? mpf_class(-d) : d;
}

}  // namespace

TEST_CASE("geometric polynomial basics") {
  GeometricPoly p = GeometricPoly::from_coeff_args({"2=1/5", "4=-3/7"});
  CHECK(p.degree() == 4);
  CHECK(p.value_at(0) == 1);
  CHECK(p.value_at(1) == Rational(1, 5) - Rational(3, 7));
  CHECK(quadratic(Rational(1, 4)).derivative_at(2) == 0);

  CHECK_THROWS_AS(GeometricPoly::from_coeff_args({"1=2"}), std::invalid_argument);
  CHECK_THROWS_AS(GeometricPoly::from_coeff_args({"2"}), std::invalid_argument);
  CHECK_THROWS_AS(GeometricPoly::from_coeff_args({"2=1/5", "2=1/7"}), std::invalid_argument);
  CHECK_THROWS_AS(GeometricPoly::from_coeff_args({"x=1"}), std::invalid_argument);
}

TEST_CASE("approx_root examples") {
  // no higher coefficients: 1 - x has the exact root 1 at every level
  GeometricPoly trivial;
  ApproxResult r0 = approx_root(trivial, {LevelKind::face, 5, std::nullopt});
  CHECK(r0.x == 1);
  CHECK(r0.residual == 0);

  // a2 = 1/5 at face level 2: x = 1 + 1/5 + 2/25, residual exact
  ApproxResult r1 = approx_root(quadratic(Rational(1, 5)), {LevelKind::face, 2, std::nullopt});
  CHECK(r1.x == Rational(32, 25));
  CHECK(r1.residual == Rational(149, 3125));
  CHECK(r1.q == 2);

  // deeper truncations move toward the quadratic-formula root
  mpf_class root = quadratic_root(Rational(1, 5));
  mpf_class e4 = abs_diff(approx_root(quadratic(Rational(1, 5)), {LevelKind::face, 4, std::nullopt}).x, root);
  mpf_class e8 = abs_diff(approx_root(quadratic(Rational(1, 5)), {LevelKind::face, 8, std::nullopt}).x, root);
  mpf_class e12 = abs_diff(approx_root(quadratic(Rational(1, 5)), {LevelKind::face, 12, std::nullopt}).x, root);
  CHECK(e8 < e4);
  CHECK(e12 < e8);

  // vertex and edge truncations are accepted too
  ApproxResult rv = approx_root(quadratic(Rational(1, 5)), {LevelKind::vertex, 2, std::nullopt});
  CHECK(rv.x == Rational(32, 25));  // for q = 2 vertex level equals face level
  ApproxResult re = approx_root(quadratic(Rational(1, 5)), {LevelKind::edge, 4, std::nullopt});
  CHECK(re.x == Rational(32, 25));  // edge level 2d

  CHECK_THROWS_AS(approx_root(quadratic(Rational(1, 5)), {LevelKind::face, 2, 5}),
                  std::invalid_argument);
}

TEST_CASE("newton iteration") {
  GeometricPoly trivial;
  CHECK(newton_root(trivial, 0, 1) == 1);  // linear case solves in one step

  // quadratic convergence: six steps from 1 give far more than 10 digits
  Rational x6 = newton_root(quadratic(Rational(1, 5)), 1, 6);
  CHECK(abs_diff(x6, quadratic_root(Rational(1, 5))) < mpf_class(1e-10));

  // double root at a2 = 1/4: iteration is x -> 1 + x/2, converging linearly
  // to 2 with error exactly 2^-n
  Rational x21 = newton_root(quadratic(Rational(1, 4)), 1, 21);
  CHECK(x21 == 2 - Rational(1, 1 << 21));
  CHECK(abs(x21 - 2) < Rational(1, 1000000));

  CHECK_THROWS_AS(newton_root(quadratic(Rational(1, 4)), 2, 1), std::invalid_argument);
}

TEST_CASE("newton and the series agree") {
  for (const Rational a : {Rational(1, 10), Rational(1, 8)}) {
    Rational newton = newton_root(quadratic(a), 1, 12);
    Rational series = approx_root(quadratic(a), {LevelKind::face, 20, std::nullopt}).x;
    CHECK(abs(newton - series) < Rational(1, 1000000));
  }
  // at a2 = 1/6 the tail after degree 20 is ~3e-6, so six-digit agreement
  // needs a deeper cut
  Rational newton = newton_root(quadratic(Rational(1, 6)), 1, 12);
  Rational series20 = approx_root(quadratic(Rational(1, 6)), {LevelKind::face, 20, std::nullopt}).x;
  Rational series44 = approx_root(quadratic(Rational(1, 6)), {LevelKind::face, 44, std::nullopt}).x;
  CHECK(abs(newton - series20) < Rational(1, 100000));
  CHECK(abs(newton - series20) > Rational(1, 1000000));
  CHECK(abs(newton - series44) < Rational(1, 1000000));
}

TEST_CASE("convergence table") {
  GeometricPoly p = GeometricPoly::from_coeff_args({"2=1/5", "3=-1/7"});
  auto rows = convergence_table(p, LevelKind::face, 6);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].d == 0);
  CHECK(rows[0].x == 1);
  CHECK(rows[0].abs_residual == Rational(1, 5) - Rational(1, 7));  // |sum a_k|

  auto quad_rows = convergence_table(quadratic(Rational(1, 5)), LevelKind::face, 4);
  for (std::size_t i = 0; i + 1 < quad_rows.size(); ++i)
    CHECK(quad_rows[i + 1].abs_residual < quad_rows[i].abs_residual);

  // outside the convergence region the table is still produced
  auto rows_div = convergence_table(quadratic(1), LevelKind::face, 5);
  CHECK(rows_div.size() == 6);
}

TEST_CASE("residual has zero coefficients through degree d") {
  // symbolically: 1 - S_d + t2 * S_d^2 vanishes modulo t2^(d+1)
  for (int d = 0; d <= 10; ++d) {
    MultiPoly s = build_S({LevelKind::face, d, 2}).poly;
    MultiPoly residual = MultiPoly::one() - s + MultiPoly::var(Variable::t(2)) * s * s;
    CHECK(residual.truncated_t_degree(d).is_zero());
    CHECK(!residual.is_zero());  // the tail above degree d is nonzero
  }
}

TEST_CASE("deeper truncation beats shallower on random quadratics") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> num(1, 999);
  for (int i = 0; i < 20; ++i) {
    int den = 4 * num(rng) + num(rng) % 7 + 1;
    Rational a(num(rng) % den, den);
    a.canonicalize();
    a /= 4;  // lands in (0, 1/4)
    if (a == 0) a = Rational(1, 8);
    mpf_class root = quadratic_root(a);
    mpf_class e6 = abs_diff(approx_root(quadratic(a), {LevelKind::face, 6, std::nullopt}).x, root);
    mpf_class e12 = abs_diff(approx_root(quadratic(a), {LevelKind::face, 12, std::nullopt}).x, root);
    CHECK(e12 < e6);
  }
}
