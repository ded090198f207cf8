// Compares the serial reference kernels against the OpenMP ones on the two
// hot paths: sparse polynomial multiplication and series construction.
// Results must match exactly; the table reports times and speedup.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>

#include "hypercat/series.hpp"

using namespace hypercat;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

MultiPoly random_poly(std::size_t terms, int max_exp, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  std::vector<Variable> vars{Variable::t(2), Variable::t(3), Variable::t(4), Variable::v(),
                             Variable::e(), Variable::f()};
  MultiPoly p;
  while (p.term_count() < terms) {
    std::vector<std::pair<Variable, int>> exps;
    for (const auto& var : vars) exps.emplace_back(var, exp_dist(rng));
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    p = p + MultiPoly::monomial(ExponentVector(exps), c);
  }
  return p;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-24s serial %9.4fs   openmp %9.4fs   speedup %5.2fx   %s\n", name, serial,
              parallel, serial / parallel, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

  std::printf("threads: %d\n", omp_get_max_threads());

  // series self-product: the accumulation-heavy shape the solver and the
  // congruence checks spend their time in
  MultiPoly a = build_S_poly_serial({LevelKind::face, quick ? 10 : 18, quick ? 3 : 4});
  MultiPoly prod_serial, prod_parallel;
  double ts = time_best_of(quick ? 1 : 3, [&] { prod_serial = mul_serial(a, a); });
  double tp = time_best_of(quick ? 1 : 3, [&] { prod_parallel = mul_parallel(a, a); });
  report("multipoly mul", ts, tp, prod_serial == prod_parallel);

  // adversarial sparse product where most pairs create fresh terms
  std::mt19937 rng(20240811);
  std::size_t n = quick ? 160 : 900;
  MultiPoly r1 = random_poly(n, 6, rng);
  MultiPoly r2 = random_poly(n, 6, rng);
  MultiPoly sparse_serial, sparse_parallel;
  ts = time_best_of(quick ? 1 : 3, [&] { sparse_serial = mul_serial(r1, r2); });
  tp = time_best_of(quick ? 1 : 3, [&] { sparse_parallel = mul_parallel(r1, r2); });
  report("mul, sparse keys", ts, tp, sparse_serial == sparse_parallel);

  TruncationSpec spec{LevelKind::face, quick ? 12 : 22, quick ? 4 : 5};
  MultiPoly s_serial, s_parallel;
  ts = time_best_of(quick ? 1 : 3, [&] { s_serial = build_S_poly_serial(spec); });
  tp = time_best_of(quick ? 1 : 3, [&] { s_parallel = build_S_poly_parallel(spec); });
  report("series build", ts, tp, s_serial == s_parallel);

  // end-to-end congruence check; dominated by the big truncated products,
  // which dispatch to the parallel kernel when threads are available
  int max_threads = omp_get_max_threads();
  TruncationSpec vspec{LevelKind::face, quick ? 8 : 13, quick ? 4 : 5};
  MultiPoly r_serial, r_parallel;
  omp_set_num_threads(1);
  ts = time_best_of(quick ? 1 : 2, [&] { r_serial = verify_layer_zero(vspec); });
  omp_set_num_threads(max_threads);
  tp = time_best_of(quick ? 1 : 2, [&] { r_parallel = verify_layer_zero(vspec); });
  report("verify pipeline", ts, tp, r_serial == r_parallel && r_serial.is_zero());

  bool all_match = prod_serial == prod_parallel && sparse_serial == sparse_parallel &&
                   s_serial == s_parallel && r_serial == r_parallel;
  return all_match ? 0 : 1;
}
