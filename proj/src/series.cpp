#include "hypercat/series.hpp"

#include <omp.h>

#include <algorithm>

namespace hypercat {

namespace {

// the layered monomial t^m v^(V_m-2) e^(E_m-1) f^(F_m)
ExponentVector layered_monomial(const TypeVector& m) {
  VEF s = vef(m);
  std::vector<std::pair<Variable, int>> exps;
  for (const auto& [k, mk] : m.entries()) exps.emplace_back(Variable::t(k), mk);
  exps.emplace_back(Variable::v(), static_cast<int>(s.V - 2));
  exps.emplace_back(Variable::e(), static_cast<int>(s.E - 1));
  exps.emplace_back(Variable::f(), static_cast<int>(s.F));
  return ExponentVector(std::move(exps));
}

MultiPoly assemble(const std::vector<TypeVector>& types, const std::vector<Int>& coeffs) {
  std::vector<std::pair<ExponentVector, Rational>> terms;
  terms.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i)
    terms.emplace_back(types[i].monomial(), Rational(coeffs[i]));
  return MultiPoly::from_terms(terms);
}

}  // namespace

MultiPoly build_S_poly_serial(const TruncationSpec& trunc) {
  std::vector<TypeVector> types = enumerate_types(trunc);
  std::vector<Int> coeffs(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) coeffs[i] = hyper_catalan(types[i]);
  return assemble(types, coeffs);
}

MultiPoly build_S_poly_parallel(const TruncationSpec& trunc) {
  std::vector<TypeVector> types = enumerate_types(trunc);
  std::vector<Int> coeffs(types.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(types.size()); ++i)
    coeffs[static_cast<std::size_t>(i)] = hyper_catalan(types[static_cast<std::size_t>(i)]);
  return assemble(types, coeffs);
}

LayeredSeries build_S(const TruncationSpec& trunc) {
  trunc.validate();
  MultiPoly poly = (count_types(trunc, 512) > 512 && omp_get_max_threads() > 1)
                       ? build_S_poly_parallel(trunc)
                       : build_S_poly_serial(trunc);
  return {std::move(poly), trunc, false};
}

MultiPoly layer_substitution(const MultiPoly& p) {
  // collect the t-variables present, then substitute one at a time; each
  // replacement t_k v^(k-1) e^k f reintroduces t_k, which substituted() does
  // not rescan
  std::vector<Variable> tvars;
  for (const auto& [ev, c] : p.terms())
    for (const auto& [var, exp] : ev.entries())
      if (var.is_t() && std::find(tvars.begin(), tvars.end(), var) == tvars.end())
        tvars.push_back(var);
  MultiPoly out = p;
  for (Variable tk : tvars) {
    int k = tk.t_index();
    ExponentVector repl({{tk, 1},
                         {Variable::v(), k - 1},
                         {Variable::e(), k},
                         {Variable::f(), 1}});
    out = out.substituted(tk, MultiPoly::monomial(repl, 1));
  }
  return out;
}

LayeredSeries build_S_layered(const TruncationSpec& trunc) {
  LayeredSeries plain = build_S(trunc);
  MultiPoly layered = layer_substitution(plain.poly).truncated(trunc.layer_variable(), trunc.d);
  return {std::move(layered), trunc, true};
}

std::vector<std::pair<int, MultiPoly>> layered_h_coeffs(int q) {
  if (q < 2) throw std::invalid_argument("polygon bound q must be >= 2");
  std::vector<std::pair<int, MultiPoly>> coeffs;
  coeffs.emplace_back(0, MultiPoly::one());
  coeffs.emplace_back(1, MultiPoly::constant(-1));
  for (int k = 2; k <= q; ++k) {
    ExponentVector ev({{Variable::t(k), 1},
                       {Variable::v(), k - 1},
                       {Variable::e(), k},
                       {Variable::f(), 1}});
    coeffs.emplace_back(k, MultiPoly::monomial(ev, 1));
  }
  return coeffs;
}

std::vector<std::pair<int, MultiPoly>> geometric_h_coeffs(int q) {
  if (q < 2) throw std::invalid_argument("polygon bound q must be >= 2");
  std::vector<std::pair<int, MultiPoly>> coeffs;
  coeffs.emplace_back(0, MultiPoly::one());
  coeffs.emplace_back(1, MultiPoly::constant(-1));
  for (int k = 2; k <= q; ++k) coeffs.emplace_back(k, MultiPoly::var(Variable::t(k)));
  return coeffs;
}

MultiPoly verify_layer_zero(const TruncationSpec& trunc) {
  trunc.validate();
  LayeredSeries series = build_S_layered(trunc);
  int q_eff = trunc.effective_q();
  std::vector<std::pair<int, MultiPoly>> coeffs =
      q_eff >= 2 ? layered_h_coeffs(q_eff)
                 : std::vector<std::pair<int, MultiPoly>>{{0, MultiPoly::one()},
                                                          {1, MultiPoly::constant(-1)}};
  return eval_poly_at_series(coeffs, series.poly,
                             std::make_pair(trunc.layer_variable(), trunc.d));
}

std::vector<ReportRow> coefficient_report(const TruncationSpec& trunc) {
  std::vector<ReportRow> rows;
  for (const auto& m : enumerate_types(trunc)) {
    ReportRow row;
    row.m = m;
    row.C = hyper_catalan(m);
    row.stats = vef(m);
    row.monomial = MultiPoly::monomial(layered_monomial(m), 1).to_text();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::string out = "type,C,V,E,F,monomial\n";
  for (const auto& row : rows) {
    out += row.m.to_text() + "," + row.C.get_str() + "," + std::to_string(row.stats.V) + "," +
           std::to_string(row.stats.E) + "," + std::to_string(row.stats.F) + "," + row.monomial +
           "\n";
  }
  return out;
}

}  // namespace hypercat
