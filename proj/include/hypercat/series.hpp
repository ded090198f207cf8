#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypercat/hypercatalan.hpp"
#include "hypercat/multipoly.hpp"

namespace hypercat {

// Truncated hyper-Catalan generating series. When layered, every term with
// type m carries exactly v^(V_m-2) e^(E_m-1) f^(F_m).
struct LayeredSeries {
  MultiPoly poly;
  TruncationSpec trunc;
  bool layered = false;
};

// sum of hyper_catalan(m) * t^m over enumerate_types(trunc)
LayeredSeries build_S(const TruncationSpec& trunc);
// build_S with every t_k replaced by t_k v^(k-1) e^k f, reduced per trunc
LayeredSeries build_S_layered(const TruncationSpec& trunc);

// Coefficient kernels behind build_S. The serial one is the reference; the
// parallel one computes per-type coefficients across OpenMP threads and
// assembles in type order. Identical output by construction.
MultiPoly build_S_poly_serial(const TruncationSpec& trunc);
MultiPoly build_S_poly_parallel(const TruncationSpec& trunc);

// t_k -> t_k v^(k-1) e^k f for every t-variable present
MultiPoly layer_substitution(const MultiPoly& p);

// Coefficients of h(x) = 1 - x + sum_{k=2..q} v^(k-1) e^k f t_k x^k,
// as (degree, coefficient) pairs. Requires q >= 2.
std::vector<std::pair<int, MultiPoly>> layered_h_coeffs(int q);
// unlayered variant (v = e = f = 1): 1 - x + sum t_k x^k
std::vector<std::pair<int, MultiPoly>> geometric_h_coeffs(int q);

// Evaluates h at the layered truncated series and returns the residual
// reduced mod z^(d+1). Zero exactly, for every valid spec; a nonzero
// residual is returned rather than raised so callers can display it.
MultiPoly verify_layer_zero(const TruncationSpec& trunc);

struct ReportRow {
  TypeVector m;
  Int C;
  VEF stats;
  std::string monomial;  // layered monomial text
};

// one row per type in graded-lex order
std::vector<ReportRow> coefficient_report(const TruncationSpec& trunc);
// CSV with header "type,C,V,E,F,monomial"
std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace hypercat
