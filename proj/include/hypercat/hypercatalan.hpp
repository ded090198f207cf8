#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercat/multipoly.hpp"
#include "hypercat/rational.hpp"

namespace hypercat {

// The multi-index m = [m2, m3, ...] counting triangles, quadrilaterals, ...
// Zero entries are never stored; the empty map is the null type [].
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<std::pair<int, int>> counts);

  static TypeVector null() { return TypeVector(); }
  static TypeVector single(int k, int count = 1) { return TypeVector({{k, count}}); }

  bool is_null() const { return counts_.empty(); }
  int count(int k) const;
  // largest k with m_k > 0; 1 for the null type
  int max_k() const { return counts_.empty() ? 1 : counts_.back().first; }
  const std::vector<std::pair<int, int>>& entries() const { return counts_; }

  TypeVector plus(int k, int delta) const;
  TypeVector plus(const TypeVector& other) const;

  // the monomial t^m
  ExponentVector monomial() const;

  std::string to_text() const;  // "[m2=3,m4=1]", "[]" for null
  static TypeVector from_text(const std::string& text);

  // JSON object mapping "m2", "m3", ... to positive counts
  std::string to_json() const;
  static TypeVector from_json(const std::string& json_text);

  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<std::pair<int, int>> counts_;  // (k >= 2, m_k > 0) sorted by k
};

struct VEF {
  long long V = 0;
  long long E = 0;
  long long F = 0;
  bool operator==(const VEF&) const = default;
};

// F = sum m_k; V = 2 + sum (k-1)*m_k; E = 1 + sum k*m_k.
// V - E + F = 1 always (disk Euler characteristic).
VEF vef(const TypeVector& m);

enum class LevelKind { vertex, edge, face };

std::string level_kind_name(LevelKind kind);
std::optional<LevelKind> level_kind_parse(const std::string& name);

// Which layering variable is bounded, the level bound d, and the polygon
// bound q (largest allowed (q+1)-gon). Face truncation requires finite q;
// for vertex/edge levels an effective q is derived from d.
struct TruncationSpec {
  LevelKind kind;
  int d = 0;
  std::optional<int> q;

  void validate() const;  // throws std::invalid_argument
  Variable layer_variable() const;

  // level of a type: V-2, E-1 or F depending on kind
  long long level_of(const TypeVector& m) const;

  // A central (k+1)-gon contributes k-1 vertices and k edges, so vertex
  // level d forces k <= d+1 and edge level d forces k <= d. Face level
  // requires the explicit q. Returns at least 1 (1 means no polygon fits).
  int effective_q() const;
};

// C[m] = (sum k*m_k)! / ((1 + sum (k-1)*m_k)! * prod m_k!), always an exact
// division; throws std::logic_error if the division leaves a remainder.
Int hyper_catalan(const TypeVector& m);

// All types with support in {2..effective_q} and level <= d, in graded-lex
// order: by level value, then larger m on the smaller k first.
std::vector<TypeVector> enumerate_types(const TruncationSpec& trunc);

// Number of types enumerate_types would return, stopping early once the
// count exceeds limit (returns limit+1 in that case).
unsigned long long count_types(const TruncationSpec& trunc, unsigned long long limit);

// [C[m2=0], C[m2=1], ..., C[m2=n]]: the classical Catalan numbers
std::vector<Int> catalan_row(int n);

}  // namespace hypercat
