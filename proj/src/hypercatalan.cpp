#include "hypercat/hypercatalan.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"

namespace hypercat {

TypeVector::TypeVector(std::vector<std::pair<int, int>> counts) {
  std::sort(counts.begin(), counts.end());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    auto [k, m] = counts[i];
    if (k < 2) throw std::invalid_argument("polygon index must be >= 2, got " + std::to_string(k));
    if (m < 0) throw std::invalid_argument("negative multiplicity for m" + std::to_string(k));
    if (i > 0 && counts[i - 1].first == k)
      throw std::invalid_argument("duplicate polygon index " + std::to_string(k));
    if (m > 0) counts_.emplace_back(k, m);
  }
}

int TypeVector::count(int k) const {
  for (const auto& [kk, m] : counts_)
    if (kk == k) return m;
  return 0;
}

TypeVector TypeVector::plus(int k, int delta) const {
  TypeVector out = *this;
  for (auto& [kk, m] : out.counts_) {
    if (kk == k) {
      m += delta;
      if (m < 0) throw std::invalid_argument("multiplicity went negative");
      if (m == 0)
        out.counts_.erase(std::find_if(out.counts_.begin(), out.counts_.end(),
                                       [k](const auto& ent) { return ent.first == k; }));
      return out;
    }
  }
  if (delta < 0) throw std::invalid_argument("multiplicity went negative");
  if (delta > 0) {
    out.counts_.emplace_back(k, delta);
    std::sort(out.counts_.begin(), out.counts_.end());
  }
  return out;
}

TypeVector TypeVector::plus(const TypeVector& other) const {
  TypeVector out = *this;
  for (const auto& [k, m] : other.counts_) out = out.plus(k, m);
  return out;
}

ExponentVector TypeVector::monomial() const {
  std::vector<std::pair<Variable, int>> exps;
  for (const auto& [k, m] : counts_) exps.emplace_back(Variable::t(k), m);
  return ExponentVector(std::move(exps));
}

std::string TypeVector::to_text() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, m] : counts_) {
    if (!first) out += ",";
    first = false;
    out += "m" + std::to_string(k) + "=" + std::to_string(m);
  }
  return out + "]";
}

TypeVector TypeVector::from_text(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("type vector must be bracketed", 0);
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return TypeVector();
  std::vector<std::pair<int, int>> counts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t ipos = pos + 1;  // position in the original text
    std::size_t eq = item.find('=');
    if (item.size() < 4 || item[0] != 'm' || eq == std::string::npos)
      throw ParseError("expected mK=N", ipos);
    auto parse_uint = [&](const std::string& s, std::size_t at) {
      if (s.empty()) throw ParseError("missing number", at);
      long long val = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("malformed number '" + s + "'", at);
        val = val * 10 + (c - '0');
        if (val > std::numeric_limits<int>::max()) throw ParseError("number too large", at);
      }
      return static_cast<int>(val);
    };
    int k = parse_uint(item.substr(1, eq - 1), ipos + 1);
    int m = parse_uint(item.substr(eq + 1), ipos + eq + 1);
    if (k < 2) throw ParseError("polygon index must be >= 2", ipos + 1);
    if (m == 0) throw ParseError("zero entries are omitted, not written", ipos + eq + 1);
    counts.emplace_back(k, m);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return TypeVector(std::move(counts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string TypeVector::to_json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [k, m] : counts_) obj["m" + std::to_string(k)] = m;
  return obj.dump();
}

TypeVector TypeVector::from_json(const std::string& json_text) {
  nlohmann::json obj = nlohmann::json::parse(json_text);
  if (!obj.is_object()) throw std::invalid_argument("type vector JSON must be an object");
  std::vector<std::pair<int, int>> counts;
  for (const auto& [key, val] : obj.items()) {
    if (key.size() < 2 || key[0] != 'm')
      throw std::invalid_argument("type vector keys look like 'm2', got '" + key + "'");
    int k = std::stoi(key.substr(1));
    counts.emplace_back(k, val.get<int>());
  }
  return TypeVector(std::move(counts));
}

VEF vef(const TypeVector& m) {
  VEF out{2, 1, 0};
  for (const auto& [k, mk] : m.entries()) {
    out.V += static_cast<long long>(k - 1) * mk;
    out.E += static_cast<long long>(k) * mk;
    out.F += mk;
  }
  return out;
}

std::string level_kind_name(LevelKind kind) {
  switch (kind) {
    case LevelKind::vertex: return "vertex";
    case LevelKind::edge: return "edge";
    case LevelKind::face: return "face";
  }
  return "?";
}

std::optional<LevelKind> level_kind_parse(const std::string& name) {
  if (name == "vertex" || name == "v") return LevelKind::vertex;
  if (name == "edge" || name == "e") return LevelKind::edge;
  if (name == "face" || name == "f") return LevelKind::face;
  return std::nullopt;
}

void TruncationSpec::validate() const {
  if (d < 0) throw std::invalid_argument("level bound d must be >= 0");
  if (q && *q < 2) throw std::invalid_argument("polygon bound q must be >= 2");
  if (kind == LevelKind::face && !q)
    throw std::invalid_argument("face level requires a finite polygon bound q");
}

Variable TruncationSpec::layer_variable() const {
  switch (kind) {
    case LevelKind::vertex: return Variable::v();
    case LevelKind::edge: return Variable::e();
    case LevelKind::face: return Variable::f();
  }
  throw std::logic_error("bad level kind");
}

long long TruncationSpec::level_of(const TypeVector& m) const {
  VEF s = vef(m);
  switch (kind) {
    case LevelKind::vertex: return s.V - 2;
    case LevelKind::edge: return s.E - 1;
    case LevelKind::face: return s.F;
  }
  throw std::logic_error("bad level kind");
}

int TruncationSpec::effective_q() const {
  int derived = 1;
  switch (kind) {
    case LevelKind::vertex: derived = d + 1; break;
    case LevelKind::edge: derived = d; break;
    case LevelKind::face: derived = *q; break;
  }
  int out = q ? std::min(*q, derived) : derived;
  return std::max(out, 1);
}

Int hyper_catalan(const TypeVector& m) {
  unsigned long edges = 0, verts = 0;
  for (const auto& [k, mk] : m.entries()) {
    edges += static_cast<unsigned long>(k) * static_cast<unsigned long>(mk);
    verts += static_cast<unsigned long>(k - 1) * static_cast<unsigned long>(mk);
  }
  Int num = factorial(edges);
  Int den = factorial(1 + verts);
  for (const auto& [k, mk] : m.entries()) den *= factorial(static_cast<unsigned long>(mk));
  Int out, rem;
  mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("hyper-Catalan division left a remainder for " + m.to_text());
  return out;
}

namespace {

// graded-lex on types: level value first, then larger count on smaller k first
bool type_less(const TruncationSpec& trunc, const TypeVector& a, const TypeVector& b) {
  long long la = trunc.level_of(a), lb = trunc.level_of(b);
  if (la != lb) return la < lb;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first == eb[j].first) {
      if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
      ++i, ++j;
    } else {
      return ea[i].first < eb[j].first;
    }
  }
  return i < ea.size();
}

// per-polygon level cost of one (k+1)-gon
long long level_cost(LevelKind kind, int k) {
  switch (kind) {
    case LevelKind::vertex: return k - 1;
    case LevelKind::edge: return k;
    case LevelKind::face: return 1;
  }
  return 0;
}

template <typename Visit>
void walk_types(const TruncationSpec& trunc, int k, long long budget, TypeVector& current,
                Visit&& visit) {
  if (k > trunc.effective_q()) {
    visit(current);
    return;
  }
  long long cost = level_cost(trunc.kind, k);
  for (int mk = 0;; ++mk) {
    if (static_cast<long long>(mk) * cost > budget) break;
    TypeVector saved = current;
    if (mk > 0) current = current.plus(k, mk);
    walk_types(trunc, k + 1, budget - mk * cost, current, visit);
    current = saved;
    if (cost == 0) break;  // defensive; cost is always >= 1 here
  }
}

}  // namespace

std::vector<TypeVector> enumerate_types(const TruncationSpec& trunc) {
  trunc.validate();
  std::vector<TypeVector> out;
  TypeVector current;
  walk_types(trunc, 2, trunc.d, current, [&](const TypeVector& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(),
            [&](const TypeVector& a, const TypeVector& b) { return type_less(trunc, a, b); });
  return out;
}

unsigned long long count_types(const TruncationSpec& trunc, unsigned long long limit) {
  trunc.validate();
  unsigned long long n = 0;
  TypeVector current;
  try {
    walk_types(trunc, 2, trunc.d, current, [&](const TypeVector&) {
      if (++n > limit) throw std::overflow_error("limit");
    });
  } catch (const std::overflow_error&) {
    return limit + 1;
  }
  return n;
}

std::vector<Int> catalan_row(int n) {
  if (n < 0) throw std::invalid_argument("row length must be >= 0");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    out.push_back(hyper_catalan(i == 0 ? TypeVector::null() : TypeVector::single(2, i)));
  return out;
}

}  // namespace hypercat
