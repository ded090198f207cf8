#include "hypercat/multipoly.hpp"

#include <omp.h>

#include <algorithm>

#include "json.hpp"

namespace hypercat {

Variable Variable::t(int k) {
  if (k < 2) throw std::invalid_argument("t-variable subscript must be >= 2, got " + std::to_string(k));
  return Variable(k + 1);
}

int Variable::t_index() const {
  if (!is_t()) throw std::logic_error("t_index on non-t variable");
  return code_ - 1;
}

std::string Variable::name() const {
  switch (code_) {
    case 0: return "v";
    case 1: return "e";
    case 2: return "f";
    default: return "t" + std::to_string(code_ - 1);
  }
}

std::optional<Variable> Variable::parse(const std::string& name) {
  if (name == "v") return v();
  if (name == "e") return e();
  if (name == "f") return f();
  if (name.size() >= 2 && name[0] == 't') {
    if (name[1] == '0' && name.size() > 2) return std::nullopt;
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      k = k * 10 + (name[i] - '0');
      if (k > 1000000) return std::nullopt;
    }
    if (k >= 2) return t(k);
  }
  return std::nullopt;
}

ExponentVector::ExponentVector(std::vector<std::pair<Variable, int>> entries) {
  for (const auto& [var, exp] : entries) {
    if (exp < 0) throw std::invalid_argument("negative exponent on " + var.name());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].first == entries[i + 1].first)
      throw std::invalid_argument("duplicate variable " + entries[i].first.name());
  }
  for (auto& ent : entries)
    if (ent.second != 0) entries_.push_back(ent);
}

ExponentVector ExponentVector::single(Variable var, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent on " + var.name());
  ExponentVector ev;
  if (exp != 0) ev.entries_.emplace_back(var, exp);
  return ev;
}

int ExponentVector::exponent(Variable var) const {
  for (const auto& [v, e] : entries_)
    if (v == var) return e;
  return 0;
}

int ExponentVector::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

int ExponentVector::t_degree() const {
  int d = 0;
  for (const auto& [v, e] : entries_)
    if (v.is_t()) d += e;
  return d;
}

ExponentVector ExponentVector::plus(const ExponentVector& other) const {
  ExponentVector out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < other.entries_.size()) {
    if (j == other.entries_.size() || (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
      out.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
      out.entries_.push_back(other.entries_[j++]);
    } else {
      out.entries_.emplace_back(entries_[i].first, entries_[i].second + other.entries_[j].second);
      ++i, ++j;
    }
  }
  return out;
}

std::pair<ExponentVector, int> ExponentVector::without(Variable var) const {
  ExponentVector out;
  int old = 0;
  for (const auto& ent : entries_) {
    if (ent.first == var)
      old = ent.second;
    else
      out.entries_.push_back(ent);
  }
  return {out, old};
}

bool TermOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // same grade: first variable (in canonical order) with differing exponent
  // decides; the larger exponent sorts first
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first == eb[j].first) {
      if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
      ++i, ++j;
    } else if (ea[i].first < eb[j].first) {
      return true;  // a has a positive exponent where b has zero
    } else {
      return false;
    }
  }
  if (i < ea.size()) return true;
  return false;
}

namespace {

// mpq arithmetic requires canonical operands; user-supplied values may not be
Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  Rational cc = canonical(c);
  if (cc != 0) p.terms_.emplace(ExponentVector(), std::move(cc));
  return p;
}

MultiPoly MultiPoly::monomial(const ExponentVector& ev, const Rational& c) {
  MultiPoly p;
  Rational cc = canonical(c);
  if (cc != 0) p.terms_.emplace(ev, std::move(cc));
  return p;
}

MultiPoly MultiPoly::from_terms(const std::vector<std::pair<ExponentVector, Rational>>& terms) {
  MultiPoly p;
  for (const auto& [ev, c] : terms) p.add_term(ev, canonical(c));
  return p;
}

Rational MultiPoly::coefficient(const ExponentVector& ev) const {
  auto it = terms_.find(ev);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& ev, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(ev, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [ev, c] : other.terms_) out.add_term(ev, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [ev, c] : other.terms_) out.add_term(ev, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [ev, c] : terms_) out.terms_.emplace(ev, -c);
  return out;
}

MultiPoly mul_serial(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly out;
  for (const auto& [ev1, c1] : p.terms_)
    for (const auto& [ev2, c2] : q.terms_) out.add_term(ev1.plus(ev2), c1 * c2);
  return out;
}

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// additive over plus(): F(a.plus(b)) = F(a) + F(b), so a product term's
// owner is decided by its two factors without materializing the product
uint64_t fingerprint(const ExponentVector& ev) {
  uint64_t h = 0;
  for (const auto& [var, exp] : ev.entries())
    h += mix64(static_cast<uint64_t>(var.code())) * static_cast<uint64_t>(exp);
  return h;
}

}  // namespace

MultiPoly mul_parallel(const MultiPoly& p, const MultiPoly& q) {
  using TermPtr = const std::pair<const ExponentVector, Rational>*;
  std::vector<TermPtr> pt, qt;
  std::vector<uint64_t> ph, qh;
  for (const auto& term : p.terms_) {
    pt.push_back(&term);
    ph.push_back(fingerprint(term.first));
  }
  for (const auto& term : q.terms_) {
    qt.push_back(&term);
    qh.push_back(fingerprint(term.first));
  }

  unsigned nthreads = static_cast<unsigned>(omp_get_max_threads());
  std::vector<MultiPoly> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    unsigned tid = static_cast<unsigned>(omp_get_thread_num());
    MultiPoly& local = partial[tid];
    for (std::size_t i = 0; i < pt.size(); ++i) {
      for (std::size_t j = 0; j < qt.size(); ++j) {
        // every pair contributing to one product term lands in one thread,
        // so the partial maps hold disjoint keys and full coefficient sums
        if ((ph[i] + qh[j]) % nthreads != tid) continue;
        local.add_term(pt[i]->first.plus(qt[j]->first), pt[i]->second * qt[j]->second);
      }
    }
  }

  // disjoint key sets: splice the nodes over, no copies
  MultiPoly out;
  for (auto& part : partial) out.terms_.merge(part.terms_);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  // parallel kernel pays off only past a few thousand term pairs
  if (terms_.size() * other.terms_.size() >= 16384 && omp_get_max_threads() > 1)
    return mul_parallel(*this, other);
  return mul_serial(*this, other);
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  MultiPoly acc = one();
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

MultiPoly MultiPoly::truncated(Variable z, int d) const {
  if (d < 0) throw std::invalid_argument("truncation bound must be >= 0");
  MultiPoly out;
  for (const auto& [ev, c] : terms_)
    if (ev.exponent(z) <= d) out.terms_.emplace(ev, c);
  return out;
}

MultiPoly MultiPoly::truncated_t_degree(int d) const {
  if (d < 0) throw std::invalid_argument("truncation bound must be >= 0");
  MultiPoly out;
  for (const auto& [ev, c] : terms_)
    if (ev.t_degree() <= d) out.terms_.emplace(ev, c);
  return out;
}

MultiPoly MultiPoly::substituted(Variable z, const MultiPoly& r) const {
  MultiPoly out;
  std::map<int, MultiPoly> powers;  // r^a cache
  powers[0] = one();
  for (const auto& [ev, c] : terms_) {
    auto [stripped, a] = ev.without(z);
    if (a == 0) {
      out.add_term(ev, c);
      continue;
    }
    auto it = powers.lower_bound(a);
    if (it == powers.end() || it->first != a) {
      auto base = std::prev(it);  // largest cached power below a; 0 is always present
      MultiPoly pw = base->second;
      for (int i = base->first; i < a; ++i) pw = pw * r;
      it = powers.emplace_hint(it, a, std::move(pw));
    }
    for (const auto& [rev, rc] : it->second.terms_) out.add_term(stripped.plus(rev), c * rc);
  }
  return out;
}

Rational MultiPoly::evaluated(const std::map<Variable, Rational>& assign) const {
  Rational total = 0;
  for (const auto& [ev, c] : terms_) {
    Rational term = c;
    for (const auto& [var, exp] : ev.entries()) {
      auto it = assign.find(var);
      if (it == assign.end())
        throw std::invalid_argument("no value assigned to variable " + var.name());
      Rational base = canonical(it->second);
      Rational pw = 1;
      for (int i = 0; i < exp; ++i) pw *= base;
      term *= pw;
    }
    total += term;
  }
  return total;
}

namespace {

// print order within a term: t-variables ascending, then v, e, f
std::vector<std::pair<Variable, int>> print_order(const ExponentVector& ev) {
  std::vector<std::pair<Variable, int>> ts, vef;
  for (const auto& ent : ev.entries())
    (ent.first.is_t() ? ts : vef).push_back(ent);
  ts.insert(ts.end(), vef.begin(), vef.end());
  return ts;
}

}  // namespace

std::string MultiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ev, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    bool coeff_shown = (c != 1) || ev.empty();
    if (coeff_shown) out += rational_to_string(c);
    bool need_star = coeff_shown;
    for (const auto& [var, exp] : print_order(ev)) {
      if (need_star) out += "*";
      need_star = true;
      out += var.name();
      if (exp != 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

MultiPoly MultiPoly::from_text(const std::string& text) {
  MultiPoly out;
  if (text.empty()) throw ParseError("empty polynomial", 0);
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(" + ", pos);
    std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (term.empty()) throw ParseError("empty term", pos);

    std::vector<std::pair<Variable, int>> exps;
    Rational coeff = 1;
    bool have_coeff = false;
    std::size_t tpos = 0;
    bool first_factor = true;
    while (tpos <= term.size()) {
      std::size_t star = term.find('*', tpos);
      std::string factor = term.substr(tpos, star == std::string::npos ? star : star - tpos);
      std::size_t fpos = pos + tpos;
      if (factor.empty()) throw ParseError("empty factor", fpos);
      char c0 = factor[0];
      if (c0 == '-' || c0 == '+' || (c0 >= '0' && c0 <= '9')) {
        if (!first_factor) throw ParseError("numeric factor must lead the term", fpos);
        try {
          coeff = rational_from_string(factor);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), fpos);
        }
        have_coeff = true;
      } else {
        std::string varname = factor;
        int exp = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
          varname = factor.substr(0, caret);
          std::string expstr = factor.substr(caret + 1);
          if (expstr.empty()) throw ParseError("missing exponent", fpos + caret);
          exp = 0;
          for (char ch : expstr) {
            if (ch < '0' || ch > '9') throw ParseError("malformed exponent '" + expstr + "'", fpos + caret);
            exp = exp * 10 + (ch - '0');
            if (exp > 1000000) throw ParseError("exponent too large", fpos + caret);
          }
        }
        auto var = Variable::parse(varname);
        if (!var) throw ParseError("unknown variable '" + varname + "'", fpos);
        exps.emplace_back(*var, exp);
      }
      first_factor = false;
      if (star == std::string::npos) break;
      tpos = star + 1;
    }
    if (exps.empty() && !have_coeff) throw ParseError("term has no coefficient or variables", pos);
    ExponentVector ev;
    try {
      ev = ExponentVector(exps);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), pos);
    }
    out.add_term(ev, coeff);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

std::string MultiPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [ev, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [var, exp] : print_order(ev)) exps[var.name()] = exp;
    arr.push_back({{"coeff", rational_to_string(c)}, {"exps", exps}});
  }
  return arr.dump();
}

MultiPoly MultiPoly::from_json(const std::string& json_text) {
  nlohmann::json arr = nlohmann::json::parse(json_text);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be a list");
  MultiPoly out;
  for (const auto& item : arr) {
    Rational c = rational_from_string(item.at("coeff").get<std::string>());
    std::vector<std::pair<Variable, int>> exps;
    if (item.contains("exps")) {
      for (const auto& [key, val] : item.at("exps").items()) {
        auto var = Variable::parse(key);
        if (!var) throw std::invalid_argument("unknown variable '" + key + "'");
        exps.emplace_back(*var, val.get<int>());
      }
    }
    out.add_term(ExponentVector(exps), c);
  }
  return out;
}

MultiPoly eval_poly_at_series(const std::vector<std::pair<int, MultiPoly>>& coeffs,
                              const MultiPoly& arg,
                              const std::optional<std::pair<Variable, int>>& trunc) {
  std::map<int, const MultiPoly*> by_degree;
  for (const auto& [deg, c] : coeffs) {
    if (deg < 0) throw std::invalid_argument("negative degree in coefficient list");
    if (!by_degree.emplace(deg, &c).second)
      throw std::invalid_argument("duplicate degree " + std::to_string(deg) + " in coefficient list");
  }
  auto reduce = [&](MultiPoly p) {
    return trunc ? p.truncated(trunc->first, trunc->second) : std::move(p);
  };
  if (by_degree.empty()) return MultiPoly::zero();
  int top = by_degree.rbegin()->first;
  MultiPoly acc = reduce(*by_degree.rbegin()->second);
  for (int d = top - 1; d >= 0; --d) {
    acc = reduce(acc * arg);
    auto it = by_degree.find(d);
    if (it != by_degree.end()) acc = acc + *it->second;
  }
  return reduce(std::move(acc));
}

}  // namespace hypercat
