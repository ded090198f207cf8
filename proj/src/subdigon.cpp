#include "hypercat/subdigon.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"

namespace hypercat {

Subdigon Subdigon::nabla(int k, std::vector<Subdigon> children) {
  if (k < 2) throw std::invalid_argument("nabla arity must be >= 2, got " + std::to_string(k));
  if (static_cast<int>(children.size()) != k)
    throw std::invalid_argument("nabla_" + std::to_string(k) + " needs exactly " +
                                std::to_string(k) + " children, got " +
                                std::to_string(children.size()));
  return Subdigon(std::make_shared<const Node>(Node{k, std::move(children)}));
}

int Subdigon::arity() const {
  if (!node_) throw std::invalid_argument("null subdigon has no central polygon");
  return node_->k;
}

const std::vector<Subdigon>& Subdigon::children() const {
  if (!node_) throw std::invalid_argument("null subdigon has no central polygon");
  return node_->children;
}

std::pair<int, std::vector<Subdigon>> Subdigon::decompose() const {
  if (!node_) throw std::invalid_argument("null subdigon has no central polygon");
  return {node_->k, node_->children};
}

TypeVector Subdigon::type_of() const {
  if (!node_) return TypeVector::null();
  TypeVector m = TypeVector::single(node_->k);
  for (const auto& child : node_->children) m = m.plus(child.type_of());
  return m;
}

std::string Subdigon::to_text() const {
  if (!node_) return "|";
  std::string out = "(" + std::to_string(node_->k) + ";";
  bool first = true;
  for (const auto& child : node_->children) {
    if (!first) out += ",";
    first = false;
    out += child.to_text();
  }
  return out + ")";
}

namespace {

Subdigon parse_subdigon(const std::string& text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
  if (text[pos] == '|') {
    ++pos;
    return Subdigon::null();
  }
  if (text[pos] != '(') throw ParseError("expected '|' or '('", pos);
  ++pos;
  std::size_t kstart = pos;
  long long k = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    k = k * 10 + (text[pos] - '0');
    if (k > 1000000) throw ParseError("arity too large", kstart);
    ++pos;
  }
  if (pos == kstart) throw ParseError("expected arity", pos);
  if (k < 2) throw ParseError("arity must be >= 2", kstart);
  if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';'", pos);
  ++pos;
  std::vector<Subdigon> children;
  children.push_back(parse_subdigon(text, pos));
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    children.push_back(parse_subdigon(text, pos));
  }
  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ',' or ')'", pos);
  ++pos;
  if (static_cast<long long>(children.size()) != k)
    throw ParseError("arity " + std::to_string(k) + " does not match " +
                         std::to_string(children.size()) + " children",
                     kstart);
  return Subdigon::nabla(static_cast<int>(k), std::move(children));
}

}  // namespace

Subdigon Subdigon::from_text(const std::string& text) {
  std::size_t pos = 0;
  Subdigon s = parse_subdigon(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return s;
}

std::string Subdigon::to_json() const {
  std::function<nlohmann::json(const Subdigon&)> conv = [&](const Subdigon& s) -> nlohmann::json {
    if (s.is_null()) return nullptr;
    nlohmann::json children = nlohmann::json::array();
    for (const auto& child : s.children()) children.push_back(conv(child));
    return {{"k", s.arity()}, {"children", children}};
  };
  return conv(*this).dump();
}

Subdigon Subdigon::from_json(const std::string& json_text) {
  std::function<Subdigon(const nlohmann::json&)> conv = [&](const nlohmann::json& j) -> Subdigon {
    if (j.is_null()) return Subdigon::null();
    int k = j.at("k").get<int>();
    std::vector<Subdigon> children;
    for (const auto& cj : j.at("children")) children.push_back(conv(cj));
    return nabla(k, std::move(children));
  };
  return conv(nlohmann::json::parse(json_text));
}

bool Subdigon::operator==(const Subdigon& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->k != other.node_->k) return false;
  for (int i = 0; i < node_->k; ++i)
    if (!(node_->children[static_cast<std::size_t>(i)] ==
          other.node_->children[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

namespace {

using CountsKey = std::vector<std::pair<int, int>>;

struct Enumerator {
  std::map<CountsKey, std::vector<Subdigon>> memo;

  const std::vector<Subdigon>& of_type(const TypeVector& m) {
    CountsKey key = m.entries();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<Subdigon> out;
    if (m.is_null()) {
      out.push_back(Subdigon::null());
    } else {
      for (const auto& [root_k, mk] : m.entries()) {
        TypeVector budget = m.plus(root_k, -1);
        std::vector<std::vector<TypeVector>> splits;
        std::vector<TypeVector> parts(static_cast<std::size_t>(root_k));
        split_budget(budget, 0, root_k, parts, splits);
        for (const auto& split : splits) {
          std::vector<Subdigon> combo(static_cast<std::size_t>(root_k));
          build_combos(root_k, split, 0, combo, out);
        }
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }

  // distributes each m_k of budget across `arity` ordered children; every
  // distinct distribution yields subdigons with distinct child type lists
  void split_budget(const TypeVector& budget, std::size_t entry, int arity,
                    std::vector<TypeVector>& parts, std::vector<std::vector<TypeVector>>& out) {
    if (entry == budget.entries().size()) {
      out.push_back(parts);
      return;
    }
    auto [k, total] = budget.entries()[entry];
    distribute(k, total, 0, arity, budget, entry, parts, out);
  }

  void distribute(int k, int remaining, int child, int arity, const TypeVector& budget,
                  std::size_t entry, std::vector<TypeVector>& parts,
                  std::vector<std::vector<TypeVector>>& out) {
    if (child == arity - 1) {
      auto saved = parts[static_cast<std::size_t>(child)];
      parts[static_cast<std::size_t>(child)] = saved.plus(k, remaining);
      split_budget(budget, entry + 1, arity, parts, out);
      parts[static_cast<std::size_t>(child)] = saved;
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      auto saved = parts[static_cast<std::size_t>(child)];
      if (take > 0) parts[static_cast<std::size_t>(child)] = saved.plus(k, take);
      distribute(k, remaining - take, child + 1, arity, budget, entry, parts, out);
      parts[static_cast<std::size_t>(child)] = saved;
    }
  }

  void build_combos(int arity, const std::vector<TypeVector>& split, std::size_t child,
                    std::vector<Subdigon>& combo, std::vector<Subdigon>& out) {
    if (child == split.size()) {
      out.push_back(Subdigon::nabla(arity, combo));
      return;
    }
    for (const auto& sub : of_type(split[child])) {
      combo[child] = sub;
      build_combos(arity, split, child + 1, combo, out);
    }
  }
};

}  // namespace

std::vector<Subdigon> enumerate_subdigons(const TypeVector& m) {
  Enumerator en;
  return en.of_type(m);
}

std::vector<Subdigon> enumerate_by_level(const TruncationSpec& trunc) {
  std::vector<Subdigon> out;
  Enumerator en;
  for (const auto& m : enumerate_types(trunc)) {
    const auto& batch = en.of_type(m);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace hypercat
