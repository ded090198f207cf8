#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hypercat/hypercatalan.hpp"

namespace hypercat {

// A rooted plane tree encoding a roofed subdivided polygon. The default
// value is the null subdigon (a bare roof edge); an interior node of arity
// k >= 2 is a central (k+1)-gon with its k children attached, in order,
// to the non-roof sides counter-clockwise from the left of the roof.
// Immutable; copies share structure.
class Subdigon {
 public:
  Subdigon() = default;  // null subdigon

  static Subdigon null() { return Subdigon(); }
  // merges k subdigons onto a central (k+1)-gon; throws on k < 2 or a
  // child count different from k
  static Subdigon nabla(int k, std::vector<Subdigon> children);

  bool is_null() const { return node_ == nullptr; }
  // arity k and children of the unique decomposition; throws
  // std::invalid_argument on the null subdigon (it has no central polygon)
  int arity() const;
  const std::vector<Subdigon>& children() const;
  std::pair<int, std::vector<Subdigon>> decompose() const;

  // m_k = number of nodes of arity k in the tree
  TypeVector type_of() const;

  // grammar: SUBDIGON := "|" | "(" ARITY ";" SUBDIGON ("," SUBDIGON)* ")"
  std::string to_text() const;
  static Subdigon from_text(const std::string& text);  // throws ParseError

  // JSON: null, or {"k": int, "children": [...]}
  std::string to_json() const;
  static Subdigon from_json(const std::string& json_text);

  bool operator==(const Subdigon& other) const;

 private:
  struct Node {
    int k;
    std::vector<Subdigon> children;
  };
  explicit Subdigon(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;  // nullptr = null subdigon
};

// All subdigons of type exactly m, each exactly once, in a deterministic
// order; the count equals hyper_catalan(m).
std::vector<Subdigon> enumerate_subdigons(const TypeVector& m);

// Concatenation of enumerate_subdigons(m) over enumerate_types(trunc).
std::vector<Subdigon> enumerate_by_level(const TruncationSpec& trunc);

}  // namespace hypercat
