#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "effdiag/kind.hpp"

namespace effdiag {

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};

struct Abs {
  std::string param;
  TermPtr body;
};

struct App {
  TermPtr fn;
  TermPtr arg;
};

struct Op {
  OpDescriptor desc;
  std::vector<TermPtr> args;
};

/// Immutable λ-term with algebraic operation nodes.
class Term {
 public:
  using Node = std::variant<Var, Abs, App, Op>;

  static TermPtr var(std::string name);
  static TermPtr abs(std::string param, TermPtr body);
  static TermPtr app(TermPtr fn, TermPtr arg);
  /// Throws ArityError when the argument count differs from the descriptor.
  static TermPtr op(OpDescriptor desc, std::vector<TermPtr> args);

  const Node& node() const { return node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  /// Syntactic values are variables and abstractions.
  bool isValue() const { return std::holds_alternative<Var>(node_) || std::holds_alternative<Abs>(node_); }

 private:
  explicit Term(Node node) : node_(std::move(node)) {}

  Node node_;
};

std::set<std::string> freeVariables(const Term& term);
bool isClosed(const Term& term);

/// Concrete syntax accepted by the parser; `\x. e`, left-associative application.
std::string print(const Term& term);

/// Name-independent form: bound variables become de Bruijn indices (`#k`),
/// free variables keep their names. Two terms are α-equivalent iff their
/// keys are equal.
std::string canonicalKey(const Term& term);

bool alphaEqual(const Term& a, const Term& b);

}  // namespace effdiag
