#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "effdiag/presentation.hpp"
#include "effdiag/term.hpp"

namespace effdiag {

/// Named closed terms substituted for free identifiers at parse time.
class Prelude {
 public:
  Prelude() = default;

  /// Built-in definitions: Z, OMEGA, id, zero, one, two, three, succ.
  static Prelude standard();
  /// Parse `name = term` lines; `#` starts a comment. Later definitions may
  /// refer to earlier ones.
  static Prelude fromSource(std::string_view source);
  static Prelude fromFile(const std::string& path);

  /// Throws OpenTermError unless `term` is closed.
  void define(const std::string& name, TermPtr term);
  const TermPtr* find(const std::string& name) const;
  const std::map<std::string, TermPtr>& definitions() const { return defs_; }

 private:
  std::map<std::string, TermPtr> defs_;
};

/// Source text of Prelude::standard().
std::string_view standardPreludeSource();

/// Grammar:
///   term  ::= lam (';' term)?              e ; f  is  (\_. f) e
///   lam   ::= '\' ident+ '.' term | app
///   app   ::= atom+ [lam]                  left-associative
///   atom  ::= ident | '(' term ')' | op
///   op    ::= raise[e] | union(t,t) | choice(t,t) | read[l](t,t)
///           | write[l,b](t) | print[c](t)
/// Identifiers that are not bound locally are looked up in the prelude.
TermPtr parse(std::string_view source, const Prelude& prelude = {});

/// Capture-avoiding e[v/x]. Bound variables that would capture a free
/// variable of v are renamed to a fresh primed name.
TermPtr substitute(const TermPtr& e, const std::string& x, const TermPtr& v);

struct Fuel {
  std::size_t depth = 0;
};

struct EvalOptions {
  /// When false, free variables are inert constants (values that cannot be
  /// applied). When true, evaluating an open term throws OpenTermError.
  bool requireClosed = false;
};

/// The fuel-th approximant of the least map ⟦−⟧: Λ → T(V).
///
/// Values evaluate to η(v). An application evaluates the function, then the
/// argument, then performs a β-step that costs one unit of fuel; with no fuel
/// left the β-step yields ⊥. Operation nodes apply the monad operation to the
/// results of their arguments, evaluated left to right. The result is monotone
/// in fuel. Throws SignatureError when an operation does not belong to the
/// monad, EvalError on a stuck application.
MonadValue eval(const TermPtr& e, const KindRef& kind, Fuel fuel, const EvalOptions& options = {});

/// decompose(eval(e)).
Presentation evalDiagram(const TermPtr& e, const KindRef& kind, Fuel fuel, const EvalOptions& options = {});

/// ⟦ξ⟧ᵀ: evaluate every term of the row and compose with ξ's effect.
/// Every row element must be a term carrier.
Presentation evalMonadicTerm(const Presentation& xi, const KindRef& kind, Fuel fuel,
                             const EvalOptions& options = {});

}  // namespace effdiag
