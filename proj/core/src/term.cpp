#include "effdiag/term.hpp"

#include "effdiag/error.hpp"

namespace effdiag {

TermPtr Term::var(std::string name) { return TermPtr(new Term(Var{std::move(name)})); }

TermPtr Term::abs(std::string param, TermPtr body) { return TermPtr(new Term(Abs{std::move(param), std::move(body)})); }

TermPtr Term::app(TermPtr fn, TermPtr arg) { return TermPtr(new Term(App{std::move(fn), std::move(arg)})); }

TermPtr Term::op(OpDescriptor desc, std::vector<TermPtr> args) {
  if (args.size() != desc.arity()) {
    throw ArityError(desc.spelling() + " expects " + std::to_string(desc.arity()) + " argument(s), got " +
                     std::to_string(args.size()));
  }
  return TermPtr(new Term(Op{std::move(desc), std::move(args)}));
}

namespace {

void collectFree(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (const auto* v = t.as<Var>()) {
    for (const auto& b : bound) {
      if (b == v->name) return;
    }
    out.insert(v->name);
  } else if (const auto* a = t.as<Abs>()) {
    bound.push_back(a->param);
    collectFree(*a->body, bound, out);
    bound.pop_back();
  } else if (const auto* ap = t.as<App>()) {
    collectFree(*ap->fn, bound, out);
    collectFree(*ap->arg, bound, out);
  } else if (const auto* o = t.as<Op>()) {
    for (const auto& arg : o->args) collectFree(*arg, bound, out);
  }
}

enum class Position { Top, Function, Argument };

void printTo(const Term& t, Position pos, std::string& out) {
  if (const auto* v = t.as<Var>()) {
    out += v->name;
  } else if (const auto* a = t.as<Abs>()) {
    bool parens = pos != Position::Top;
    if (parens) out += '(';
    out += '\\';
    out += a->param;
    out += ". ";
    printTo(*a->body, Position::Top, out);
    if (parens) out += ')';
  } else if (const auto* ap = t.as<App>()) {
    bool parens = pos == Position::Argument;
    if (parens) out += '(';
    printTo(*ap->fn, Position::Function, out);
    out += ' ';
    printTo(*ap->arg, Position::Argument, out);
    if (parens) out += ')';
  } else if (const auto* o = t.as<Op>()) {
    out += o->desc.spelling();
    if (o->args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < o->args.size(); ++i) {
      if (i) out += ", ";
      printTo(*o->args[i], Position::Top, out);
    }
    out += ')';
  }
}

void keyTo(const Term& t, std::vector<const std::string*>& binders, std::string& out) {
  if (const auto* v = t.as<Var>()) {
    for (std::size_t d = 0; d < binders.size(); ++d) {
      if (*binders[binders.size() - 1 - d] == v->name) {
        out += '#';
        out += std::to_string(d);
        return;
      }
    }
    out += v->name;
  } else if (const auto* a = t.as<Abs>()) {
    out += "\\.";
    binders.push_back(&a->param);
    keyTo(*a->body, binders, out);
    binders.pop_back();
  } else if (const auto* ap = t.as<App>()) {
    out += '(';
    keyTo(*ap->fn, binders, out);
    out += ' ';
    keyTo(*ap->arg, binders, out);
    out += ')';
  } else if (const auto* o = t.as<Op>()) {
    out += o->desc.spelling();
    out += '(';
    for (std::size_t i = 0; i < o->args.size(); ++i) {
      if (i) out += ',';
      keyTo(*o->args[i], binders, out);
    }
    out += ')';
  }
}

}  // namespace

std::set<std::string> freeVariables(const Term& term) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collectFree(term, bound, out);
  return out;
}

bool isClosed(const Term& term) { return freeVariables(term).empty(); }

std::string print(const Term& term) {
  std::string out;
  printTo(term, Position::Top, out);
  return out;
}

std::string canonicalKey(const Term& term) {
  std::vector<const std::string*> binders;
  std::string out;
  keyTo(term, binders, out);
  return out;
}

bool alphaEqual(const Term& a, const Term& b) { return canonicalKey(a) == canonicalKey(b); }

}  // namespace effdiag
