#include "effdiag/lambda.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "effdiag/effects.hpp"
#include "effdiag/error.hpp"

namespace effdiag {

namespace {

constexpr std::string_view kStandardPrelude = R"(# Call-by-value fixpoint combinator.
Z = \f. (\x. f (\v. x x v)) (\x. f (\v. x x v))
OMEGA = (\x. x x) (\x. x x)
id = \x. x
# Church numerals.
zero = \f. \x. x
one = \f. \x. f x
two = \f. \x. f (f x)
three = \f. \x. f (f (f x))
succ = \n. \f. \x. f (n f x)
)";

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string freshName(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base + "'";
  while (avoid.count(name)) name += "'";
  return name;
}

class Parser {
 public:
  Parser(std::string_view src, const Prelude& prelude) : src_(src), prelude_(prelude) {}

  TermPtr parseProgram() {
    TermPtr t = parseTerm();
    skipSpace();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, at, line, column);
  }

  void skipSpace() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      } else if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool atLambda() {
    skipSpace();
    if (pos_ < src_.size() && src_[pos_] == '\\') return true;
    return src_.substr(pos_, 2) == "\xCE\xBB";  // λ
  }

  void consumeLambda() { pos_ += src_[pos_] == '\\' ? 1 : 2; }

  bool peek(char c) {
    skipSpace();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < src_.size() ? ", found '" + std::string(1, src_[pos_]) + "'" : ", found end of input"));
    }
    ++pos_;
  }

  std::string identifier() {
    skipSpace();
    if (pos_ >= src_.size() || !isIdentStart(src_[pos_])) fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < src_.size() && isIdentChar(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string word() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < src_.size() && isIdentChar(src_[pos_])) ++pos_;
    if (start == pos_) fail("expected an operation index");
    return std::string(src_.substr(start, pos_ - start));
  }

  bool atAtomStart() {
    skipSpace();
    return pos_ < src_.size() && (src_[pos_] == '(' || isIdentStart(src_[pos_]));
  }

  TermPtr parseTerm() {
    TermPtr lhs = parseLambda();
    if (peek(';')) {
      ++pos_;
      TermPtr rhs = parseTerm();
      auto fv = freeVariables(*rhs);
      std::string binder = fv.count("_") ? freshName("_", fv) : "_";
      return Term::app(Term::abs(binder, rhs), lhs);
    }
    return lhs;
  }

  TermPtr parseLambda() {
    if (!atLambda()) return parseApp();
    consumeLambda();
    std::vector<std::string> binders;
    binders.push_back(binder());
    while (!peek('.')) {
      if (pos_ >= src_.size()) fail("expected '.' after lambda binders");
      binders.push_back(binder());
    }
    ++pos_;
    for (const auto& b : binders) scope_.push_back(b);
    TermPtr body = parseTerm();
    scope_.resize(scope_.size() - binders.size());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::abs(*it, body);
    return body;
  }

  std::string binder() {
    skipSpace();
    const std::size_t start = pos_;
    std::string name = identifier();
    if (parseOpKeyword(name)) fail("'" + name + "' is an operation and cannot be bound", start);
    return name;
  }

  TermPtr parseApp() {
    skipSpace();
    if (!atAtomStart()) {
      fail(pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'" : "unexpected end of input");
    }
    TermPtr t = parseAtom();
    while (true) {
      if (atAtomStart()) {
        t = Term::app(t, parseAtom());
      } else if (atLambda()) {
        t = Term::app(t, parseLambda());
        break;
      } else {
        break;
      }
    }
    return t;
  }

  TermPtr parseAtom() {
    if (peek('(')) {
      ++pos_;
      TermPtr t = parseTerm();
      expect(')');
      return t;
    }
    const std::size_t start = pos_;
    std::string name = identifier();
    if (auto op = parseOpKeyword(name)) return parseOp(*op, start);
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (*it == name) return Term::var(name);
    }
    if (const TermPtr* def = prelude_.find(name)) return *def;
    return Term::var(name);
  }

  std::vector<TermPtr> arguments(std::size_t count, const std::string& opName) {
    std::vector<TermPtr> args;
    if (count == 0) {
      if (peek('(')) {
        ++pos_;
        expect(')');
      }
      return args;
    }
    expect('(');
    for (std::size_t i = 0; i < count; ++i) {
      if (i) {
        if (peek(')')) fail(opName + " expects " + std::to_string(count) + " argument(s)");
        expect(',');
      }
      args.push_back(parseTerm());
    }
    if (peek(',')) fail(opName + " expects " + std::to_string(count) + " argument(s)");
    expect(')');
    return args;
  }

  TermPtr parseOp(OpName name, std::size_t start) {
    OpDescriptor desc{name, {}, false};
    const bool indexed = name != OpName::Union && name != OpName::Choice;
    if (indexed) {
      if (!peek('[')) fail(std::string(opKeyword(name)) + " needs an index, e.g. " + std::string(opKeyword(name)) + "[...]");
      ++pos_;
      desc.label = word();
      if (name == OpName::Write) {
        expect(',');
        const std::size_t bitAt = pos_;
        std::string bit = word();
        if (bit != "0" && bit != "1") fail("write bit must be 0 or 1", bitAt);
        desc.bit = bit == "1";
      }
      if (name == OpName::Print && desc.label.size() != 1) fail("print index must be a single character", start);
      expect(']');
    } else if (peek('[')) {
      fail(std::string(opKeyword(name)) + " takes no index");
    }
    auto args = arguments(desc.arity(), desc.spelling());
    return Term::op(desc, std::move(args));
  }

  std::string_view src_;
  const Prelude& prelude_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool occursFree(const Term& t, const std::string& x) {
  if (const auto* v = t.as<Var>()) return v->name == x;
  if (const auto* a = t.as<Abs>()) return a->param != x && occursFree(*a->body, x);
  if (const auto* ap = t.as<App>()) return occursFree(*ap->fn, x) || occursFree(*ap->arg, x);
  for (const auto& arg : t.as<Op>()->args) {
    if (occursFree(*arg, x)) return true;
  }
  return false;
}

TermPtr substituteImpl(const TermPtr& e, const std::string& x, const TermPtr& v, const std::set<std::string>& fvV) {
  if (const auto* var = e->as<Var>()) return var->name == x ? v : e;
  if (const auto* a = e->as<Abs>()) {
    if (a->param == x || !occursFree(*a->body, x)) return e;
    std::string param = a->param;
    TermPtr body = a->body;
    if (fvV.count(param)) {
      std::set<std::string> avoid = fvV;
      auto fvBody = freeVariables(*body);
      avoid.insert(fvBody.begin(), fvBody.end());
      avoid.insert(x);
      std::string renamed = freshName(param, avoid);
      body = substituteImpl(body, param, Term::var(renamed), {renamed});
      param = renamed;
    }
    TermPtr newBody = substituteImpl(body, x, v, fvV);
    return Term::abs(param, newBody);
  }
  if (const auto* ap = e->as<App>()) {
    TermPtr fn = substituteImpl(ap->fn, x, v, fvV);
    TermPtr arg = substituteImpl(ap->arg, x, v, fvV);
    if (fn == ap->fn && arg == ap->arg) return e;
    return Term::app(fn, arg);
  }
  const auto* op = e->as<Op>();
  std::vector<TermPtr> args;
  bool changed = false;
  for (const auto& arg : op->args) {
    args.push_back(substituteImpl(arg, x, v, fvV));
    changed = changed || args.back() != arg;
  }
  return changed ? Term::op(op->desc, std::move(args)) : e;
}

void checkSignature(const Term& t, const MonadKind& kind) {
  if (const auto* a = t.as<Abs>()) {
    checkSignature(*a->body, kind);
  } else if (const auto* ap = t.as<App>()) {
    checkSignature(*ap->fn, kind);
    checkSignature(*ap->arg, kind);
  } else if (const auto* op = t.as<Op>()) {
    checkInSignature(kind, op->desc);
    for (const auto& arg : op->args) checkSignature(*arg, kind);
  }
}

class Evaluator {
 public:
  explicit Evaluator(KindRef kind) : kind_(std::move(kind)) {}

  MonadValue run(const TermPtr& e, std::size_t fuel) const {
    if (e->isValue()) return unit(kind_, Carrier::term(e));
    if (const auto* ap = e->as<App>()) {
      MonadValue fn = run(ap->fn, fuel);
      MonadValue arg = run(ap->arg, fuel);
      return effdiag::bind(fn, [&](const Carrier& v) {
        return effdiag::bind(arg, [&](const Carrier& w) { return beta(v, w, fuel); });
      });
    }
    const auto* op = e->as<Op>();
    std::vector<MonadValue> args;
    args.reserve(op->args.size());
    for (const auto& arg : op->args) args.push_back(run(arg, fuel));
    return opApply(kind_, op->desc, args);
  }

 private:
  MonadValue beta(const Carrier& fn, const Carrier& arg, std::size_t fuel) const {
    const auto* abs = fn.term()->as<Abs>();
    if (!abs) throw EvalError("cannot apply the constant '" + fn.display() + "' to " + arg.display());
    if (fuel == 0) return bottom(kind_);
    return run(substitute(abs->body, abs->param, arg.term()), fuel - 1);
  }

  KindRef kind_;
};

}  // namespace

Prelude Prelude::standard() { return fromSource(kStandardPrelude); }

std::string_view standardPreludeSource() { return kStandardPrelude; }

Prelude Prelude::fromSource(std::string_view source) {
  Prelude prelude;
  std::size_t lineStart = 0;
  std::size_t lineNo = 0;
  while (lineStart <= source.size()) {
    std::size_t lineEnd = source.find('\n', lineStart);
    if (lineEnd == std::string_view::npos) lineEnd = source.size();
    ++lineNo;
    std::string_view line = source.substr(lineStart, lineEnd - lineStart);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string text = trim(line);
    if (!text.empty()) {
      auto eq = text.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'name = term'", lineStart, lineNo, 1);
      std::string name = trim(std::string_view(text).substr(0, eq));
      if (name.empty() || !isIdentStart(name[0])) throw ParseError("bad definition name", lineStart, lineNo, 1);
      for (char c : name) {
        if (!isIdentChar(c)) throw ParseError("bad definition name '" + name + "'", lineStart, lineNo, 1);
      }
      TermPtr term;
      try {
        term = parse(std::string_view(text).substr(eq + 1), prelude);
      } catch (const ParseError& e) {
        throw ParseError("in definition of " + name + ": " + e.what(), lineStart + e.offset(), lineNo, e.column());
      }
      prelude.define(name, term);
    }
    lineStart = lineEnd + 1;
  }
  return prelude;
}

Prelude Prelude::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open prelude file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return fromSource(buf.str());
}

void Prelude::define(const std::string& name, TermPtr term) {
  if (!isClosed(*term)) throw OpenTermError("prelude definition '" + name + "' is not closed");
  defs_[name] = std::move(term);
}

const TermPtr* Prelude::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

TermPtr parse(std::string_view source, const Prelude& prelude) { return Parser(source, prelude).parseProgram(); }

TermPtr substitute(const TermPtr& e, const std::string& x, const TermPtr& v) {
  return substituteImpl(e, x, v, freeVariables(*v));
}

MonadValue eval(const TermPtr& e, const KindRef& kind, Fuel fuel, const EvalOptions& options) {
  if (options.requireClosed && !isClosed(*e)) {
    std::string names;
    for (const auto& n : freeVariables(*e)) names += (names.empty() ? "" : ", ") + n;
    throw OpenTermError("program has free variables: " + names);
  }
  checkSignature(*e, *kind);
  return Evaluator(kind).run(e, fuel.depth);
}

Presentation evalDiagram(const TermPtr& e, const KindRef& kind, Fuel fuel, const EvalOptions& options) {
  return decompose(eval(e, kind, fuel, options));
}

}  // namespace effdiag

namespace effdiag {

Presentation evalMonadicTerm(const Presentation& xi, const KindRef& kind, Fuel fuel, const EvalOptions& options) {
  if (!sameKind(xi.kind(), kind)) {
    throw KindMismatch("diagram over " + xi.kind()->describe() + " evaluated in " + kind->describe());
  }
  std::vector<Presentation> family;
  family.reserve(xi.row().size());
  for (const auto& x : xi.row()) {
    if (x.isIndex()) throw InvalidValue("row element " + x.display() + " is not a term");
    family.push_back(evalDiagram(x.term(), kind, fuel, options));
  }
  return seqCompose(xi, family);
}

}  // namespace effdiag
