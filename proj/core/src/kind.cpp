#include "effdiag/kind.hpp"

#include <algorithm>
#include <set>

#include "effdiag/error.hpp"

namespace effdiag {

namespace {

template <typename Seq>
void requireDistinct(const Seq& items, const char* what) {
  std::set<typename Seq::value_type> seen(items.begin(), items.end());
  if (seen.size() != items.size()) {
    throw InvalidValue(std::string("duplicate ") + what);
  }
}

}  // namespace

std::string_view tagName(MonadTag tag) {
  switch (tag) {
    case MonadTag::Maybe: return "maybe";
    case MonadTag::Exception: return "exception";
    case MonadTag::Powerset: return "powerset";
    case MonadTag::Subdistribution: return "dist";
    case MonadTag::GlobalState: return "state";
    case MonadTag::Output: return "output";
  }
  return "?";
}

std::optional<MonadTag> parseTag(std::string_view name) {
  if (name == "maybe") return MonadTag::Maybe;
  if (name == "exception" || name == "exc") return MonadTag::Exception;
  if (name == "powerset" || name == "set") return MonadTag::Powerset;
  if (name == "dist" || name == "subdistribution") return MonadTag::Subdistribution;
  if (name == "state" || name == "globalstate") return MonadTag::GlobalState;
  if (name == "output") return MonadTag::Output;
  return std::nullopt;
}

KindRef MonadKind::maybe() {
  static const KindRef k = [] {
    auto* m = new MonadKind;
    m->tag_ = MonadTag::Maybe;
    return KindRef(m);
  }();
  return k;
}

KindRef MonadKind::exception(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidValue("exception monad needs at least one label");
  requireDistinct(labels, "exception label");
  auto* m = new MonadKind;
  m->tag_ = MonadTag::Exception;
  m->exceptions_ = std::move(labels);
  return KindRef(m);
}

KindRef MonadKind::powerset() {
  static const KindRef k = [] {
    auto* m = new MonadKind;
    m->tag_ = MonadTag::Powerset;
    return KindRef(m);
  }();
  return k;
}

KindRef MonadKind::subdistribution() {
  static const KindRef k = [] {
    auto* m = new MonadKind;
    m->tag_ = MonadTag::Subdistribution;
    return KindRef(m);
  }();
  return k;
}

KindRef MonadKind::globalState(std::vector<std::string> locations, std::size_t locationCap) {
  if (locations.empty()) throw InvalidValue("global state monad needs at least one location");
  if (locations.size() > locationCap || locations.size() > 16) {
    throw InvalidValue("too many locations: " + std::to_string(locations.size()) + " (cap " +
                       std::to_string(locationCap) + ")");
  }
  requireDistinct(locations, "location");
  auto* m = new MonadKind;
  m->tag_ = MonadTag::GlobalState;
  m->locations_ = std::move(locations);
  return KindRef(m);
}

KindRef MonadKind::output(std::string alphabet) {
  if (alphabet.empty()) throw InvalidValue("output monad needs a non-empty alphabet");
  requireDistinct(alphabet, "alphabet character");
  auto* m = new MonadKind;
  m->tag_ = MonadTag::Output;
  m->alphabet_ = std::move(alphabet);
  return KindRef(m);
}

std::optional<std::size_t> MonadKind::locationIndex(std::string_view name) const {
  auto it = std::find(locations_.begin(), locations_.end(), name);
  if (it == locations_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - locations_.begin());
}

bool MonadKind::hasException(std::string_view label) const {
  return std::find(exceptions_.begin(), exceptions_.end(), label) != exceptions_.end();
}

std::string MonadKind::describe() const {
  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += xs[i];
    }
    return out;
  };
  std::string name(tagName(tag_));
  switch (tag_) {
    case MonadTag::Exception: return name + "{" + join(exceptions_) + "}";
    case MonadTag::GlobalState: return name + "{" + join(locations_) + "}";
    case MonadTag::Output: return name + "{" + alphabet_ + "}";
    default: return name;
  }
}

bool sameKind(const KindRef& a, const KindRef& b) { return a == b || (a && b && *a == *b); }

std::size_t OpDescriptor::arity() const {
  switch (name) {
    case OpName::Raise: return 0;
    case OpName::Union:
    case OpName::Choice:
    case OpName::Read: return 2;
    case OpName::Write:
    case OpName::Print: return 1;
  }
  return 0;
}

MonadTag OpDescriptor::monad() const {
  switch (name) {
    case OpName::Raise: return MonadTag::Exception;
    case OpName::Union: return MonadTag::Powerset;
    case OpName::Choice: return MonadTag::Subdistribution;
    case OpName::Read:
    case OpName::Write: return MonadTag::GlobalState;
    case OpName::Print: return MonadTag::Output;
  }
  return MonadTag::Maybe;
}

std::string OpDescriptor::spelling() const {
  std::string out(opKeyword(name));
  switch (name) {
    case OpName::Union:
    case OpName::Choice: break;
    case OpName::Write: out += "[" + label + "," + (bit ? "1" : "0") + "]"; break;
    default: out += "[" + label + "]"; break;
  }
  return out;
}

std::string_view opKeyword(OpName name) {
  switch (name) {
    case OpName::Raise: return "raise";
    case OpName::Union: return "union";
    case OpName::Choice: return "choice";
    case OpName::Read: return "read";
    case OpName::Write: return "write";
    case OpName::Print: return "print";
  }
  return "?";
}

std::optional<OpName> parseOpKeyword(std::string_view word) {
  for (OpName n : {OpName::Raise, OpName::Union, OpName::Choice, OpName::Read, OpName::Write, OpName::Print}) {
    if (opKeyword(n) == word) return n;
  }
  return std::nullopt;
}

std::vector<OpDescriptor> signature(const MonadKind& kind) {
  std::vector<OpDescriptor> ops;
  switch (kind.tag()) {
    case MonadTag::Maybe: break;
    case MonadTag::Exception:
      for (const auto& e : kind.exceptions()) ops.push_back(OpDescriptor::raise(e));
      break;
    case MonadTag::Powerset: ops.push_back(OpDescriptor::unionOp()); break;
    case MonadTag::Subdistribution: ops.push_back(OpDescriptor::choice()); break;
    case MonadTag::GlobalState:
      for (const auto& l : kind.locations()) {
        ops.push_back(OpDescriptor::read(l));
        ops.push_back(OpDescriptor::write(l, false));
        ops.push_back(OpDescriptor::write(l, true));
      }
      break;
    case MonadTag::Output:
      for (char c : kind.alphabet()) ops.push_back(OpDescriptor::print(c));
      break;
  }
  return ops;
}

void checkInSignature(const MonadKind& kind, const OpDescriptor& op) {
  if (op.monad() != kind.tag()) {
    throw SignatureError("operation " + op.spelling() + " is not available in the " + kind.describe() + " monad");
  }
  switch (op.name) {
    case OpName::Raise:
      if (!kind.hasException(op.label)) throw SignatureError("unknown exception label '" + op.label + "'");
      break;
    case OpName::Read:
    case OpName::Write:
      if (!kind.locationIndex(op.label)) throw SignatureError("unknown location '" + op.label + "'");
      break;
    case OpName::Print:
      if (op.label.size() != 1 || !kind.inAlphabet(op.label[0])) {
        throw SignatureError("character '" + op.label + "' is not in the alphabet");
      }
      break;
    default: break;
  }
}

}  // namespace effdiag
