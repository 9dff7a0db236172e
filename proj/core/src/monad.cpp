#include "effdiag/monad.hpp"

#include <algorithm>

#include "effdiag/error.hpp"

namespace effdiag {

namespace {

constexpr std::size_t dataIndexFor(MonadTag tag) {
  switch (tag) {
    case MonadTag::Maybe: return 0;
    case MonadTag::Exception: return 1;
    case MonadTag::Powerset: return 2;
    case MonadTag::Subdistribution: return 3;
    case MonadTag::GlobalState: return 4;
    case MonadTag::Output: return 5;
  }
  return 0;
}

void validate(const MonadKind& kind, const MonadValue::Data& data) {
  if (data.index() != dataIndexFor(kind.tag())) {
    throw InvalidValue("payload does not match the " + kind.describe() + " monad");
  }
  switch (kind.tag()) {
    case MonadTag::Exception: {
      const auto& d = std::get<ExceptionData>(data);
      if (const auto* r = std::get_if<Raised>(&d.result); r && !kind.hasException(r->label)) {
        throw InvalidValue("exception '" + r->label + "' is not declared");
      }
      break;
    }
    case MonadTag::Subdistribution: {
      Rational total = 0;
      for (const auto& [x, p] : std::get<DistData>(data).weights) {
        if (p <= 0) throw InvalidValue("subdistribution weight for " + x.display() + " is not positive");
        total += p;
      }
      if (total > 1) throw InvalidValue("subdistribution mass " + formatRational(total) + " exceeds 1");
      break;
    }
    case MonadTag::GlobalState: {
      const auto& d = std::get<StateData>(data);
      if (d.byStore.size() != kind.storeCount()) {
        throw InvalidValue("state map must be defined on all " + std::to_string(kind.storeCount()) + " stores");
      }
      for (const auto& r : d.byStore) {
        if (r && r->store >= kind.storeCount()) throw InvalidValue("store out of range");
      }
      break;
    }
    case MonadTag::Output:
      for (char c : std::get<OutputData>(data).text) {
        if (!kind.inAlphabet(c)) throw InvalidValue(std::string("character '") + c + "' is not in the alphabet");
      }
      break;
    default: break;
  }
}

MonadValue callChecked(const Kleisli& f, const Carrier& x, const KindRef& kind) {
  MonadValue r = f(x);
  if (!sameKind(r.kind(), kind)) {
    throw KindMismatch("Kleisli map returned a " + r.kind()->describe() + " value inside a " + kind->describe() +
                       " bind");
  }
  return r;
}

}  // namespace

MonadValue::MonadValue(KindRef kind, Data data) : kind_(std::move(kind)), data_(std::move(data)) {
  if (!kind_) throw InvalidValue("monadic value without a kind");
  validate(*kind_, data_);
}

bool operator==(const MonadValue& a, const MonadValue& b) { return sameKind(a.kind_, b.kind_) && a.data_ == b.data_; }

void requireSameKind(const MonadValue& a, const MonadValue& b, const char* what) {
  if (!sameKind(a.kind(), b.kind())) {
    throw KindMismatch(std::string(what) + ": " + a.kind()->describe() + " vs " + b.kind()->describe());
  }
}

MonadValue unit(const KindRef& kind, const Carrier& x) {
  switch (kind->tag()) {
    case MonadTag::Maybe: return MonadValue(kind, MaybeData{x});
    case MonadTag::Exception: return MonadValue(kind, ExceptionData{x});
    case MonadTag::Powerset: return MonadValue(kind, PowersetData{{x}});
    case MonadTag::Subdistribution: return MonadValue(kind, DistData{{{x, Rational(1)}}});
    case MonadTag::GlobalState: {
      StateData d;
      d.byStore.reserve(kind->storeCount());
      for (Store s = 0; s < kind->storeCount(); ++s) d.byStore.push_back(StateResult{x, s});
      return MonadValue(kind, std::move(d));
    }
    case MonadTag::Output: return MonadValue(kind, OutputData{"", x});
  }
  throw InvalidValue("unknown monad");
}

MonadValue bottom(const KindRef& kind) {
  switch (kind->tag()) {
    case MonadTag::Maybe: return MonadValue(kind, MaybeData{});
    case MonadTag::Exception: return MonadValue(kind, ExceptionData{Diverge{}});
    case MonadTag::Powerset: return MonadValue(kind, PowersetData{});
    case MonadTag::Subdistribution: return MonadValue(kind, DistData{});
    case MonadTag::GlobalState:
      return MonadValue(kind, StateData{std::vector<std::optional<StateResult>>(kind->storeCount())});
    case MonadTag::Output: return MonadValue(kind, OutputData{});
  }
  throw InvalidValue("unknown monad");
}

bool isBottom(const MonadValue& mu) { return mu == bottom(mu.kind()); }

MonadValue bind(const MonadValue& mu, const Kleisli& f) {
  const KindRef& kind = mu.kind();
  switch (mu.tag()) {
    case MonadTag::Maybe: {
      const auto& d = mu.as<MaybeData>();
      return d.value ? callChecked(f, *d.value, kind) : mu;
    }
    case MonadTag::Exception: {
      const auto& d = mu.as<ExceptionData>();
      if (const auto* x = std::get_if<Carrier>(&d.result)) return callChecked(f, *x, kind);
      return mu;
    }
    case MonadTag::Powerset: {
      PowersetData out;
      for (const auto& x : mu.as<PowersetData>().elements) {
        MonadValue r = callChecked(f, x, kind);
        const auto& s = r.as<PowersetData>().elements;
        out.elements.insert(s.begin(), s.end());
      }
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::Subdistribution: {
      DistData out;
      for (const auto& [x, p] : mu.as<DistData>().weights) {
        MonadValue r = callChecked(f, x, kind);
        for (const auto& [y, q] : r.as<DistData>().weights) out.weights[y] += p * q;
      }
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::GlobalState: {
      const auto& d = mu.as<StateData>();
      std::map<Carrier, MonadValue> cache;
      StateData out;
      out.byStore.reserve(d.byStore.size());
      for (const auto& r : d.byStore) {
        if (!r) {
          out.byStore.emplace_back();
          continue;
        }
        auto it = cache.find(r->value);
        if (it == cache.end()) it = cache.emplace(r->value, callChecked(f, r->value, kind)).first;
        out.byStore.push_back(it->second.as<StateData>().byStore[r->store]);
      }
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::Output: {
      const auto& d = mu.as<OutputData>();
      if (!d.value) return mu;
      MonadValue r = callChecked(f, *d.value, kind);
      const auto& rd = r.as<OutputData>();
      return MonadValue(kind, OutputData{d.text + rd.text, rd.value});
    }
  }
  throw InvalidValue("unknown monad");
}

MonadValue mapCarrier(const MonadValue& mu, const CarrierMap& g) {
  const KindRef& kind = mu.kind();
  switch (mu.tag()) {
    case MonadTag::Maybe: {
      const auto& d = mu.as<MaybeData>();
      return d.value ? MonadValue(kind, MaybeData{g(*d.value)}) : mu;
    }
    case MonadTag::Exception: {
      const auto& d = mu.as<ExceptionData>();
      if (const auto* x = std::get_if<Carrier>(&d.result)) return MonadValue(kind, ExceptionData{g(*x)});
      return mu;
    }
    case MonadTag::Powerset: {
      PowersetData out;
      for (const auto& x : mu.as<PowersetData>().elements) out.elements.insert(g(x));
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::Subdistribution: {
      DistData out;
      for (const auto& [x, p] : mu.as<DistData>().weights) out.weights[g(x)] += p;
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::GlobalState: {
      StateData out;
      for (const auto& r : mu.as<StateData>().byStore) {
        if (r) {
          out.byStore.push_back(StateResult{g(r->value), r->store});
        } else {
          out.byStore.emplace_back();
        }
      }
      return MonadValue(kind, std::move(out));
    }
    case MonadTag::Output: {
      const auto& d = mu.as<OutputData>();
      if (!d.value) return mu;
      return MonadValue(kind, OutputData{d.text, g(*d.value)});
    }
  }
  throw InvalidValue("unknown monad");
}

MonadValue opApply(const KindRef& kind, const OpDescriptor& op, std::span<const MonadValue> args) {
  checkInSignature(*kind, op);
  if (args.size() != op.arity()) {
    throw ArityError(op.spelling() + " expects " + std::to_string(op.arity()) + " argument(s), got " +
                     std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (!sameKind(a.kind(), kind)) {
      throw KindMismatch(op.spelling() + " applied to a " + a.kind()->describe() + " value");
    }
  }
  switch (op.name) {
    case OpName::Raise: return MonadValue(kind, ExceptionData{Raised{op.label}});
    case OpName::Union: {
      PowersetData out = args[0].as<PowersetData>();
      const auto& rhs = args[1].as<PowersetData>().elements;
      out.elements.insert(rhs.begin(), rhs.end());
      return MonadValue(kind, std::move(out));
    }
    case OpName::Choice: {
      const Rational half(1, 2);
      DistData out;
      for (const auto& [x, p] : args[0].as<DistData>().weights) out.weights[x] += half * p;
      for (const auto& [x, p] : args[1].as<DistData>().weights) out.weights[x] += half * p;
      return MonadValue(kind, std::move(out));
    }
    case OpName::Read: {
      const std::size_t loc = *kind->locationIndex(op.label);
      StateData out;
      for (Store s = 0; s < kind->storeCount(); ++s) {
        const auto& branch = args[(s >> loc) & 1U].as<StateData>();
        out.byStore.push_back(branch.byStore[s]);
      }
      return MonadValue(kind, std::move(out));
    }
    case OpName::Write: {
      const std::size_t loc = *kind->locationIndex(op.label);
      const auto& next = args[0].as<StateData>();
      StateData out;
      for (Store s = 0; s < kind->storeCount(); ++s) {
        Store written = op.bit ? (s | (Store{1} << loc)) : (s & ~(Store{1} << loc));
        out.byStore.push_back(next.byStore[written]);
      }
      return MonadValue(kind, std::move(out));
    }
    case OpName::Print: {
      const auto& d = args[0].as<OutputData>();
      return MonadValue(kind, OutputData{op.label + d.text, d.value});
    }
  }
  throw InvalidValue("unknown operation");
}

std::vector<Carrier> support(const MonadValue& mu) {
  std::set<Carrier> out;
  switch (mu.tag()) {
    case MonadTag::Maybe:
      if (const auto& v = mu.as<MaybeData>().value) out.insert(*v);
      break;
    case MonadTag::Exception:
      if (const auto* x = std::get_if<Carrier>(&mu.as<ExceptionData>().result)) out.insert(*x);
      break;
    case MonadTag::Powerset: out = mu.as<PowersetData>().elements; break;
    case MonadTag::Subdistribution:
      for (const auto& [x, p] : mu.as<DistData>().weights) out.insert(x);
      break;
    case MonadTag::GlobalState:
      for (const auto& r : mu.as<StateData>().byStore) {
        if (r) out.insert(r->value);
      }
      break;
    case MonadTag::Output:
      if (const auto& v = mu.as<OutputData>().value) out.insert(*v);
      break;
  }
  return {out.begin(), out.end()};
}

bool leq(const MonadValue& mu, const MonadValue& nu) {
  requireSameKind(mu, nu, "leq");
  switch (mu.tag()) {
    case MonadTag::Maybe: return !mu.as<MaybeData>().value || mu == nu;
    case MonadTag::Exception: return std::holds_alternative<Diverge>(mu.as<ExceptionData>().result) || mu == nu;
    case MonadTag::Powerset: {
      const auto& a = mu.as<PowersetData>().elements;
      const auto& b = nu.as<PowersetData>().elements;
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    case MonadTag::Subdistribution: {
      const auto& b = nu.as<DistData>().weights;
      for (const auto& [x, p] : mu.as<DistData>().weights) {
        auto it = b.find(x);
        if (it == b.end() || it->second < p) return false;
      }
      return true;
    }
    case MonadTag::GlobalState: {
      const auto& a = mu.as<StateData>().byStore;
      const auto& b = nu.as<StateData>().byStore;
      for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s] && a[s] != b[s]) return false;
      }
      return true;
    }
    case MonadTag::Output: {
      const auto& a = mu.as<OutputData>();
      const auto& b = nu.as<OutputData>();
      if (!a.value) return b.text.compare(0, a.text.size(), a.text) == 0 && b.text.size() >= a.text.size();
      return a == b;
    }
  }
  return false;
}

Rational totalMass(const MonadValue& mu) {
  if (mu.tag() != MonadTag::Subdistribution) throw KindMismatch("total mass of a non-distribution");
  Rational total = 0;
  for (const auto& [x, p] : mu.as<DistData>().weights) total += p;
  return total;
}

MonadValue maybeValue(const KindRef& kind, std::optional<Carrier> value) {
  return MonadValue(kind, MaybeData{std::move(value)});
}

MonadValue raisedValue(const KindRef& kind, const std::string& label) {
  return MonadValue(kind, ExceptionData{Raised{label}});
}

MonadValue setValue(const KindRef& kind, std::set<Carrier> elements) {
  return MonadValue(kind, PowersetData{std::move(elements)});
}

MonadValue distValue(const KindRef& kind, const std::vector<std::pair<Carrier, Rational>>& weights) {
  DistData d;
  for (const auto& [x, p] : weights) {
    if (p < 0) throw InvalidValue("negative weight");
    if (p != 0) d.weights[x] += p;
  }
  return MonadValue(kind, std::move(d));
}

MonadValue outputValue(const KindRef& kind, std::string text, std::optional<Carrier> value) {
  return MonadValue(kind, OutputData{std::move(text), std::move(value)});
}

MonadValue stateValue(const KindRef& kind, std::vector<std::optional<StateResult>> byStore) {
  return MonadValue(kind, StateData{std::move(byStore)});
}

}  // namespace effdiag
