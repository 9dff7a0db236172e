#include "effdiag/presentation.hpp"

#include <algorithm>
#include <map>

#include "effdiag/error.hpp"
#include "effdiag/serialize.hpp"

namespace effdiag {

GenericEffect::GenericEffect(std::size_t arity, MonadValue body, std::size_t arityCap)
    : arity_(arity), body_(std::move(body)) {
  if (arity_ > arityCap) {
    throw ArityError("generic effect arity " + std::to_string(arity_) + " exceeds the cap " +
                     std::to_string(arityCap));
  }
  for (const auto& c : support(body_)) {
    if (!c.isIndex() || c.index() < 1 || static_cast<std::size_t>(c.index()) > arity_) {
      throw ArityError("generic effect body mentions " + c.display() + " outside [" + std::to_string(arity_) + "]");
    }
  }
}

Presentation::Presentation(GenericEffect effect, std::vector<Carrier> row)
    : effect_(std::move(effect)), row_(std::move(row)) {
  if (row_.size() != effect_.arity()) {
    throw ArityError("row has " + std::to_string(row_.size()) + " element(s) but the effect has arity " +
                     std::to_string(effect_.arity()));
  }
}

MonadValue interpret(const Presentation& xi) {
  const auto& row = xi.row();
  return mapCarrier(xi.effect().body(), [&row](const Carrier& i) { return row[static_cast<std::size_t>(i.index() - 1)]; });
}

Presentation decompose(const MonadValue& mu) {
  std::vector<Carrier> row = support(mu);
  std::map<Carrier, std::int64_t> position;
  for (std::size_t i = 0; i < row.size(); ++i) position.emplace(row[i], static_cast<std::int64_t>(i + 1));
  MonadValue body = mapCarrier(mu, [&position](const Carrier& x) { return Carrier::index(position.at(x)); });
  // Supports can be larger than the default cap (e.g. long fuel chains); the
  // cap guards composition, not decomposition.
  std::size_t n = row.size();
  return Presentation(GenericEffect(n, std::move(body), std::max(n, kDefaultArityCap)), std::move(row));
}

bool diagramEq(const Presentation& xi, const Presentation& rho) {
  if (!sameKind(xi.kind(), rho.kind())) {
    throw KindMismatch("diagram equality across " + xi.kind()->describe() + " and " + rho.kind()->describe());
  }
  return interpret(xi) == interpret(rho);
}

bool diagramLeq(const Presentation& xi, const Presentation& rho) { return leq(interpret(xi), interpret(rho)); }

Presentation extend(const Presentation& xi, const std::vector<std::size_t>& injection, std::size_t m,
                    const std::vector<Carrier>& fill) {
  const std::size_t n = xi.effect().arity();
  if (injection.size() != n) {
    throw ArityError("injection has " + std::to_string(injection.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<bool> hit(m + 1, false);
  for (std::size_t target : injection) {
    if (target < 1 || target > m) throw ArityError("injection target " + std::to_string(target) + " outside [m]");
    if (hit[target]) throw ArityError("injection is not injective at " + std::to_string(target));
    hit[target] = true;
  }
  if (fill.size() != m - n) {
    throw ArityError("fill has " + std::to_string(fill.size()) + " value(s), expected " + std::to_string(m - n));
  }
  std::vector<std::optional<Carrier>> slots(m);
  for (std::size_t i = 0; i < n; ++i) slots[injection[i] - 1] = xi.row()[i];
  std::size_t next = 0;
  for (auto& s : slots) {
    if (!s) s = fill[next++];
  }
  std::vector<Carrier> row;
  row.reserve(m);
  for (auto& s : slots) row.push_back(*s);
  MonadValue body = mapCarrier(xi.effect().body(), [&injection](const Carrier& i) {
    return Carrier::index(static_cast<std::int64_t>(injection[static_cast<std::size_t>(i.index() - 1)]));
  });
  return Presentation(GenericEffect(m, std::move(body), std::max(m, kDefaultArityCap)), std::move(row));
}

Presentation permute(const Presentation& xi, const std::vector<std::size_t>& perm) {
  const std::size_t n = xi.effect().arity();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i + 1) throw ArityError("not a permutation of [n]");
  }
  if (perm.size() != n) throw ArityError("permutation size differs from the arity");
  return extend(xi, perm, n, {});
}

namespace {

std::string storeBits(Store s, std::size_t width) {
  std::string out;
  for (std::size_t k = 0; k < width; ++k) out += ((s >> k) & 1U) ? '1' : '0';
  return out;
}

}  // namespace

std::string renderEffect(const GenericEffect& effect) {
  const MonadValue& body = effect.body();
  if (effect.arity() == 1 && body == unit(body.kind(), Carrier::index(1))) return "η";
  if (isBottom(body)) return "⊥";
  switch (body.tag()) {
    case MonadTag::Maybe: return "↓" + body.as<MaybeData>().value->display();
    case MonadTag::Exception: {
      const auto& r = body.as<ExceptionData>().result;
      if (const auto* x = std::get_if<Carrier>(&r)) return "↓" + x->display();
      return "raise[" + std::get<Raised>(r).label + "]";
    }
    case MonadTag::Powerset: {
      std::string out = "{";
      bool first = true;
      for (const auto& x : body.as<PowersetData>().elements) {
        if (!first) out += ",";
        first = false;
        out += x.display();
      }
      return out + "}";
    }
    case MonadTag::Subdistribution: {
      const auto& w = body.as<DistData>().weights;
      std::string out;
      for (std::size_t i = 1; i <= effect.arity(); ++i) {
        if (i > 1) out += ",";
        auto it = w.find(Carrier::index(static_cast<std::int64_t>(i)));
        out += it == w.end() ? "0" : formatRationalShort(it->second);
      }
      return out;
    }
    case MonadTag::GlobalState: {
      const std::size_t width = body.kind()->locations().size();
      const auto& d = body.as<StateData>().byStore;
      std::string out = "state{";
      for (std::size_t s = 0; s < d.size(); ++s) {
        if (s) out += ", ";
        out += storeBits(static_cast<Store>(s), width) + ": ";
        out += d[s] ? d[s]->value.display() + "@" + storeBits(d[s]->store, width) : "↑";
      }
      return out + "}";
    }
    case MonadTag::Output: {
      const auto& d = body.as<OutputData>();
      return "(" + d.text + ", " + (d.value ? d.value->display() : "↑") + ")";
    }
  }
  return "?";
}

std::string render(const Presentation& xi, RenderFormat format) {
  if (format == RenderFormat::Machine) return toJson(xi);
  std::string out = "[" + renderEffect(xi.effect()) + " ‖ ";
  for (std::size_t i = 0; i < xi.row().size(); ++i) {
    if (i) out += " ; ";
    out += std::to_string(i + 1) + "→" + xi.row()[i].display();
  }
  return out + "]";
}

}  // namespace effdiag
