#include "effdiag/gen.hpp"

#include <algorithm>

#include "effdiag/serialize.hpp"

namespace effdiag {

std::size_t Gen::below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

std::size_t Gen::between(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool Gen::chance(std::size_t num, std::size_t den) { return below(den) < num; }

std::uint64_t mixSeed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Carrier> atoms(std::size_t n, const std::string& prefix) {
  std::vector<Carrier> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (prefix.empty() && i < 26) {
      out.push_back(Carrier::atom(std::string(1, static_cast<char>('a' + i))));
    } else {
      out.push_back(Carrier::atom((prefix.empty() ? "x" : prefix) + std::to_string(i)));
    }
  }
  return out;
}

std::vector<Carrier> indices(std::size_t n) {
  std::vector<Carrier> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Carrier::index(static_cast<std::int64_t>(i)));
  return out;
}

MonadValue randomValue(Gen& gen, const KindRef& kind, const std::vector<Carrier>& carrier, const GenLimits& limits) {
  const bool empty = carrier.empty();
  if (limits.simplicity >= 2) {
    if (empty || gen.chance(1, 3)) return bottom(kind);
    return unit(kind, gen.pick(carrier));
  }
  const std::size_t maxLen = limits.simplicity >= 1 ? std::min<std::size_t>(1, limits.maxOutputLength)
                                                    : limits.maxOutputLength;
  const std::size_t maxDen = limits.simplicity >= 1 ? 2 : std::max<std::size_t>(1, limits.maxDenominator);
  switch (kind->tag()) {
    case MonadTag::Maybe:
      if (empty || gen.chance(1, 4)) return bottom(kind);
      return unit(kind, gen.pick(carrier));
    case MonadTag::Exception: {
      const std::size_t r = gen.below(4);
      if (r == 0) return bottom(kind);
      if (r == 1 || empty) return raisedValue(kind, gen.pick(kind->exceptions()));
      return unit(kind, gen.pick(carrier));
    }
    case MonadTag::Powerset: {
      std::set<Carrier> elems;
      for (const auto& x : carrier) {
        if (gen.chance(1, 2)) elems.insert(x);
      }
      return setValue(kind, std::move(elems));
    }
    case MonadTag::Subdistribution: {
      if (empty || gen.chance(1, 10)) return bottom(kind);
      const std::size_t den = gen.between(1, maxDen);
      const std::size_t k = gen.between(1, std::min(carrier.size(), den));
      std::vector<Carrier> chosen = carrier;
      for (std::size_t i = 0; i + 1 < chosen.size(); ++i) std::swap(chosen[i], chosen[i + gen.below(chosen.size() - i)]);
      chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k), chosen.end());
      const std::size_t units = gen.between(k, den);
      std::vector<std::size_t> share(k, 1);
      for (std::size_t u = k; u < units; ++u) ++share[gen.below(k)];
      std::vector<std::pair<Carrier, Rational>> weights;
      for (std::size_t i = 0; i < k; ++i) {
        weights.emplace_back(chosen[i], Rational(static_cast<long long>(share[i]), static_cast<long long>(den)));
      }
      return distValue(kind, weights);
    }
    case MonadTag::GlobalState: {
      std::vector<std::optional<StateResult>> byStore;
      for (Store s = 0; s < kind->storeCount(); ++s) {
        if (empty || gen.chance(1, 4)) {
          byStore.emplace_back();
        } else {
          byStore.push_back(StateResult{gen.pick(carrier), static_cast<Store>(gen.below(kind->storeCount()))});
        }
      }
      return stateValue(kind, std::move(byStore));
    }
    case MonadTag::Output: {
      std::string text;
      const std::size_t len = gen.between(0, maxLen);
      for (std::size_t i = 0; i < len; ++i) text += kind->alphabet()[gen.below(kind->alphabet().size())];
      std::optional<Carrier> value;
      if (!empty && gen.chance(3, 4)) value = gen.pick(carrier);
      return outputValue(kind, std::move(text), std::move(value));
    }
  }
  return bottom(kind);
}

GenericEffect randomEffect(Gen& gen, const KindRef& kind, std::size_t arity, const GenLimits& limits) {
  return GenericEffect(arity, randomValue(gen, kind, indices(arity), limits), std::max(arity, kDefaultArityCap));
}

MonadValue randomBelow(Gen& gen, const MonadValue& mu) {
  const KindRef& kind = mu.kind();
  switch (mu.tag()) {
    case MonadTag::Maybe:
    case MonadTag::Exception: return gen.chance(1, 2) ? bottom(kind) : mu;
    case MonadTag::Powerset: {
      std::set<Carrier> elems;
      for (const auto& x : mu.as<PowersetData>().elements) {
        if (gen.chance(2, 3)) elems.insert(x);
      }
      return setValue(kind, std::move(elems));
    }
    case MonadTag::Subdistribution: {
      std::vector<std::pair<Carrier, Rational>> weights;
      for (const auto& [x, p] : mu.as<DistData>().weights) {
        weights.emplace_back(x, p * Rational(static_cast<long long>(gen.between(0, 4)), 4));
      }
      return distValue(kind, weights);
    }
    case MonadTag::GlobalState: {
      auto byStore = mu.as<StateData>().byStore;
      for (auto& r : byStore) {
        if (gen.chance(1, 3)) r.reset();
      }
      return stateValue(kind, std::move(byStore));
    }
    case MonadTag::Output: {
      const auto& d = mu.as<OutputData>();
      if (d.value && gen.chance(1, 2)) return mu;
      const std::size_t keep = gen.between(0, d.text.size());
      return outputValue(kind, d.text.substr(0, keep), std::nullopt);
    }
  }
  return mu;
}

MonadValue FunctionTable::operator()(const Carrier& x) const {
  auto it = table.find(x);
  return it == table.end() ? bottom(kind) : it->second;
}

Kleisli FunctionTable::fn() const {
  return [self = *this](const Carrier& x) { return self(x); };
}

std::string FunctionTable::describe() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, v] : table) {
    if (!first) out += ", ";
    first = false;
    out += x.display() + " ↦ " + renderValue(v);
  }
  return out + "}";
}

FunctionTable randomFunction(Gen& gen, const KindRef& kind, const std::vector<Carrier>& domain,
                             const std::vector<Carrier>& codomain, const GenLimits& limits) {
  FunctionTable f{kind, {}};
  for (const auto& x : domain) f.table.emplace(x, randomValue(gen, kind, codomain, limits));
  return f;
}

FunctionTable randomFunctionBelow(Gen& gen, const FunctionTable& g) {
  FunctionTable f{g.kind, {}};
  for (const auto& [x, v] : g.table) f.table.emplace(x, randomBelow(gen, v));
  return f;
}

std::vector<MonadValue> smallValues(const KindRef& kind, const std::vector<Carrier>& carrier) {
  std::vector<MonadValue> out{bottom(kind)};
  switch (kind->tag()) {
    case MonadTag::Maybe:
      for (const auto& x : carrier) out.push_back(unit(kind, x));
      break;
    case MonadTag::Exception:
      for (const auto& e : kind->exceptions()) out.push_back(raisedValue(kind, e));
      for (const auto& x : carrier) out.push_back(unit(kind, x));
      break;
    case MonadTag::Powerset:
      for (std::size_t mask = 1; mask < (std::size_t{1} << carrier.size()); ++mask) {
        std::set<Carrier> elems;
        for (std::size_t i = 0; i < carrier.size(); ++i) {
          if (mask & (std::size_t{1} << i)) elems.insert(carrier[i]);
        }
        out.push_back(setValue(kind, std::move(elems)));
      }
      break;
    case MonadTag::Subdistribution: {
      // Weights in {0, 1/2, 1} per element with total mass at most one.
      std::vector<std::size_t> halves(carrier.size(), 0);
      while (true) {
        std::size_t k = 0;
        while (k < halves.size() && ++halves[k] > 2) halves[k++] = 0;
        if (k == halves.size()) break;
        std::size_t total = 0;
        for (auto h : halves) total += h;
        if (total > 2) continue;
        std::vector<std::pair<Carrier, Rational>> weights;
        for (std::size_t i = 0; i < carrier.size(); ++i) {
          weights.emplace_back(carrier[i], Rational(static_cast<long long>(halves[i]), 2));
        }
        out.push_back(distValue(kind, weights));
      }
      break;
    }
    case MonadTag::GlobalState: {
      const Store stores = kind->storeCount();
      if (kind->locations().size() <= 1) {
        std::vector<std::optional<StateResult>> options{std::nullopt};
        for (const auto& x : carrier) {
          for (Store s = 0; s < stores; ++s) options.push_back(StateResult{x, s});
        }
        std::vector<std::size_t> digits(stores, 0);
        out.clear();
        while (true) {
          std::vector<std::optional<StateResult>> byStore;
          for (auto d : digits) byStore.push_back(options[d]);
          out.push_back(stateValue(kind, std::move(byStore)));
          std::size_t k = 0;
          while (k < digits.size() && ++digits[k] == options.size()) digits[k++] = 0;
          if (k == digits.size()) break;
        }
      } else {
        for (const auto& x : carrier) {
          const MonadValue ux = unit(kind, x);
          out.push_back(ux);
          for (const auto& l : kind->locations()) {
            for (bool b : {false, true}) {
              const MonadValue args[] = {ux};
              out.push_back(opApply(kind, OpDescriptor::write(l, b), args));
            }
            for (const auto& y : carrier) {
              const MonadValue args[] = {ux, unit(kind, y)};
              out.push_back(opApply(kind, OpDescriptor::read(l), args));
            }
          }
        }
      }
      break;
    }
    case MonadTag::Output: {
      std::vector<std::string> texts{""};
      for (char c : kind->alphabet()) texts.emplace_back(1, c);
      out.clear();
      for (const auto& t : texts) {
        out.push_back(outputValue(kind, t, std::nullopt));
        for (const auto& x : carrier) out.push_back(outputValue(kind, t, x));
      }
      break;
    }
  }
  return out;
}

KindRef defaultKind(MonadTag tag) {
  switch (tag) {
    case MonadTag::Maybe: return MonadKind::maybe();
    case MonadTag::Exception: return MonadKind::exception({"e1", "e2"});
    case MonadTag::Powerset: return MonadKind::powerset();
    case MonadTag::Subdistribution: return MonadKind::subdistribution();
    case MonadTag::GlobalState: return MonadKind::globalState({"l0", "l1"});
    case MonadTag::Output: return MonadKind::output("ab");
  }
  return MonadKind::maybe();
}

}  // namespace effdiag
