#include "effdiag/effects.hpp"

#include <json.hpp>

#include "effdiag/error.hpp"
#include "effdiag/gen.hpp"
#include "effdiag/serialize.hpp"

namespace effdiag {

MonadValue DerivedOperation::apply(std::span<const MonadValue> args) const {
  if (args.size() != arity) {
    throw ArityError(name + " expects " + std::to_string(arity) + " argument(s), got " + std::to_string(args.size()));
  }
  return fn(args);
}

DerivedOperation effectToOp(const GenericEffect& gamma) {
  DerivedOperation op;
  op.name = "op⟨" + renderEffect(gamma) + "⟩";
  op.arity = gamma.arity();
  op.kind = gamma.kind();
  op.fn = [gamma](std::span<const MonadValue> args) {
    for (const auto& a : args) requireSameKind(a, gamma.body(), "derived operation argument");
    std::vector<MonadValue> branches(args.begin(), args.end());
    return effdiag::bind(gamma.body(), [&branches](const Carrier& i) { return branches[static_cast<std::size_t>(i.index() - 1)]; });
  };
  return op;
}

DerivedOperation signatureOp(const KindRef& kind, const OpDescriptor& desc) {
  checkInSignature(*kind, desc);
  DerivedOperation op;
  op.name = desc.spelling();
  op.arity = desc.arity();
  op.kind = kind;
  op.fn = [kind, desc](std::span<const MonadValue> args) { return opApply(kind, desc, args); };
  return op;
}

GenericEffect opToEffect(const DerivedOperation& op, std::size_t n) {
  if (op.arity != n) {
    throw ArityError(op.name + " has arity " + std::to_string(op.arity) + ", not " + std::to_string(n));
  }
  std::vector<MonadValue> units;
  units.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) units.push_back(unit(op.kind, Carrier::index(static_cast<std::int64_t>(i))));
  return GenericEffect(n, op.apply(units));
}

GenericEffect opToEffect(const KindRef& kind, const OpDescriptor& op, std::size_t n) {
  return opToEffect(signatureOp(kind, op), n);
}

GenericEffect trivialEffect(const KindRef& kind) { return GenericEffect(1, unit(kind, Carrier::index(1))); }

GenericEffect bottomEffect(const KindRef& kind, std::size_t n) { return GenericEffect(n, bottom(kind)); }

GenericEffect composeEffects(const GenericEffect& gamma, const std::vector<GenericEffect>& deltas,
                             std::size_t arityCap) {
  if (deltas.size() != gamma.arity()) {
    throw ArityError("composition needs " + std::to_string(gamma.arity()) + " branch(es), got " +
                     std::to_string(deltas.size()));
  }
  std::vector<std::int64_t> offsets;
  offsets.reserve(deltas.size());
  std::size_t total = 0;
  for (const auto& d : deltas) {
    requireSameKind(gamma.body(), d.body(), "sequential composition");
    offsets.push_back(static_cast<std::int64_t>(total));
    total += d.arity();
  }
  if (total > arityCap) {
    throw ArityError("composite arity " + std::to_string(total) + " exceeds the cap " + std::to_string(arityCap));
  }
  MonadValue body = effdiag::bind(gamma.body(), [&](const Carrier& i) {
    const auto k = static_cast<std::size_t>(i.index() - 1);
    const std::int64_t offset = offsets[k];
    return mapCarrier(deltas[k].body(), [offset](const Carrier& j) { return Carrier::index(offset + j.index()); });
  });
  return GenericEffect(total, std::move(body), arityCap);
}

Presentation seqCompose(const Presentation& xi, const std::vector<Presentation>& family, std::size_t arityCap) {
  std::vector<GenericEffect> deltas;
  std::vector<Carrier> row;
  deltas.reserve(family.size());
  for (const auto& rho : family) {
    deltas.push_back(rho.effect());
    row.insert(row.end(), rho.row().begin(), rho.row().end());
  }
  return Presentation(composeEffects(xi.effect(), deltas, arityCap), std::move(row));
}

namespace {

std::string describeArgs(const std::vector<MonadValue>& args) {
  std::string out = "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += renderValue(args[i]);
  }
  return out + "]";
}

struct AlgebraicTrial {
  const DerivedOperation& op;

  std::optional<Counterexample> run(const std::vector<MonadValue>& args, const FunctionTable& f,
                                    std::uint64_t trialSeed) const {
    MonadValue lhs = effdiag::bind(op.apply(args), f.fn());
    std::vector<MonadValue> bound;
    bound.reserve(args.size());
    for (const auto& a : args) bound.push_back(effdiag::bind(a, f.fn()));
    MonadValue rhs = op.apply(bound);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{op.name + " args=" + describeArgs(args) + " f=" + f.describe(), renderValue(lhs),
                          renderValue(rhs), trialSeed};
  }
};

constexpr std::size_t kExhaustiveBudget = 4096;

}  // namespace

CheckReport checkAlgebraic(const DerivedOperation& op, std::size_t trials, std::size_t carrierSize,
                           std::uint64_t seed) {
  CheckReport report;
  report.law = "algebraicity";
  report.seed = seed;
  const std::size_t size = std::max<std::size_t>(carrierSize, 1);
  const auto domain = atoms(size);
  const auto codomain = atoms(size, "y");
  AlgebraicTrial trial{op};

  // Exhaustive sweep over small arguments when the tuple space is small enough.
  const auto small = smallValues(op.kind, domain);
  std::size_t tuples = 1;
  bool feasible = true;
  for (std::size_t i = 0; i < op.arity; ++i) {
    tuples *= small.size();
    if (tuples > kExhaustiveBudget) {
      feasible = false;
      break;
    }
  }
  if (feasible) {
    std::vector<std::size_t> digits(op.arity, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::vector<MonadValue> args;
      for (std::size_t d : digits) args.push_back(small[d]);
      const std::uint64_t trialSeed = mixSeed(seed, t);
      Gen gen(trialSeed);
      FunctionTable f = randomFunction(gen, op.kind, domain, codomain);
      ++report.trials;
      if (auto cex = trial.run(args, f, trialSeed)) {
        report.pass = false;
        report.counterexample = std::move(cex);
        return report;
      }
      for (std::size_t k = 0; k < digits.size(); ++k) {
        if (++digits[k] < small.size()) break;
        digits[k] = 0;
      }
    }
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trialSeed = mixSeed(seed ^ 0x9e3779b97f4a7c15ULL, t);
    Gen gen(trialSeed);
    std::vector<MonadValue> args;
    for (std::size_t i = 0; i < op.arity; ++i) args.push_back(randomValue(gen, op.kind, domain));
    FunctionTable f = randomFunction(gen, op.kind, domain, codomain);
    ++report.trials;
    if (auto cex = trial.run(args, f, trialSeed)) {
      report.pass = false;
      report.counterexample = std::move(cex);
      return report;
    }
  }
  return report;
}

namespace {

std::vector<std::vector<Carrier>> distinctGrid(std::size_t n, std::size_t m) {
  std::vector<std::vector<Carrier>> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      grid[i].push_back(Carrier::atom("x" + std::to_string(i + 1) + std::to_string(j + 1)));
    }
  }
  return grid;
}

std::optional<Counterexample> exchangeViolation(const GenericEffect& gamma, const GenericEffect& delta,
                                                const std::vector<std::vector<Carrier>>& grid,
                                                std::uint64_t trialSeed) {
  const KindRef& kind = gamma.kind();
  auto at = [&grid](const Carrier& i, const Carrier& j) {
    return grid[static_cast<std::size_t>(i.index() - 1)][static_cast<std::size_t>(j.index() - 1)];
  };
  MonadValue lhs = effdiag::bind(gamma.body(), [&](const Carrier& i) {
    return effdiag::bind(delta.body(), [&](const Carrier& j) { return unit(kind, at(i, j)); });
  });
  MonadValue rhs = effdiag::bind(delta.body(), [&](const Carrier& j) {
    return effdiag::bind(gamma.body(), [&](const Carrier& i) { return unit(kind, at(i, j)); });
  });
  if (lhs == rhs) return std::nullopt;
  std::string gridText;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      if (!gridText.empty()) gridText += ", ";
      gridText += "x" + std::to_string(i + 1) + std::to_string(j + 1) + "=" + grid[i][j].display();
    }
  }
  return Counterexample{"Γ=" + renderEffect(gamma) + " over [" + std::to_string(gamma.arity()) + "], Δ=" +
                            renderEffect(delta) + " over [" + std::to_string(delta.arity()) + "], grid {" +
                            gridText + "}",
                        renderValue(lhs), renderValue(rhs), trialSeed};
}

}  // namespace

CheckReport checkCommutative(const KindRef& kind, std::size_t trials, std::uint64_t seed) {
  CheckReport report;
  report.law = "commutativity";
  report.seed = seed;

  std::vector<GenericEffect> pool{trivialEffect(kind)};
  for (const auto& op : signature(*kind)) pool.push_back(opToEffect(kind, op, op.arity()));
  pool.push_back(bottomEffect(kind, 0));
  for (const auto& gamma : pool) {
    for (const auto& delta : pool) {
      ++report.trials;
      if (auto cex = exchangeViolation(gamma, delta, distinctGrid(gamma.arity(), delta.arity()), 0)) {
        report.pass = false;
        report.counterexample = std::move(cex);
        return report;
      }
    }
  }

  const auto carrier = atoms(3);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trialSeed = mixSeed(seed, t + 1);
    Gen gen(trialSeed);
    const std::size_t n = gen.between(0, 3);
    const std::size_t m = gen.between(0, 3);
    GenericEffect gamma = randomEffect(gen, kind, n);
    GenericEffect delta = randomEffect(gen, kind, m);
    std::vector<std::vector<Carrier>> grid(n);
    for (auto& row : grid) {
      for (std::size_t j = 0; j < m; ++j) row.push_back(gen.pick(carrier));
    }
    ++report.trials;
    if (auto cex = exchangeViolation(gamma, delta, grid, trialSeed)) {
      report.pass = false;
      report.counterexample = std::move(cex);
      return report;
    }
  }
  return report;
}

std::string reportToJson(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["law"] = report.law;
  j["pass"] = report.pass;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    j["counterexample"] = {{"instance", c.description}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"trialSeed", c.trialSeed}};
  }
  return j.dump();
}

}  // namespace effdiag
