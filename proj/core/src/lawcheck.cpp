#include "effdiag/lawcheck.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "effdiag/error.hpp"
#include "effdiag/gen.hpp"
#include "effdiag/serialize.hpp"

namespace effdiag {

namespace {

const std::vector<MonadTag> kAllMonads{MonadTag::Maybe,           MonadTag::Exception,   MonadTag::Powerset,
                                       MonadTag::Subdistribution, MonadTag::GlobalState, MonadTag::Output};

/// Everything a single trial draws from. Built from TrialParams alone, so a
/// trial can be replayed from its parameters.
struct TrialContext {
  TrialContext(KindRef k, const TrialParams& p)
      : kind(std::move(k)), params(p), gen(p.seed), limits{16, 3, p.simplicity}, carrier(atoms(p.carrierSize)) {}

  MonadValue value() { return randomValue(gen, kind, carrier, limits); }
  MonadValue valueOver(const std::vector<Carrier>& xs) { return randomValue(gen, kind, xs, limits); }
  GenericEffect effect(std::size_t n) { return randomEffect(gen, kind, n, limits); }
  std::size_t smallArity() { return gen.between(0, params.arity); }

  std::vector<Carrier> row(std::size_t n) {
    std::vector<Carrier> r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(gen.pick(carrier));
    return r;
  }

  Presentation presentation(std::size_t n) {
    GenericEffect gamma = effect(n);
    return Presentation(std::move(gamma), row(n));
  }

  std::vector<Presentation> family(std::size_t n) {
    std::vector<Presentation> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(presentation(smallArity()));
    return out;
  }

  FunctionTable function(const std::string& prefix) {
    return randomFunction(gen, kind, carrier, atoms(params.carrierSize, prefix), limits);
  }

  /// A presentation =_I to xi: an extension along a random injection
  /// followed by a random permutation.
  Presentation equivalent(const Presentation& xi) {
    const std::size_t n = xi.effect().arity();
    const std::size_t m = n + gen.between(0, 2);
    std::vector<std::size_t> targets(m);
    std::iota(targets.begin(), targets.end(), 1);
    for (std::size_t i = 0; i + 1 < m; ++i) std::swap(targets[i], targets[i + gen.below(m - i)]);
    std::vector<std::size_t> injection(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(n));
    Presentation ext = extend(xi, injection, m, row(m - n));
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t i = 0; i + 1 < m; ++i) std::swap(perm[i], perm[i + gen.below(m - i)]);
    return permute(ext, perm);
  }

  KindRef kind;
  TrialParams params;
  Gen gen;
  GenLimits limits;
  std::vector<Carrier> carrier;
};

using Outcome = std::optional<Counterexample>;
using Trial = std::function<Outcome(TrialContext&)>;

std::string show(const Presentation& xi) { return render(xi, RenderFormat::Text); }

Outcome violation(std::string description, std::string lhs, std::string rhs) {
  return Counterexample{std::move(description), std::move(lhs), std::move(rhs), 0};
}

Outcome expectEqual(const std::string& what, const MonadValue& lhs, const MonadValue& rhs) {
  if (lhs == rhs) return std::nullopt;
  return violation(what, renderValue(lhs), renderValue(rhs));
}

Outcome expectDiagramEq(const std::string& what, const Presentation& lhs, const Presentation& rhs) {
  if (diagramEq(lhs, rhs)) return std::nullopt;
  return violation(what, show(lhs) + " = " + renderValue(interpret(lhs)), show(rhs) + " = " + renderValue(interpret(rhs)));
}

Outcome expectLeq(const std::string& what, const MonadValue& lhs, const MonadValue& rhs) {
  if (leq(lhs, rhs)) return std::nullopt;
  return violation(what, renderValue(lhs), renderValue(rhs));
}

/// The family ⟨decompose(f(x₁)), ..., decompose(f(xₙ))⟩ over the row of xi.
std::vector<Presentation> postMap(const Presentation& xi, const FunctionTable& f) {
  std::vector<Presentation> out;
  for (const auto& x : xi.row()) out.push_back(decompose(f(x)));
  return out;
}

std::string describeArgs(const std::vector<MonadValue>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + renderValue(args[i]);
  return "[" + out + "]";
}

Outcome kleisliTrial(TrialContext& c) {
  const MonadValue mu = c.value();
  const Carrier x = c.gen.pick(c.carrier);
  const FunctionTable f = c.function("y");
  FunctionTable g{c.kind, {}};
  for (const auto& y : atoms(c.params.carrierSize, "y")) g.table.emplace(y, c.valueOver(atoms(c.params.carrierSize, "z")));
  if (auto o = expectEqual("left unit: x=" + x.display() + " f=" + f.describe(), effdiag::bind(unit(c.kind, x), f.fn()),
                           f(x))) {
    return o;
  }
  if (auto o = expectEqual("right unit: μ=" + renderValue(mu),
                           effdiag::bind(mu, [&](const Carrier& y) { return unit(c.kind, y); }), mu)) {
    return o;
  }
  return expectEqual("associativity: μ=" + renderValue(mu) + " f=" + f.describe() + " g=" + g.describe(),
                     effdiag::bind(effdiag::bind(mu, f.fn()), g.fn()),
                     effdiag::bind(mu, [&](const Carrier& y) { return effdiag::bind(f(y), g.fn()); }));
}

Outcome representationTrial(TrialContext& c) {
  const MonadValue mu = c.value();
  return expectEqual("μ=" + renderValue(mu), interpret(decompose(mu)), mu);
}

Outcome bijectionTrial(TrialContext& c) {
  const std::size_t n = c.params.arity;
  const GenericEffect gamma = c.effect(n);
  const GenericEffect back = opToEffect(effectToOp(gamma), n);
  if (auto o = expectEqual("Γ=" + renderEffect(gamma) + " over [" + std::to_string(n) + "]", back.body(), gamma.body())) {
    return o;
  }
  const auto ops = signature(*c.kind);
  if (ops.empty()) return std::nullopt;
  const OpDescriptor op = c.gen.pick(ops);
  const DerivedOperation derived = effectToOp(opToEffect(c.kind, op, op.arity()));
  std::vector<MonadValue> args;
  for (std::size_t i = 0; i < op.arity(); ++i) args.push_back(c.value());
  return expectEqual("op=" + op.spelling() + " args=" + describeArgs(args), derived.apply(args),
                     opApply(c.kind, op, args));
}

Outcome compositionTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const auto rho = c.family(xi.effect().arity());
  std::vector<MonadValue> branches;
  for (const auto& r : rho) branches.push_back(interpret(r));
  const MonadValue oracle = effdiag::bind(xi.effect().body(), [&](const Carrier& i) {
    return branches[static_cast<std::size_t>(i.index() - 1)];
  });
  std::string desc = "ξ=" + show(xi) + " family=";
  for (const auto& r : rho) desc += show(r);
  return expectEqual(desc, interpret(seqCompose(xi, rho)), oracle);
}

Outcome associativityTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const auto rho = c.family(xi.effect().arity());
  std::size_t total = 0;
  for (const auto& r : rho) total += r.effect().arity();
  const auto tau = c.family(total);
  std::vector<Presentation> inner;
  std::size_t offset = 0;
  for (const auto& r : rho) {
    const std::size_t m = r.effect().arity();
    std::vector<Presentation> block(tau.begin() + static_cast<std::ptrdiff_t>(offset),
                                    tau.begin() + static_cast<std::ptrdiff_t>(offset + m));
    inner.push_back(seqCompose(r, block));
    offset += m;
  }
  return expectDiagramEq("ξ=" + show(xi), seqCompose(seqCompose(xi, rho), tau), seqCompose(xi, inner));
}

Outcome unitTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const Presentation wrapper(trivialEffect(c.kind), c.row(1));
  if (auto o = expectDiagramEq("left unit, ξ=" + show(xi), seqCompose(wrapper, {xi}), xi)) return o;
  std::vector<Presentation> units;
  for (const auto& x : xi.row()) units.emplace_back(trivialEffect(c.kind), std::vector<Carrier>{x});
  return expectDiagramEq("right unit, ξ=" + show(xi), seqCompose(xi, units), xi);
}

Outcome bindingTrial(TrialContext& c) {
  const MonadValue mu = c.value();
  const FunctionTable f = c.function("y");
  const Presentation xi = decompose(mu);
  return expectDiagramEq("μ=" + renderValue(mu) + " f=" + f.describe(), decompose(effdiag::bind(mu, f.fn())),
                         seqCompose(xi, postMap(xi, f)));
}

Outcome congruenceTrial(TrialContext& c) {
  const Presentation xi = decompose(c.value());
  const Presentation rho = c.equivalent(xi);
  if (auto o = expectDiagramEq("premise ξ =_I ρ", xi, rho)) return o;
  const FunctionTable f = c.function("y");
  return expectDiagramEq("ξ=" + show(xi) + " ρ=" + show(rho) + " f=" + f.describe(), seqCompose(xi, postMap(xi, f)),
                         seqCompose(rho, postMap(rho, f)));
}

Outcome extensionTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const Presentation rho = c.equivalent(xi);
  return expectDiagramEq("ξ=" + show(xi), rho, xi);
}

Outcome bottomLeastTrial(TrialContext& c) {
  const MonadValue mu = c.value();
  return expectLeq("μ=" + renderValue(mu), bottom(c.kind), mu);
}

Presentation bottomDiagram(const KindRef& kind) { return Presentation(bottomEffect(kind, 0), {}); }

Outcome bottomCollapseTrial(TrialContext& c) {
  const std::size_t n = c.params.arity;
  return expectDiagramEq("n=" + std::to_string(n), Presentation(bottomEffect(c.kind, n), c.row(n)),
                         bottomDiagram(c.kind));
}

Outcome bottomLeftTrial(TrialContext& c) {
  const std::size_t n = c.params.arity;
  const Presentation xi(bottomEffect(c.kind, n), c.row(n));
  const auto rho = c.family(n);
  std::string desc = "family=";
  for (const auto& r : rho) desc += show(r);
  return expectDiagramEq(desc, seqCompose(xi, rho), bottomDiagram(c.kind));
}

Outcome bottomRightTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const std::vector<Presentation> bottoms(xi.effect().arity(), bottomDiagram(c.kind));
  return expectDiagramEq("Γ=" + renderEffect(xi.effect()), seqCompose(xi, bottoms), bottomDiagram(c.kind));
}

Outcome monotonicityTrial(TrialContext& c) {
  const MonadValue upper = c.value();
  const MonadValue lower = randomBelow(c.gen, upper);
  const Presentation xi = decompose(lower);
  const Presentation rho = decompose(upper);
  const FunctionTable f = c.function("y");
  return expectLeq("ξ=" + show(xi) + " ρ=" + show(rho) + " f=" + f.describe(), interpret(seqCompose(xi, postMap(xi, f))),
                   interpret(seqCompose(rho, postMap(rho, f))));
}

Outcome monotonicityKleisliTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  const FunctionTable g = c.function("y");
  const FunctionTable f = randomFunctionBelow(c.gen, g);
  return expectLeq("ξ=" + show(xi) + " f=" + f.describe() + " g=" + g.describe(),
                   interpret(seqCompose(xi, postMap(xi, f))), interpret(seqCompose(xi, postMap(xi, g))));
}

Outcome monotonicityBranchesTrial(TrialContext& c) {
  const Presentation xi = c.presentation(c.params.arity);
  std::vector<Presentation> upper, lower;
  for (std::size_t i = 0; i < xi.effect().arity(); ++i) {
    const MonadValue mu = c.value();
    upper.push_back(decompose(mu));
    lower.push_back(decompose(randomBelow(c.gen, mu)));
  }
  return expectLeq("ξ=" + show(xi), interpret(seqCompose(xi, lower)), interpret(seqCompose(xi, upper)));
}

Outcome monotonicityOpsTrial(TrialContext& c) {
  const auto ops = signature(*c.kind);
  // bind is monotone in its first argument; this covers monads without operations.
  const MonadValue mu = c.value();
  const MonadValue nu = randomBelow(c.gen, mu);
  const FunctionTable f = c.function("y");
  if (auto o = expectLeq("bind, μ=" + renderValue(mu) + " ν=" + renderValue(nu), effdiag::bind(nu, f.fn()),
                         effdiag::bind(mu, f.fn()))) {
    return o;
  }
  if (ops.empty()) return std::nullopt;
  const OpDescriptor op = c.gen.pick(ops);
  std::vector<MonadValue> args;
  for (std::size_t i = 0; i < op.arity(); ++i) args.push_back(c.value());
  if (args.empty()) return std::nullopt;
  std::vector<MonadValue> lowered = args;
  const std::size_t k = c.gen.below(op.arity());
  lowered[k] = randomBelow(c.gen, args[k]);
  return expectLeq(op.spelling() + " args=" + describeArgs(args) + " lowered=" + describeArgs(lowered),
                   opApply(c.kind, op, lowered), opApply(c.kind, op, args));
}

Outcome orderTrial(TrialContext& c) {
  const MonadValue mu = c.value();
  const MonadValue nu = randomBelow(c.gen, mu);
  const MonadValue lambda = randomBelow(c.gen, nu);
  if (!leq(mu, mu)) return violation("reflexivity, μ=" + renderValue(mu), renderValue(mu), renderValue(mu));
  if (auto o = expectLeq("generated below", nu, mu)) return o;
  if (auto o = expectLeq("transitivity via " + renderValue(nu), lambda, mu)) return o;
  if (leq(mu, nu) && !(mu == nu)) return violation("antisymmetry", renderValue(mu), renderValue(nu));
  const MonadValue other = c.value();
  if (leq(mu, other) && leq(other, mu) && !(mu == other)) {
    return violation("antisymmetry", renderValue(mu), renderValue(other));
  }
  return std::nullopt;
}

Outcome encodedAlgebraicityTrial(TrialContext& c) {
  const auto ops = signature(*c.kind);
  if (ops.empty()) return std::nullopt;
  const OpDescriptor op = c.gen.pick(ops);
  const Presentation opDiagram(opToEffect(c.kind, op, op.arity()), c.row(op.arity()));
  const auto rho = c.family(op.arity());
  std::vector<MonadValue> branches;
  for (const auto& r : rho) branches.push_back(interpret(r));
  return expectEqual(op.spelling() + " branches=" + describeArgs(branches), interpret(seqCompose(opDiagram, rho)),
                     opApply(c.kind, op, branches));
}

const std::map<std::string, Trial>& trialLaws() {
  static const std::map<std::string, Trial> laws{
      {"kleisli", kleisliTrial},
      {"representation", representationTrial},
      {"bijection", bijectionTrial},
      {"composition", compositionTrial},
      {"associativity", associativityTrial},
      {"unit", unitTrial},
      {"binding", bindingTrial},
      {"congruence", congruenceTrial},
      {"extension", extensionTrial},
      {"bottom-least", bottomLeastTrial},
      {"bottom-collapse", bottomCollapseTrial},
      {"bottom-left-absorption", bottomLeftTrial},
      {"bottom-right-absorption", bottomRightTrial},
      {"monotonicity", monotonicityTrial},
      {"monotonicity-kleisli", monotonicityKleisliTrial},
      {"monotonicity-branches", monotonicityBranchesTrial},
      {"monotonicity-ops", monotonicityOpsTrial},
      {"order", orderTrial},
      {"encoded-algebraicity", encodedAlgebraicityTrial},
  };
  return laws;
}

Outcome runTrial(const Trial& trial, const KindRef& kind, const TrialParams& params) {
  TrialContext ctx(kind, params);
  Outcome o = trial(ctx);
  if (o) o->trialSeed = params.seed;
  return o;
}

/// Greedy shrinking: lower arity, then carrier size, then raise simplicity,
/// keeping each step only while the trial still fails.
std::pair<TrialParams, Counterexample> shrink(const Trial& trial, const KindRef& kind, TrialParams params,
                                              Counterexample cex) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<TrialParams> candidates;
    if (params.arity > 1) candidates.push_back({params.seed, params.arity - 1, params.carrierSize, params.simplicity});
    if (params.carrierSize > 1) {
      candidates.push_back({params.seed, params.arity, params.carrierSize - 1, params.simplicity});
    }
    if (params.simplicity < 2) candidates.push_back({params.seed, params.arity, params.carrierSize, params.simplicity + 1});
    for (const auto& candidate : candidates) {
      if (auto o = runTrial(trial, kind, candidate)) {
        params = candidate;
        cex = std::move(*o);
        progress = true;
        break;
      }
    }
  }
  return {params, std::move(cex)};
}

std::uint64_t cellSeedFor(std::uint64_t seed, const std::string& law, MonadTag tag) {
  const auto& ids = lawIds();
  const auto lawIndex = static_cast<std::uint64_t>(std::find(ids.begin(), ids.end(), law) - ids.begin());
  return mixSeed(mixSeed(seed, lawIndex + 1), static_cast<std::uint64_t>(tag) + 1);
}

TrialParams paramsFor(std::uint64_t cellSeed, std::size_t t, const LawSuiteConfig& config) {
  const std::uint64_t seed = mixSeed(cellSeed, t + 1);
  Gen g(mixSeed(seed, 0x5eed));
  return {seed, g.between(1, config.arityMax), g.between(1, config.carrierSizeMax), 0};
}

LawResult runTrialCell(const std::string& law, MonadTag tag, const LawSuiteConfig& config) {
  const Trial& trial = trialLaws().at(law);
  const KindRef kind = defaultKind(tag);
  LawResult result;
  result.law = law;
  result.monad = tag;
  result.expectedPass = expectedToHold(law, tag);
  result.cellSeed = cellSeedFor(config.seed, law, tag);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const TrialParams params = paramsFor(result.cellSeed, t, config);
    ++result.trials;
    Outcome o = runTrial(trial, kind, params);
    if (!o) {
      ++result.passed;
      continue;
    }
    if (result.pass) {
      auto [small, cex] = shrink(trial, kind, params, std::move(*o));
      result.pass = false;
      result.replay = small;
      result.counterexample = std::move(cex);
    }
  }
  return result;
}

LawResult fromReport(const std::string& law, MonadTag tag, std::uint64_t cellSeed, const std::vector<CheckReport>& reports) {
  LawResult result;
  result.law = law;
  result.monad = tag;
  result.expectedPass = expectedToHold(law, tag);
  result.cellSeed = cellSeed;
  for (const auto& r : reports) {
    result.trials += r.trials;
    result.passed += r.pass ? r.trials : r.trials - 1;
    if (!r.pass && result.pass) {
      result.pass = false;
      result.counterexample = r.counterexample;
    }
  }
  return result;
}

LawResult runCheckerCell(const std::string& law, MonadTag tag, const LawSuiteConfig& config) {
  const KindRef kind = defaultKind(tag);
  const std::uint64_t cellSeed = cellSeedFor(config.seed, law, tag);
  std::vector<CheckReport> reports;
  if (law == "commutativity") {
    reports.push_back(checkCommutative(kind, config.trials, cellSeed));
  } else {
    std::vector<DerivedOperation> ops;
    for (const auto& op : signature(*kind)) ops.push_back(signatureOp(kind, op));
    Gen gen(cellSeed);
    for (std::size_t n = 0; n <= config.arityMax; ++n) ops.push_back(effectToOp(randomEffect(gen, kind, n)));
    std::uint64_t k = 0;
    for (const auto& op : ops) {
      reports.push_back(checkAlgebraic(op, config.trials, config.carrierSizeMax, mixSeed(cellSeed, ++k)));
    }
  }
  return fromReport(law, tag, cellSeed, reports);
}

LawResult runCell(const std::string& law, MonadTag tag, const LawSuiteConfig& config) {
  if (trialLaws().count(law)) return runTrialCell(law, tag, config);
  return runCheckerCell(law, tag, config);
}

void validate(const LawSuiteConfig& config) {
  if (config.trials < 1) throw Error("trials must be at least 1");
  if (config.carrierSizeMax < 1) throw Error("carrier size bound must be at least 1");
  if (config.arityMax < 1) throw Error("arity bound must be at least 1");
  if (config.laws) {
    for (const auto& law : *config.laws) {
      const auto& ids = lawIds();
      if (std::find(ids.begin(), ids.end(), law) == ids.end()) throw Error("unknown law '" + law + "'");
    }
  }
}

}  // namespace

const std::vector<std::string>& lawIds() {
  static const std::vector<std::string> ids{
      "kleisli",
      "algebraicity",
      "representation",
      "bijection",
      "composition",
      "associativity",
      "unit",
      "binding",
      "congruence",
      "extension",
      "bottom-least",
      "bottom-collapse",
      "bottom-left-absorption",
      "bottom-right-absorption",
      "monotonicity",
      "monotonicity-kleisli",
      "monotonicity-branches",
      "monotonicity-ops",
      "order",
      "encoded-algebraicity",
      "commutativity",
  };
  return ids;
}

bool expectedToHold(const std::string& law, MonadTag monad) {
  if (law == "commutativity") {
    return monad != MonadTag::Exception && monad != MonadTag::Output && monad != MonadTag::GlobalState;
  }
  if (law == "bottom-right-absorption") return monad != MonadTag::Exception && monad != MonadTag::Output;
  return true;
}

LawReport runLawSuite(const LawSuiteConfig& config) {
  validate(config);
  std::vector<std::pair<std::string, MonadTag>> cells;
  const auto& laws = config.laws ? *config.laws : lawIds();
  const auto& monads = config.monads ? *config.monads : kAllMonads;
  for (const auto& law : lawIds()) {
    if (std::find(laws.begin(), laws.end(), law) == laws.end()) continue;
    for (MonadTag tag : kAllMonads) {
      if (std::find(monads.begin(), monads.end(), tag) != monads.end()) cells.emplace_back(law, tag);
    }
  }

  LawReport report;
  report.seed = config.seed;
  report.results.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      report.results[i] = runCell(cells[i].first, cells[i].second, config);
    }
  };
  const std::size_t threads =
      config.parallel ? std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency())) : 1;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

bool replayFails(const LawResult& result, const LawSuiteConfig& config) {
  const auto& laws = trialLaws();
  if (auto it = laws.find(result.law); it != laws.end() && result.replay) {
    return runTrial(it->second, defaultKind(result.monad), *result.replay).has_value();
  }
  LawSuiteConfig single = config;
  single.laws = std::vector<std::string>{result.law};
  single.monads = std::vector<MonadTag>{result.monad};
  single.parallel = false;
  validate(single);
  return !runCell(result.law, result.monad, single).pass;
}

bool LawReport::expectationsMet() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.pass || !r.expectedPass; });
}

std::string LawReport::toJson() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["expectationsMet"] = expectationsMet();
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json cell;
    cell["law"] = r.law;
    cell["monad"] = std::string(tagName(r.monad));
    cell["pass"] = r.pass;
    cell["expected"] = r.expectedPass;
    cell["trials"] = r.trials;
    cell["passed"] = r.passed;
    cell["cellSeed"] = r.cellSeed;
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      cell["counterexample"] = {{"instance", c.description}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"trialSeed", c.trialSeed}};
    }
    if (r.replay) {
      cell["replay"] = {{"seed", r.replay->seed},
                        {"arity", r.replay->arity},
                        {"carrierSize", r.replay->carrierSize},
                        {"simplicity", r.replay->simplicity}};
    }
    j["results"].push_back(std::move(cell));
  }
  return j.dump();
}

std::string LawReport::toText() const {
  std::ostringstream out;
  std::size_t failures = 0, unexpected = 0;
  out << std::left << std::setw(26) << "law" << std::setw(11) << "monad" << std::setw(17) << "result"
      << "trials\n";
  for (const auto& r : results) {
    std::string status = r.pass ? "pass" : "FAIL";
    if (r.pass != r.expectedPass) status += r.pass ? " (unexpected)" : " (UNEXPECTED)";
    else if (!r.pass) status += " (expected)";
    out << std::setw(26) << r.law << std::setw(11) << tagName(r.monad) << std::setw(17) << status << r.passed << "/"
        << r.trials << "\n";
    if (!r.pass) {
      ++failures;
      if (r.expectedPass) ++unexpected;
    }
    if (r.counterexample) {
      out << "    instance: " << r.counterexample->description << "\n"
          << "    lhs: " << r.counterexample->lhs << "\n"
          << "    rhs: " << r.counterexample->rhs << "\n";
    }
  }
  out << results.size() << " cells, " << failures << " failing, " << unexpected << " unexpected (seed " << seed
      << ")\n";
  return out.str();
}

}  // namespace effdiag
