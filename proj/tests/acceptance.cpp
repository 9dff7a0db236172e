// Acceptance suite: one PASS/FAIL line per criterion, with detail lines below.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 iff every criterion passes, except those named with
// --expect-fail, which must fail.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "effdiag/effects.hpp"
#include "effdiag/gen.hpp"
#include "effdiag/lambda.hpp"
#include "effdiag/serialize.hpp"

using namespace effdiag;

namespace {

const std::vector<MonadTag> kMonads{MonadTag::Maybe,           MonadTag::Exception,   MonadTag::Powerset,
                                    MonadTag::Subdistribution, MonadTag::GlobalState, MonadTag::Output};

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void check(bool ok, const std::string& line) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
};

std::string name(MonadTag tag) { return std::string(tagName(tag)); }

Presentation randomPresentation(Gen& gen, const KindRef& kind, std::size_t n, const std::vector<Carrier>& carrier) {
  GenericEffect gamma = randomEffect(gen, kind, n);
  std::vector<Carrier> row;
  for (std::size_t i = 0; i < n; ++i) row.push_back(gen.pick(carrier));
  return Presentation(std::move(gamma), std::move(row));
}

std::vector<Presentation> randomFamily(Gen& gen, const KindRef& kind, std::size_t n, std::size_t maxArity,
                                       const std::vector<Carrier>& carrier) {
  std::vector<Presentation> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(randomPresentation(gen, kind, gen.between(0, maxArity), carrier));
  return out;
}

std::vector<Presentation> postMap(const Presentation& xi, const FunctionTable& f) {
  std::vector<Presentation> out;
  for (const auto& x : xi.row()) out.push_back(decompose(f(x)));
  return out;
}

// 1. interpret(decompose(μ)) = μ.
Outcome representationRoundTrip() {
  Outcome out;
  const std::size_t perMonad = 600;
  for (MonadTag tag : kMonads) {
    std::vector<KindRef> kinds{defaultKind(tag)};
    if (tag == MonadTag::GlobalState) {
      kinds = {MonadKind::globalState({"l0"}), MonadKind::globalState({"l0", "l1"}),
               MonadKind::globalState({"l0", "l1", "l2"})};
    }
    std::size_t failures = 0, total = 0;
    Gen gen(mixSeed(1, static_cast<std::uint64_t>(tag)));
    for (std::size_t t = 0; t < perMonad; ++t) {
      const KindRef& kind = kinds[t % kinds.size()];
      const auto carrier = atoms(gen.between(1, 5));
      const MonadValue mu = randomValue(gen, kind, carrier, GenLimits{16, 3, 0});
      ++total;
      if (!(interpret(decompose(mu)) == mu)) ++failures;
    }
    out.check(failures == 0, name(tag) + ": " + std::to_string(total - failures) + "/" + std::to_string(total) +
                                 " exact round-trips");
  }
  return out;
}

// 2. Generic effect / operation bijection.
Outcome bijectionRoundTrip() {
  Outcome out;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    Gen gen(mixSeed(2, static_cast<std::uint64_t>(tag)));
    std::size_t effects = 0, effectFailures = 0;
    for (std::size_t t = 0; t < 250; ++t) {
      const std::size_t n = gen.between(0, 4);
      const GenericEffect gamma = randomEffect(gen, kind, n);
      ++effects;
      const GenericEffect back = opToEffect(effectToOp(gamma), n);
      if (!(back.body() == gamma.body()) || !diagramEq(Presentation(back, indices(n)), Presentation(gamma, indices(n)))) {
        ++effectFailures;
      }
    }
    out.check(effectFailures == 0, name(tag) + ": " + std::to_string(effects - effectFailures) + "/" +
                                       std::to_string(effects) + " effects survive op and back");

    // Signature operations, plus derived operations so that Maybe is covered.
    std::vector<DerivedOperation> ops;
    for (const auto& op : signature(*kind)) ops.push_back(signatureOp(kind, op));
    for (std::size_t n = 0; n <= 3; ++n) ops.push_back(effectToOp(randomEffect(gen, kind, n)));
    std::size_t tuples = 0, tupleFailures = 0;
    for (const auto& op : ops) {
      const DerivedOperation roundTrip = effectToOp(opToEffect(op, op.arity));
      const auto carrier = atoms(3);
      for (std::size_t t = 0; t < 60; ++t) {
        std::vector<MonadValue> args;
        for (std::size_t i = 0; i < op.arity; ++i) args.push_back(randomValue(gen, kind, carrier));
        ++tuples;
        if (!(roundTrip.apply(args) == op.apply(args))) ++tupleFailures;
      }
    }
    out.check(tupleFailures == 0, name(tag) + ": " + std::to_string(ops.size()) + " operations agree on " +
                                      std::to_string(tuples - tupleFailures) + "/" + std::to_string(tuples) +
                                      " argument tuples");
  }
  return out;
}

// 3. Algebraicity of signature and derived operations; a planted
// non-algebraic operation is caught.
Outcome algebraicity() {
  Outcome out;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    Gen gen(mixSeed(3, static_cast<std::uint64_t>(tag)));
    std::vector<DerivedOperation> ops;
    for (const auto& op : signature(*kind)) ops.push_back(signatureOp(kind, op));
    const std::size_t signatureCount = ops.size();
    for (std::size_t k = 0; k < 10; ++k) ops.push_back(effectToOp(randomEffect(gen, kind, gen.between(0, 4))));
    std::size_t passed = 0, minTrials = SIZE_MAX;
    std::string firstFailure;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const CheckReport r = checkAlgebraic(ops[i], 100, 3, mixSeed(3, i));
      minTrials = std::min(minTrials, r.trials);
      if (r.pass) {
        ++passed;
      } else if (firstFailure.empty()) {
        firstFailure = ops[i].name + ": " + r.counterexample->description;
      }
    }
    out.check(passed == ops.size() && minTrials >= 100,
              name(tag) + ": " + std::to_string(passed) + "/" + std::to_string(ops.size()) + " operations (" +
                  std::to_string(signatureCount) + " signature) algebraic, at least " + std::to_string(minTrials) +
                  " trials each" + (firstFailure.empty() ? "" : "; " + firstFailure));

    // Keeps only the first support element: not natural in the carrier.
    DerivedOperation planted;
    planted.name = "head";
    planted.arity = 1;
    planted.kind = kind;
    planted.fn = [kind](std::span<const MonadValue> args) {
      const auto s = support(args[0]);
      return s.empty() ? bottom(kind) : unit(kind, s.front());
    };
    const CheckReport r = checkAlgebraic(planted, 100, 3, 11);
    if (tag == MonadTag::Maybe) {
      // On Maybe this operation coincides with the identity, which is algebraic.
      out.check(r.pass, name(tag) + ": planted head operation is the identity here and passes");
    } else {
      out.check(!r.pass && r.counterexample.has_value(),
                name(tag) + ": planted head operation rejected" +
                    (r.counterexample ? " with " + r.counterexample->description + " lhs=" + r.counterexample->lhs +
                                            " rhs=" + r.counterexample->rhs
                                      : std::string()));
    }
  }
  return out;
}

// 4. Composition against the direct bind, associativity, unit laws.
Outcome composition() {
  Outcome out;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    Gen gen(mixSeed(4, static_cast<std::uint64_t>(tag)));
    std::size_t homFail = 0, assocFail = 0, unitFail = 0;
    const std::size_t instances = 320;
    for (std::size_t t = 0; t < instances; ++t) {
      const auto carrier = atoms(gen.between(1, 4));
      const Presentation xi = randomPresentation(gen, kind, gen.between(0, 3), carrier);
      const auto rho = randomFamily(gen, kind, xi.effect().arity(), 3, carrier);

      const MonadValue oracle = effdiag::bind(xi.effect().body(), [&](const Carrier& i) {
        return interpret(rho[static_cast<std::size_t>(i.index() - 1)]);
      });
      const Presentation composed = seqCompose(xi, rho);
      std::size_t expectedArity = 0;
      std::vector<Carrier> expectedRow;
      for (const auto& r : rho) {
        expectedArity += r.effect().arity();
        expectedRow.insert(expectedRow.end(), r.row().begin(), r.row().end());
      }
      if (!(interpret(composed) == oracle) || composed.effect().arity() != expectedArity ||
          composed.row() != expectedRow) {
        ++homFail;
      }

      std::size_t total = 0;
      for (const auto& r : rho) total += r.effect().arity();
      const auto tau = randomFamily(gen, kind, total, 2, carrier);
      std::vector<Presentation> inner;
      std::size_t offset = 0;
      for (const auto& r : rho) {
        const std::size_t m = r.effect().arity();
        inner.push_back(seqCompose(r, std::vector<Presentation>(tau.begin() + static_cast<std::ptrdiff_t>(offset),
                                                                tau.begin() + static_cast<std::ptrdiff_t>(offset + m))));
        offset += m;
      }
      if (!diagramEq(seqCompose(composed, tau), seqCompose(xi, inner))) ++assocFail;

      const Presentation wrapper(trivialEffect(kind), {gen.pick(carrier)});
      std::vector<Presentation> units;
      for (const auto& x : xi.row()) units.emplace_back(trivialEffect(kind), std::vector<Carrier>{x});
      if (!diagramEq(seqCompose(wrapper, {xi}), xi) || !diagramEq(seqCompose(xi, units), xi)) ++unitFail;
    }
    out.check(homFail + assocFail + unitFail == 0,
              name(tag) + ": " + std::to_string(instances) + " instances; homomorphism failures " +
                  std::to_string(homFail) + ", associativity " + std::to_string(assocFail) + ", unit " +
                  std::to_string(unitFail));
  }
  return out;
}

// 5. decompose(μ >>= f) =_I ξ composed with the decomposed images of f.
Outcome binding() {
  Outcome out;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    Gen gen(mixSeed(5, static_cast<std::uint64_t>(tag)));
    std::size_t failures = 0;
    const std::size_t trials = 220;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto carrier = atoms(gen.between(1, 4));
      const MonadValue mu = randomValue(gen, kind, carrier);
      const FunctionTable f = randomFunction(gen, kind, carrier, atoms(3, "y"));
      const Presentation xi = decompose(mu);
      if (!diagramEq(decompose(effdiag::bind(mu, f.fn())), seqCompose(xi, postMap(xi, f)))) ++failures;
    }
    out.check(failures == 0,
              name(tag) + ": " + std::to_string(trials - failures) + "/" + std::to_string(trials) + " (μ, f) pairs");
  }
  return out;
}

// 6. Order laws, right absorption, commutativity.
Outcome orderLaws() {
  Outcome out;
  const std::size_t trials = 220;
  std::set<MonadTag> absorbing;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    Gen gen(mixSeed(6, static_cast<std::uint64_t>(tag)));
    const Presentation bottom0(bottomEffect(kind, 0), {});
    std::size_t least = 0, collapse = 0, rule1 = 0, rule2 = 0, branches = 0;
    std::size_t absorbFail = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto carrier = atoms(gen.between(1, 3));
      const std::size_t n = gen.between(0, 3);
      const MonadValue mu = randomValue(gen, kind, carrier);
      if (leq(bottom(kind), mu) && diagramLeq(bottom0, decompose(mu))) ++least;

      std::vector<Carrier> row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(gen.pick(carrier));
      if (diagramEq(Presentation(bottomEffect(kind, n), row), bottom0)) ++collapse;

      const Presentation lower = decompose(randomBelow(gen, mu));
      const Presentation upper = decompose(mu);
      const FunctionTable f = randomFunction(gen, kind, carrier, atoms(3, "y"));
      if (diagramLeq(lower, upper) && diagramLeq(seqCompose(lower, postMap(lower, f)), seqCompose(upper, postMap(upper, f)))) {
        ++rule1;
      }

      const Presentation xi = randomPresentation(gen, kind, n, carrier);
      const FunctionTable g = randomFunction(gen, kind, carrier, atoms(3, "y"));
      const FunctionTable gBelow = randomFunctionBelow(gen, g);
      if (diagramLeq(seqCompose(xi, postMap(xi, gBelow)), seqCompose(xi, postMap(xi, g)))) ++rule2;

      std::vector<Presentation> hi, lo;
      for (std::size_t i = 0; i < n; ++i) {
        const MonadValue branch = randomValue(gen, kind, carrier);
        hi.push_back(decompose(branch));
        lo.push_back(decompose(randomBelow(gen, branch)));
      }
      if (diagramLeq(seqCompose(xi, lo), seqCompose(xi, hi))) ++branches;

      if (!diagramEq(seqCompose(xi, std::vector<Presentation>(n, bottom0)), bottom0)) ++absorbFail;
    }
    auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(trials); };
    out.check(least == trials && collapse == trials && rule1 == trials && rule2 == trials && branches == trials,
              name(tag) + ": bottom least " + frac(least) + ", collapse " + frac(collapse) + ", monotone in the diagram " +
                  frac(rule1) + ", in the function " + frac(rule2) + ", in the branches " + frac(branches));
    if (absorbFail == 0) absorbing.insert(tag);
  }

  const std::set<MonadTag> stated{MonadTag::Maybe, MonadTag::Exception, MonadTag::Powerset, MonadTag::Subdistribution};
  auto list = [](const std::set<MonadTag>& tags) {
    std::string s;
    for (MonadTag t : tags) s += (s.empty() ? "" : ", ") + name(t);
    return "{" + s + "}";
  };
  out.check(absorbing == stated, "right bottom absorption holds on " + list(absorbing) + "; required set " + list(stated));
  if (absorbing != stated) {
    const KindRef exc = defaultKind(MonadTag::Exception);
    const Presentation raise(opToEffect(exc, OpDescriptor::raise("e1"), 0), {});
    out.note("     Exception: raise[e1] composed with no branches is " +
             renderValue(interpret(seqCompose(raise, {}))) + ", not ↑");
    const KindRef st = defaultKind(MonadTag::GlobalState);
    const Presentation w(opToEffect(st, OpDescriptor::write("l0", true), 1), {Carrier::atom("a")});
    out.note("     GlobalState: write[l0,1] over ⊥ is " +
             renderValue(interpret(seqCompose(w, {Presentation(bottomEffect(st, 0), {})}))) +
             ", so it absorbs although it is not commutative");
  }

  std::set<MonadTag> noncommutative;
  for (MonadTag tag : kMonads) {
    const CheckReport r = checkCommutative(defaultKind(tag), 200, mixSeed(66, static_cast<std::uint64_t>(tag)));
    if (!r.pass) {
      noncommutative.insert(tag);
      out.note("     commutativity fails on " + name(tag) + ": " + r.counterexample->description + "; " +
               r.counterexample->lhs + " vs " + r.counterexample->rhs);
    }
  }
  out.check(noncommutative.count(MonadTag::Output) && noncommutative.count(MonadTag::GlobalState),
            "commutativity checker fails with counterexamples on " + list(noncommutative));
  return out;
}

std::optional<std::size_t> churchValue(const Carrier& c) {
  if (c.isIndex()) return std::nullopt;
  const KindRef out = MonadKind::output("a");
  const TermPtr probe = Term::app(Term::app(c.term(), parse("\\y. print[a](y)")), Term::var("u"));
  const MonadValue r = eval(probe, out, Fuel{200});
  const auto& data = r.as<OutputData>();
  if (!data.value || !(*data.value == Carrier::atom("u"))) return std::nullopt;
  return data.text.size();
}

// 7. Fixed evaluator checks.
Outcome evaluator() {
  Outcome out;
  const Prelude prelude = Prelude::standard();

  const KindRef dist = MonadKind::subdistribution();
  const Carrier v = Carrier::atom("v"), w = Carrier::atom("w");
  const Rational half(1, 2);
  // Independent mixture: ½·δv + ½·(½·δv + ½·δw).
  const Rational pv = half * 1 + half * (half * 1 + half * 0);
  const Rational pw = half * 0 + half * (half * 0 + half * 1);
  const MonadValue expectedMix = distValue(dist, {{v, pv}, {w, pw}});
  const MonadValue mix = eval(parse("choice(v, choice(v,w))", prelude), dist, Fuel{10});
  out.check(mix == expectedMix, "choice(v, choice(v,w)) = " + renderValue(mix) + ", expected " + renderValue(expectedMix));

  const KindRef output = MonadKind::output("ab");
  const MonadValue printed = eval(parse("print[a](print[b](v))", prelude), output, Fuel{10});
  const MonadValue expectedPrint = outputValue(output, std::string("a") + std::string("b"), v);
  out.check(printed == expectedPrint, "print[a](print[b](v)) = " + renderValue(printed));

  bool omegaBottom = true;
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    for (std::size_t fuel : {1, 10, 100}) {
      if (!isBottom(eval(parse("OMEGA", prelude), kind, Fuel{fuel}))) omegaBottom = false;
    }
  }
  out.check(omegaBottom, "OMEGA is ⊥ at fuels 1, 10, 100 in every monad");

  const KindRef powerset = MonadKind::powerset();
  const TermPtr recursion = parse("Z (\\e.\\x. union(x, e (succ x))) zero", prelude);
  std::vector<std::set<Carrier>> chain;
  std::string sizes;
  bool numerals = true;
  for (std::size_t fuel : {5, 10, 15, 20, 25}) {
    chain.push_back(eval(recursion, powerset, Fuel{fuel}).as<PowersetData>().elements);
    std::set<std::size_t> values;
    for (const auto& c : chain.back()) {
      auto k = churchValue(c);
      if (!k) numerals = false;
      else values.insert(*k);
    }
    // The numerals reached form an initial segment 0..k.
    if (values.size() != chain.back().size() || (!values.empty() && *values.rbegin() + 1 != values.size())) {
      numerals = false;
    }
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(fuel) + "→" + std::to_string(chain.back().size());
  }
  bool increasing = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const bool subset = std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(), chain[i].end());
    if (!subset || chain[i].size() >= chain[i + 1].size()) increasing = false;
  }
  out.check(increasing && numerals, "recursion chain strictly increasing, sets of numerals 0..k (fuel→size: " + sizes + ")");
  return out;
}

std::vector<std::string> programPool(MonadTag tag) {
  std::vector<std::string> pool{"v", "w", "\\x. x", "OMEGA", "(\\x. x) v", "id w", "(\\x. \\y. x) v w"};
  switch (tag) {
    case MonadTag::Maybe: break;
    case MonadTag::Exception: pool.insert(pool.end(), {"raise[e1]", "(\\x. raise[e2]) v"}); break;
    case MonadTag::Powerset: pool.insert(pool.end(), {"union(v, w)", "union(v, OMEGA)", "union(w, (\\x. x) v)"}); break;
    case MonadTag::Subdistribution: pool.insert(pool.end(), {"choice(v, w)", "choice(v, OMEGA)", "choice(w, choice(v, w))"}); break;
    case MonadTag::GlobalState:
      pool.insert(pool.end(), {"read[l0](v, w)", "write[l0,1](read[l0](v, w))", "write[l1,0](v)", "read[l1](OMEGA, w)"});
      break;
    case MonadTag::Output: pool.insert(pool.end(), {"print[a](v)", "print[b](print[a](w))", "print[a](OMEGA)"}); break;
  }
  return pool;
}

// 8. Evaluation respects =_I.
Outcome congruence() {
  Outcome out;
  const Prelude prelude = Prelude::standard();
  for (MonadTag tag : kMonads) {
    const KindRef kind = defaultKind(tag);
    std::vector<Carrier> pool;
    for (const auto& src : programPool(tag)) pool.push_back(Carrier::term(parse(src, prelude)));
    Gen gen(mixSeed(8, static_cast<std::uint64_t>(tag)));
    std::size_t pairs = 0, premiseFail = 0, failures = 0;
    for (std::size_t t = 0; t < 120; ++t) {
      const Presentation xi = randomPresentation(gen, kind, gen.between(0, 3), pool);
      const std::size_t n = xi.effect().arity();
      const std::size_t m = n + gen.between(0, 2);
      std::vector<std::size_t> slots(m);
      std::iota(slots.begin(), slots.end(), 1);
      for (std::size_t i = 0; i + 1 < m; ++i) std::swap(slots[i], slots[i + gen.below(m - i)]);
      std::vector<Carrier> fill;
      for (std::size_t i = n; i < m; ++i) fill.push_back(gen.pick(pool));
      Presentation rho = extend(xi, std::vector<std::size_t>(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(n)),
                                m, fill);
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 1);
      for (std::size_t i = 0; i + 1 < m; ++i) std::swap(perm[i], perm[i + gen.below(m - i)]);
      rho = permute(rho, perm);
      ++pairs;
      if (!diagramEq(xi, rho)) ++premiseFail;
      if (!diagramEq(evalMonadicTerm(xi, kind, Fuel{10}), evalMonadicTerm(rho, kind, Fuel{10}))) ++failures;
    }
    out.check(premiseFail == 0 && failures == 0, name(tag) + ": " + std::to_string(pairs - failures) + "/" +
                                                     std::to_string(pairs) + " equal pairs stay equal after evaluation");
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expectFail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expectFail.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "representation round-trip", representationRoundTrip},
      {2, "effect/operation bijection round-trip", bijectionRoundTrip},
      {3, "algebraicity", algebraicity},
      {4, "composition homomorphism, associativity, unit laws", composition},
      {5, "binding", binding},
      {6, "order laws, bottom absorption, commutativity", orderLaws},
      {7, "evaluator fixed checks", evaluator},
      {8, "congruence under evaluation", congruence},
  };

  bool asExpected = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = expectFail.count(c.id) ? !o.pass : o.pass;
    asExpected = asExpected && expected;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ")"
              << (expectFail.count(c.id) ? (o.pass ? "  [expected to fail, but passed]" : "  [known failure]") : "")
              << "\n";
    for (const auto& d : o.details) std::cout << "      " << d << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << "s; " << (asExpected ? "all outcomes as expected" : "UNEXPECTED OUTCOME") << "\n";
  return asExpected ? 0 : 1;
}
