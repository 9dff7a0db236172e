#include <doctest.h>

#include "effdiag/error.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

KindRef dist() { return MonadKind::subdistribution(); }

GenericEffect distEffect(std::vector<Rational> weights) {
  std::vector<std::pair<Carrier, Rational>> w;
  for (std::size_t i = 0; i < weights.size(); ++i) w.emplace_back(ix(static_cast<std::int64_t>(i + 1)), weights[i]);
  return GenericEffect(weights.size(), distValue(dist(), w));
}

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("interpret") {
    const auto maybe = MonadKind::maybe();
    CHECK(interpret(Presentation(trivialEffect(maybe), {at("x")})) == unit(maybe, at("x")));
    // Two formal sums for the same Dirac distribution.
    CHECK(interpret(Presentation(distEffect({q(1, 2), q(1, 2)}), {at("x"), at("x")})) == unit(dist(), at("x")));
    const auto set = MonadKind::powerset();
    const GenericEffect gamma(3, setValue(set, {ix(1), ix(3)}));
    CHECK(interpret(Presentation(gamma, {at("a"), at("b"), at("a")})) == setValue(set, {at("a")}));
  }

  TEST_CASE("decompose") {
    const auto maybe = MonadKind::maybe();
    const Presentation h = decompose(unit(maybe, at("x")));
    CHECK(h.effect() == trivialEffect(maybe));
    CHECK(h.row() == std::vector{at("x")});

    const Presentation d = decompose(distValue(dist(), {{at("b"), q(2, 3)}, {at("a"), q(1, 3)}}));
    CHECK(d.row() == std::vector{at("a"), at("b")});
    CHECK(d.effect() == distEffect({q(1, 3), q(2, 3)}));

    for (MonadTag tag : allMonads()) {
      const Presentation b = decompose(bottom(defaultKind(tag)));
      CHECK(b.effect().arity() == 0);
      CHECK(b.row().empty());
    }
  }

  TEST_CASE("decompose is a section of interpret and is minimal") {
    for (MonadTag tag : allMonads()) {
      const KindRef kind = defaultKind(tag);
      Gen gen(21 + static_cast<std::size_t>(tag));
      for (int t = 0; t < 200; ++t) {
        const MonadValue mu = randomValue(gen, kind, atoms(gen.between(1, 5)));
        const Presentation xi = decompose(mu);
        CHECK(interpret(xi) == mu);
        CHECK(xi.row() == support(mu));
        CHECK(std::set<Carrier>(xi.row().begin(), xi.row().end()).size() == xi.row().size());
        CHECK(decompose(mu) == xi);
      }
    }
  }

  TEST_CASE("diagram equality") {
    const Presentation fair(distEffect({q(1, 2), q(1, 2)}), {at("x"), at("x")});
    const Presentation dirac(distEffect({q(1, 1)}), {at("x")});
    CHECK(diagramEq(fair, dirac));
    CHECK(diagramEq(fair, fair));
    CHECK_FALSE(diagramEq(dirac, Presentation(distEffect({q(1, 1)}), {at("y")})));
    CHECK_THROWS_AS(diagramEq(dirac, Presentation(trivialEffect(MonadKind::maybe()), {at("x")})), KindMismatch);
  }

  TEST_CASE("diagram order") {
    const Presentation half(distEffect({q(1, 2)}), {at("x")});
    const Presentation one(distEffect({q(1, 1)}), {at("x")});
    CHECK(diagramLeq(half, one));
    CHECK_FALSE(diagramLeq(one, half));
    CHECK(diagramLeq(Presentation(bottomEffect(dist(), 0), {}), one));
    CHECK(diagramLeq(one, one));
  }

  TEST_CASE("the order's kernel is diagram equality") {
    for (MonadTag tag : allMonads()) {
      const KindRef kind = defaultKind(tag);
      Gen gen(41 + static_cast<std::size_t>(tag));
      for (int t = 0; t < 100; ++t) {
        const auto xs = atoms(2);
        const Presentation a(randomEffect(gen, kind, 2), {xs[gen.below(2)], xs[gen.below(2)]});
        const Presentation b(randomEffect(gen, kind, 2), {xs[gen.below(2)], xs[gen.below(2)]});
        CHECK((diagramLeq(a, b) && diagramLeq(b, a)) == diagramEq(a, b));
      }
    }
  }

  TEST_CASE("extend") {
    const Presentation one(distEffect({q(1, 1)}), {at("x")});
    const Presentation ext = extend(one, {1}, 3, {at("y"), at("z")});
    CHECK(ext.effect() == GenericEffect(3, distValue(dist(), {{ix(1), q(1, 1)}})));
    CHECK(ext.row() == std::vector{at("x"), at("y"), at("z")});
    CHECK(diagramEq(ext, one));

    const Presentation xi(distEffect({q(1, 3), q(1, 3)}), {at("a"), at("b")});
    CHECK(extend(xi, {1, 2}, 2, {}) == xi);

    const Presentation bot(bottomEffect(dist(), 0), {});
    const Presentation bot2 = extend(bot, {}, 2, {at("a"), at("b")});
    CHECK(bot2.effect() == bottomEffect(dist(), 2));
    CHECK(diagramEq(bot2, bot));
  }

  TEST_CASE("extend validates its arguments") {
    const Presentation xi(distEffect({q(1, 3), q(1, 3)}), {at("a"), at("b")});
    CHECK_THROWS_AS(extend(xi, {1, 1}, 3, {at("c")}), ArityError);
    CHECK_THROWS_AS(extend(xi, {1, 4}, 3, {at("c")}), ArityError);
    CHECK_THROWS_AS(extend(xi, {1, 2}, 3, {}), ArityError);
    CHECK_THROWS_AS(extend(xi, {1}, 3, {at("c"), at("d")}), ArityError);
  }

  TEST_CASE("extension and permutation never change the interpretation") {
    for (MonadTag tag : allMonads()) {
      const KindRef kind = defaultKind(tag);
      Gen gen(51 + static_cast<std::size_t>(tag));
      for (int t = 0; t < 100; ++t) {
        const auto xs = atoms(3);
        const std::size_t n = gen.between(0, 3);
        std::vector<Carrier> row;
        for (std::size_t i = 0; i < n; ++i) row.push_back(gen.pick(xs));
        const Presentation xi(randomEffect(gen, kind, n), row);
        std::vector<std::size_t> targets{1, 2, 3, 4, 5};
        for (std::size_t i = 0; i + 1 < targets.size(); ++i) std::swap(targets[i], targets[i + gen.below(targets.size() - i)]);
        const std::vector<std::size_t> injection(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<Carrier> fill(5 - n, xs[0]);
        const Presentation ext = extend(xi, injection, 5, fill);
        CHECK(diagramEq(ext, xi));
        std::vector<std::size_t> perm{5, 3, 1, 2, 4};
        CHECK(diagramEq(permute(ext, perm), xi));
      }
    }
  }

  TEST_CASE("permute rejects non-permutations") {
    const Presentation xi(distEffect({q(1, 3), q(1, 3)}), {at("a"), at("b")});
    CHECK_THROWS_AS(permute(xi, {1, 1}), ArityError);
    CHECK_THROWS_AS(permute(xi, {1, 2, 3}), ArityError);
    const Presentation swapped = permute(xi, {2, 1});
    CHECK(swapped.row() == std::vector{at("b"), at("a")});
  }

  TEST_CASE("effect construction checks the arity cap and the support") {
    const auto set = MonadKind::powerset();
    CHECK_THROWS_AS(GenericEffect(65, bottom(set)), ArityError);
    CHECK_NOTHROW(GenericEffect(64, bottom(set)));
    CHECK_NOTHROW(GenericEffect(65, bottom(set), 100));
    CHECK_THROWS_AS(GenericEffect(2, setValue(set, {ix(3)})), ArityError);
    CHECK_THROWS_AS(GenericEffect(2, setValue(set, {at("a")})), ArityError);
    CHECK_THROWS_AS(Presentation(GenericEffect(2, bottom(set)), {at("a")}), ArityError);
  }

  TEST_CASE("text rendering") {
    const auto maybe = MonadKind::maybe();
    CHECK(render(Presentation(trivialEffect(maybe), {at("v")}), RenderFormat::Text) == "[η ‖ 1→v]");
    CHECK(render(Presentation(distEffect({q(1, 2), q(1, 2)}), {at("a"), at("b")}), RenderFormat::Text) ==
          "[1/2,1/2 ‖ 1→a ; 2→b]");
    CHECK(render(Presentation(bottomEffect(maybe, 0), {}), RenderFormat::Text) == "[⊥ ‖ ]");
    const auto out = MonadKind::output("ab");
    CHECK(render(Presentation(GenericEffect(1, outputValue(out, "ab", ix(1))), {at("v")}), RenderFormat::Text) ==
          "[(ab, 1) ‖ 1→v]");
    const auto set = MonadKind::powerset();
    CHECK(render(Presentation(GenericEffect(3, setValue(set, {ix(1), ix(3)})), {at("a"), at("b"), at("c")}),
                 RenderFormat::Text) == "[{1,3} ‖ 1→a ; 2→b ; 3→c]");
    const auto exc = MonadKind::exception({"e"});
    CHECK(render(Presentation(GenericEffect(0, raisedValue(exc, "e")), {}), RenderFormat::Text) == "[raise[e] ‖ ]");
  }

  TEST_CASE("machine rendering is the canonical serialization") {
    const Presentation xi(distEffect({q(1, 2), q(1, 2)}), {at("a"), at("b")});
    const std::string json = render(xi, RenderFormat::Machine);
    CHECK(json == toJson(xi));
    CHECK(json.find("\"arity\":2") != std::string::npos);
    CHECK(presentationFromJson(json) == xi);
  }
}
