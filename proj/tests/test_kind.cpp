#include <doctest.h>

#include "effdiag/error.hpp"
#include "effdiag/kind.hpp"

using namespace effdiag;

TEST_SUITE("kind") {
  TEST_CASE("monad tags round-trip through their names") {
    for (MonadTag tag : {MonadTag::Maybe, MonadTag::Exception, MonadTag::Powerset, MonadTag::Subdistribution,
                         MonadTag::GlobalState, MonadTag::Output}) {
      CHECK(parseTag(tagName(tag)) == tag);
    }
    CHECK(parseTag("exc") == MonadTag::Exception);
    CHECK(parseTag("set") == MonadTag::Powerset);
    CHECK_FALSE(parseTag("continuation").has_value());
  }

  TEST_CASE("parameters must be non-empty and duplicate-free") {
    CHECK_THROWS_AS(MonadKind::exception({}), InvalidValue);
    CHECK_THROWS_AS(MonadKind::exception({"e", "e"}), InvalidValue);
    CHECK_THROWS_AS(MonadKind::globalState({}), InvalidValue);
    CHECK_THROWS_AS(MonadKind::globalState({"l", "l"}), InvalidValue);
    CHECK_THROWS_AS(MonadKind::output(""), InvalidValue);
    CHECK_THROWS_AS(MonadKind::output("aa"), InvalidValue);
  }

  TEST_CASE("the location count is capped") {
    CHECK_NOTHROW(MonadKind::globalState({"a", "b", "c", "d"}));
    CHECK_THROWS_AS(MonadKind::globalState({"a", "b", "c", "d", "e"}), InvalidValue);
    CHECK_NOTHROW(MonadKind::globalState({"a", "b", "c", "d", "e"}, 5));
    CHECK(MonadKind::globalState({"a", "b", "c"})->storeCount() == 8);
  }

  TEST_CASE("operation arities") {
    CHECK(OpDescriptor::raise("e").arity() == 0);
    CHECK(OpDescriptor::unionOp().arity() == 2);
    CHECK(OpDescriptor::choice().arity() == 2);
    CHECK(OpDescriptor::read("l").arity() == 2);
    CHECK(OpDescriptor::write("l", true).arity() == 1);
    CHECK(OpDescriptor::print('c').arity() == 1);
  }

  TEST_CASE("spellings") {
    CHECK(OpDescriptor::raise("e").spelling() == "raise[e]");
    CHECK(OpDescriptor::unionOp().spelling() == "union");
    CHECK(OpDescriptor::write("l", true).spelling() == "write[l,1]");
    CHECK(OpDescriptor::print('a').spelling() == "print[a]");
  }

  TEST_CASE("signatures list each operation once") {
    CHECK(signature(*MonadKind::maybe()).empty());
    CHECK(signature(*MonadKind::exception({"a", "b"})).size() == 2);
    CHECK(signature(*MonadKind::powerset()).size() == 1);
    CHECK(signature(*MonadKind::subdistribution()).size() == 1);
    CHECK(signature(*MonadKind::globalState({"x", "y"})).size() == 6);
    CHECK(signature(*MonadKind::output("abc")).size() == 3);
  }

  TEST_CASE("operations outside the signature are rejected") {
    CHECK_THROWS_AS(checkInSignature(*MonadKind::maybe(), OpDescriptor::choice()), SignatureError);
    CHECK_THROWS_AS(checkInSignature(*MonadKind::exception({"e"}), OpDescriptor::raise("f")), SignatureError);
    CHECK_THROWS_AS(checkInSignature(*MonadKind::globalState({"l"}), OpDescriptor::read("m")), SignatureError);
    CHECK_THROWS_AS(checkInSignature(*MonadKind::output("ab"), OpDescriptor::print('c')), SignatureError);
    CHECK_NOTHROW(checkInSignature(*MonadKind::output("ab"), OpDescriptor::print('b')));
  }

  TEST_CASE("kinds compare by value") {
    CHECK(sameKind(MonadKind::exception({"a"}), MonadKind::exception({"a"})));
    CHECK_FALSE(sameKind(MonadKind::exception({"a"}), MonadKind::exception({"b"})));
    CHECK_FALSE(sameKind(MonadKind::maybe(), MonadKind::powerset()));
  }
}
