#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace effdiag {

enum class MonadTag : std::uint8_t { Maybe, Exception, Powerset, Subdistribution, GlobalState, Output };

inline constexpr std::size_t kDefaultLocationCap = 4;

std::string_view tagName(MonadTag tag);
/// Accepts the canonical names ("maybe", "exception", "powerset", "dist",
/// "state", "output") and a few aliases.
std::optional<MonadTag> parseTag(std::string_view name);

class MonadKind;
using KindRef = std::shared_ptr<const MonadKind>;

/// One of the six monad instances together with its parameters.
///
/// Parameters are only meaningful for the tag that uses them: exception labels
/// for Exception, locations for GlobalState, alphabet characters for Output.
/// All lists are finite, non-empty where required, and duplicate-free.
class MonadKind {
 public:
  static KindRef maybe();
  static KindRef exception(std::vector<std::string> labels);
  static KindRef powerset();
  static KindRef subdistribution();
  static KindRef globalState(std::vector<std::string> locations, std::size_t locationCap = kDefaultLocationCap);
  static KindRef output(std::string alphabet);

  MonadTag tag() const { return tag_; }
  const std::vector<std::string>& exceptions() const { return exceptions_; }
  const std::vector<std::string>& locations() const { return locations_; }
  const std::string& alphabet() const { return alphabet_; }

  /// Number of stores, 2^|L|. Only meaningful for GlobalState.
  std::uint32_t storeCount() const { return std::uint32_t{1} << locations_.size(); }
  std::optional<std::size_t> locationIndex(std::string_view name) const;
  bool hasException(std::string_view label) const;
  bool inAlphabet(char c) const { return alphabet_.find(c) != std::string::npos; }

  /// Human-readable description, e.g. "exception{a,b}".
  std::string describe() const;

  friend bool operator==(const MonadKind&, const MonadKind&) = default;

 private:
  MonadKind() = default;

  MonadTag tag_ = MonadTag::Maybe;
  std::vector<std::string> exceptions_;
  std::vector<std::string> locations_;
  std::string alphabet_;
};

bool sameKind(const KindRef& a, const KindRef& b);

enum class OpName : std::uint8_t { Raise, Union, Choice, Read, Write, Print };

/// A named algebraic operation of some signature: raise_e/0, union/2,
/// choice/2, read_l/2, write_{l,b}/1, print_c/1.
struct OpDescriptor {
  OpName name = OpName::Union;
  /// Exception label, location or character; empty for union/choice.
  std::string label;
  /// Written bit, write only.
  bool bit = false;

  static OpDescriptor raise(std::string label) { return {OpName::Raise, std::move(label), false}; }
  static OpDescriptor unionOp() { return {OpName::Union, {}, false}; }
  static OpDescriptor choice() { return {OpName::Choice, {}, false}; }
  static OpDescriptor read(std::string location) { return {OpName::Read, std::move(location), false}; }
  static OpDescriptor write(std::string location, bool bit) { return {OpName::Write, std::move(location), bit}; }
  static OpDescriptor print(char c) { return {OpName::Print, std::string(1, c), false}; }

  std::size_t arity() const;
  MonadTag monad() const;
  /// Concrete syntax, e.g. "print[a]", "write[l,1]", "union".
  std::string spelling() const;

  friend bool operator==(const OpDescriptor&, const OpDescriptor&) = default;
  friend auto operator<=>(const OpDescriptor&, const OpDescriptor&) = default;
};

std::string_view opKeyword(OpName name);
std::optional<OpName> parseOpKeyword(std::string_view word);

/// Every operation the monad provides, in a fixed order.
std::vector<OpDescriptor> signature(const MonadKind& kind);

/// Throws SignatureError unless `op` belongs to `kind`'s signature.
void checkInSignature(const MonadKind& kind, const OpDescriptor& op);

}  // namespace effdiag
