#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "effdiag/carrier.hpp"
#include "effdiag/kind.hpp"
#include "effdiag/rational.hpp"

namespace effdiag {

struct Diverge {
  friend bool operator==(const Diverge&, const Diverge&) = default;
};

struct Raised {
  std::string label;
  friend bool operator==(const Raised&, const Raised&) = default;
};

struct MaybeData {
  std::optional<Carrier> value;  // nullopt: divergence
  friend bool operator==(const MaybeData&, const MaybeData&) = default;
};

struct ExceptionData {
  std::variant<Diverge, Carrier, Raised> result;
  friend bool operator==(const ExceptionData&, const ExceptionData&) = default;
};

struct PowersetData {
  std::set<Carrier> elements;
  friend bool operator==(const PowersetData&, const PowersetData&) = default;
};

struct DistData {
  /// Strictly positive weights, total mass at most one.
  std::map<Carrier, Rational> weights;
  friend bool operator==(const DistData&, const DistData&) = default;
};

/// A store is a bit mask over the kind's locations: bit k holds location k.
using Store = std::uint32_t;

struct StateResult {
  Carrier value;
  Store store;
  friend bool operator==(const StateResult&, const StateResult&) = default;
};

struct StateData {
  /// One entry per store; nullopt means divergence from that store.
  std::vector<std::optional<StateResult>> byStore;
  friend bool operator==(const StateData&, const StateData&) = default;
};

struct OutputData {
  std::string text;
  std::optional<Carrier> value;  // nullopt: divergent tail
  friend bool operator==(const OutputData&, const OutputData&) = default;
};

/// An element of T(X) for one of the six monads.
///
/// Values are immutable; the constructor validates the per-kind invariants.
class MonadValue {
 public:
  using Data = std::variant<MaybeData, ExceptionData, PowersetData, DistData, StateData, OutputData>;

  /// Throws InvalidValue when `data` does not fit `kind`.
  MonadValue(KindRef kind, Data data);

  const KindRef& kind() const { return kind_; }
  MonadTag tag() const { return kind_->tag(); }
  const Data& data() const { return data_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(data_);
  }

  friend bool operator==(const MonadValue& a, const MonadValue& b);

 private:
  KindRef kind_;
  Data data_;
};

using Kleisli = std::function<MonadValue(const Carrier&)>;
using CarrierMap = std::function<Carrier(const Carrier&)>;

/// η(x). For GlobalState σ ↦ (x, σ); for Output ("", x).
MonadValue unit(const KindRef& kind, const Carrier& x);

/// μ >>= f. Throws KindMismatch if f returns a value of another monad.
MonadValue bind(const MonadValue& mu, const Kleisli& f);

/// Functorial action T(g).
MonadValue mapCarrier(const MonadValue& mu, const CarrierMap& g);

/// Apply a signature operation. The kind is explicit so that nullary
/// operations (raise) know which monad to build in.
MonadValue opApply(const KindRef& kind, const OpDescriptor& op, std::span<const MonadValue> args);

/// Smallest carrier subset A with μ ∈ T(A), in canonical order.
std::vector<Carrier> support(const MonadValue& mu);

/// The instance order ⊑. Throws KindMismatch on different kinds.
bool leq(const MonadValue& mu, const MonadValue& nu);

/// Least element: ↑, ∅, the zero subdistribution, σ ↦ ↑, ("", ↑).
MonadValue bottom(const KindRef& kind);

bool isBottom(const MonadValue& mu);

/// Total mass of a subdistribution. Throws KindMismatch for other monads.
Rational totalMass(const MonadValue& mu);

/// Throws KindMismatch unless the kinds are equal.
void requireSameKind(const MonadValue& a, const MonadValue& b, const char* what);

// Convenience constructors.
MonadValue maybeValue(const KindRef& kind, std::optional<Carrier> value);
MonadValue raisedValue(const KindRef& kind, const std::string& label);
MonadValue setValue(const KindRef& kind, std::set<Carrier> elements);
/// Zero weights are dropped.
MonadValue distValue(const KindRef& kind, const std::vector<std::pair<Carrier, Rational>>& weights);
MonadValue outputValue(const KindRef& kind, std::string text, std::optional<Carrier> value);
MonadValue stateValue(const KindRef& kind, std::vector<std::optional<StateResult>> byStore);

}  // namespace effdiag
