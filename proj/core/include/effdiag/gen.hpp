#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "effdiag/presentation.hpp"

namespace effdiag {

/// Seeded generators for monadic values, generic effects and Kleisli maps.
/// Everything here is deterministic for a given seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den);

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Mix several words into one seed (splitmix64 finalizer).
std::uint64_t mixSeed(std::uint64_t a, std::uint64_t b);

struct GenLimits {
  std::size_t maxDenominator = 16;
  std::size_t maxOutputLength = 3;
  /// 0: arbitrary values; 1: short outputs, halves only; 2: only η or ⊥.
  int simplicity = 0;
};

/// Atoms `a`, `b`, `c`, ... (with `prefix`, `p0`, `p1`, ...).
std::vector<Carrier> atoms(std::size_t n, const std::string& prefix = "");
/// Index carriers 1..n.
std::vector<Carrier> indices(std::size_t n);

MonadValue randomValue(Gen& gen, const KindRef& kind, const std::vector<Carrier>& carrier,
                       const GenLimits& limits = {});
GenericEffect randomEffect(Gen& gen, const KindRef& kind, std::size_t arity, const GenLimits& limits = {});

/// A random element ν with ν ⊑ μ.
MonadValue randomBelow(Gen& gen, const MonadValue& mu);

/// A finite Kleisli map stored as a table, so it can be printed and replayed.
struct FunctionTable {
  KindRef kind;
  std::map<Carrier, MonadValue> table;

  /// Carriers outside the table map to ⊥.
  MonadValue operator()(const Carrier& x) const;
  Kleisli fn() const;
  std::string describe() const;
};

FunctionTable randomFunction(Gen& gen, const KindRef& kind, const std::vector<Carrier>& domain,
                             const std::vector<Carrier>& codomain, const GenLimits& limits = {});
/// A table g' with g'(x) ⊑ g(x) pointwise.
FunctionTable randomFunctionBelow(Gen& gen, const FunctionTable& g);

/// A finite, exhaustive-in-shape sample of small values of T(carrier):
/// every Maybe/Exception/Powerset value, subdistributions with weights in
/// {0, 1/2, 1}, outputs of length ≤ 1, and (for |L| ≤ 1) all store maps
/// with results drawn from the carrier.
std::vector<MonadValue> smallValues(const KindRef& kind, const std::vector<Carrier>& carrier);

/// Parameterization used when generating instances of each monad.
KindRef defaultKind(MonadTag tag);

}  // namespace effdiag
