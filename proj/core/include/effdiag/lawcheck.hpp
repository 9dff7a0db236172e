#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "effdiag/effects.hpp"

namespace effdiag {

struct LawSuiteConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t carrierSizeMax = 3;
  std::size_t arityMax = 3;
  /// nullopt selects all monads / all laws; an empty list selects none.
  std::optional<std::vector<MonadTag>> monads;
  std::optional<std::vector<std::string>> laws;
  /// Run (law, monad) cells on worker threads. Results do not depend on it.
  bool parallel = true;
};

/// Parameters a failing trial can be replayed with.
struct TrialParams {
  std::uint64_t seed = 0;
  std::size_t arity = 3;
  std::size_t carrierSize = 3;
  int simplicity = 0;

  friend bool operator==(const TrialParams&, const TrialParams&) = default;
};

struct LawResult {
  std::string law;
  MonadTag monad = MonadTag::Maybe;
  bool pass = true;
  bool expectedPass = true;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::optional<Counterexample> counterexample;
  /// Set for trial-based laws; checker-based laws replay through the cell seed.
  std::optional<TrialParams> replay;
  std::uint64_t cellSeed = 0;
};

struct LawReport {
  std::uint64_t seed = 0;
  std::vector<LawResult> results;

  /// True iff no law expected to hold has failed.
  bool expectationsMet() const;
  std::string toJson() const;
  std::string toText() const;
};

/// Identifiers of every law, in report order.
const std::vector<std::string>& lawIds();

/// Whether `law` is expected to hold for `monad`. The shipped exceptions are
/// commutativity (Exception, Output, GlobalState) and right bottom absorption
/// (Exception, Output).
bool expectedToHold(const std::string& law, MonadTag monad);

/// Throws Error on an unknown law identifier or invalid bounds.
LawReport runLawSuite(const LawSuiteConfig& config);

/// Re-run a single failing cell from its recorded data; true iff it fails again.
bool replayFails(const LawResult& result, const LawSuiteConfig& config);

}  // namespace effdiag
