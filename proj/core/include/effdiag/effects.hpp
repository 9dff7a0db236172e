#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "effdiag/presentation.hpp"

namespace effdiag {

/// An n-ary operation on one monad, T(X)ⁿ → T(X), natural in X.
struct DerivedOperation {
  using Apply = std::function<MonadValue(std::span<const MonadValue>)>;

  std::string name;
  std::size_t arity = 0;
  KindRef kind;
  Apply fn;

  /// Throws ArityError on an argument-count mismatch.
  MonadValue apply(std::span<const MonadValue> args) const;
};

/// γ(μ₁, ..., μₙ) = Γ >>= (i ↦ μᵢ).
DerivedOperation effectToOp(const GenericEffect& gamma);

/// Wrap a signature operation of `kind`.
DerivedOperation signatureOp(const KindRef& kind, const OpDescriptor& op);

/// Γ = γ(η(1), ..., η(n)) over [n]. Throws ArityError if op.arity != n.
GenericEffect opToEffect(const DerivedOperation& op, std::size_t n);
GenericEffect opToEffect(const KindRef& kind, const OpDescriptor& op, std::size_t n);

/// H = η(1) ∈ T([1]).
GenericEffect trivialEffect(const KindRef& kind);

/// ⊥ₙ ∈ T([n]).
GenericEffect bottomEffect(const KindRef& kind, std::size_t n);

/// Sequential composition of ξ with one presentation per index of ξ.
///
/// Block i of the result occupies positions (Σ_{k<i} m_k)+1 ... Σ_{k≤i} m_k,
/// and the result row is the concatenation of the family rows; ξ's own row
/// is not used. Throws ArityError on a family length mismatch or when the
/// composite arity exceeds `arityCap`, KindMismatch on mixed monads.
Presentation seqCompose(const Presentation& xi, const std::vector<Presentation>& family,
                        std::size_t arityCap = kDefaultArityCap);

/// Composition on generic effects only: Γ ∘ ⟨Δᵢ⟩ ∈ T([Σ mᵢ]).
GenericEffect composeEffects(const GenericEffect& gamma, const std::vector<GenericEffect>& deltas,
                             std::size_t arityCap = kDefaultArityCap);

struct Counterexample {
  std::string description;  // the instance, human-readable
  std::string lhs;
  std::string rhs;
  std::uint64_t trialSeed = 0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  std::string law;
  bool pass = true;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
};

/// Test bind(op(μ⃗), f) = op(μ⃗ >>= f): an exhaustive sweep over small values
/// on carriers of size ≤ carrierSize, then `trials` random cases.
CheckReport checkAlgebraic(const DerivedOperation& op, std::size_t trials, std::size_t carrierSize,
                           std::uint64_t seed = 1);

/// Test the diagram exchange law Γ over Δ over x_{i,j} = Δ over Γ over x_{i,j}
/// with n, m ≤ 3 and carrier ≤ 3. Signature-generated effects are tried first.
CheckReport checkCommutative(const KindRef& kind, std::size_t trials, std::uint64_t seed = 1);

/// Serialize a report in the machine format {law, pass, trials, seed, counterexample?}.
std::string reportToJson(const CheckReport& report);

}  // namespace effdiag
