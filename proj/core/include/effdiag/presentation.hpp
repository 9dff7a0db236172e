#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "effdiag/monad.hpp"

namespace effdiag {

inline constexpr std::size_t kDefaultArityCap = 64;

/// Γ ∈ T([n]): a monadic value over the index carrier {1, ..., n}.
class GenericEffect {
 public:
  /// Throws ArityError if arity exceeds `arityCap` or the body's support
  /// is not contained in [arity].
  GenericEffect(std::size_t arity, MonadValue body, std::size_t arityCap = kDefaultArityCap);

  std::size_t arity() const { return arity_; }
  const MonadValue& body() const { return body_; }
  const KindRef& kind() const { return body_.kind(); }

  friend bool operator==(const GenericEffect&, const GenericEffect&) = default;

 private:
  std::size_t arity_;
  MonadValue body_;
};

/// A formal presentation (Γ, ⟨x₁, ..., xₙ⟩), drawn as a diagram.
class Presentation {
 public:
  /// Throws ArityError unless row.size() == effect.arity().
  Presentation(GenericEffect effect, std::vector<Carrier> row);

  const GenericEffect& effect() const { return effect_; }
  const std::vector<Carrier>& row() const { return row_; }
  const KindRef& kind() const { return effect_.kind(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  GenericEffect effect_;
  std::vector<Carrier> row_;
};

/// I(Γ, s) = T(s)(Γ).
MonadValue interpret(const Presentation& xi);

/// Present μ over its support, enumerated in canonical carrier order.
Presentation decompose(const MonadValue& mu);

/// ξ =_I ρ: equal interpretations.
bool diagramEq(const Presentation& xi, const Presentation& rho);

/// ξ ⊑ ρ iff I(ξ) ⊑ I(ρ).
bool diagramLeq(const Presentation& xi, const Presentation& rho);

/// Re-present ξ over [m] along the injection ι: [n] ↪ [m].
///
/// `injection[i-1]` is ι(i) (1-based targets). `fill` supplies the row values
/// for [m] \ image(ι) in increasing position order. Throws ArityError when ι
/// is not injective, maps outside [m], or `fill` has the wrong size.
Presentation extend(const Presentation& xi, const std::vector<std::size_t>& injection, std::size_t m,
                    const std::vector<Carrier>& fill);

/// Relabel indices along the permutation π (`perm[i-1]` = π(i)); the row moves
/// with the indices, so the result is =_I to ξ.
Presentation permute(const Presentation& xi, const std::vector<std::size_t>& perm);

enum class RenderFormat { Text, Machine };

/// Text: `[Γ ‖ 1→x₁ ; 2→x₂]`. Machine: the JSON presentation format.
std::string render(const Presentation& xi, RenderFormat format);

/// Text form of the effect part alone, e.g. "η", "⊥", "1/2,1/2", "{1,3}".
std::string renderEffect(const GenericEffect& effect);

}  // namespace effdiag
