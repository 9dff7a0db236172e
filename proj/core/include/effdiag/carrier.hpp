#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include "effdiag/term.hpp"

namespace effdiag {

/// An element of a carrier set X.
///
/// Two sorts of elements are used: positive indices (the carriers [n] of
/// generic effects) and λ-terms (values of programs, and named atoms such as
/// `a` or `v`, which are simply free variables). The canonical ordering puts
/// indices first, numerically, then terms by canonical key; equality of terms
/// is α-equivalence.
class Carrier {
 public:
  static Carrier index(std::int64_t i) { return Carrier(i); }
  static Carrier term(TermPtr t);
  /// Shorthand for the term `Var(name)`.
  static Carrier atom(const std::string& name);

  bool isIndex() const { return term_ == nullptr; }
  std::int64_t index() const { return index_; }
  /// Null for index carriers.
  const TermPtr& term() const;
  /// Canonical serialized form used for ordering.
  std::string key() const;
  /// Display form: the number, or the term's concrete syntax.
  std::string display() const;

  friend bool operator==(const Carrier& a, const Carrier& b);
  friend std::strong_ordering operator<=>(const Carrier& a, const Carrier& b);

 private:
  struct TermData {
    TermPtr term;
    std::string key;
  };

  explicit Carrier(std::int64_t i) : index_(i) {}
  explicit Carrier(std::shared_ptr<const TermData> data) : term_(std::move(data)) {}

  std::int64_t index_ = 0;
  std::shared_ptr<const TermData> term_;
};

}  // namespace effdiag
