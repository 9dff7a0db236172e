#pragma once

#include <string>
#include <vector>

#include "effdiag/effects.hpp"
#include "effdiag/gen.hpp"
#include "effdiag/lambda.hpp"
#include "effdiag/serialize.hpp"

namespace testing {

using namespace effdiag;

inline Carrier at(const std::string& name) { return Carrier::atom(name); }
inline Carrier ix(std::int64_t i) { return Carrier::index(i); }
inline Rational q(long long p, long long d) { return Rational(p, d); }

inline const std::vector<MonadTag>& allMonads() {
  static const std::vector<MonadTag> tags{MonadTag::Maybe,           MonadTag::Exception,   MonadTag::Powerset,
                                          MonadTag::Subdistribution, MonadTag::GlobalState, MonadTag::Output};
  return tags;
}

/// Store mask from a list of (location index, bit) pairs.
inline Store store(std::initializer_list<int> bits) {
  Store s = 0;
  int k = 0;
  for (int b : bits) s |= static_cast<Store>(b != 0) << k++;
  return s;
}

}  // namespace testing
