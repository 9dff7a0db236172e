#pragma once

#include <string>
#include <string_view>

#include "effdiag/presentation.hpp"

namespace effdiag {

/// Canonical machine form of a monadic value, e.g.
/// {"kind":"dist","entries":[["v","1/2"],["w","1/2"]]}.
/// Index carriers serialize as JSON numbers, terms as strings.
std::string toJson(const MonadValue& mu);
/// {"effect":{"arity":n,"body":...},"row":[...]}
std::string toJson(const Presentation& xi);

/// Inverse of toJson. Throws ParseError on malformed input, InvalidValue or
/// ArityError on values that violate their invariants.
MonadValue monadValueFromJson(std::string_view text);
Presentation presentationFromJson(std::string_view text);

/// Text form, e.g. "{v: 3/4, w: 1/4}", "↑", "(\"ab\", v)".
std::string renderValue(const MonadValue& mu);

}  // namespace effdiag
