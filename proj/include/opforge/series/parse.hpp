#pragma once

#include <string_view>

#include "opforge/series/egf.hpp"

namespace opforge {

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*
///   power  := atom ['^' integer]
///   atom   := rational | 't' | func '(' expr ')' | '(' expr ')'
///   func   := exp | log | log1p
/// `log(f)` needs f(0) = 1, `exp(f)` needs f(0) = 0, division needs a
/// nonzero constant term. Throws ParseError or Error.
Egf parse_series(std::string_view text, int order = kDefaultSeriesOrder);

}  // namespace opforge
