#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opforge {

/// Exact rational in canonical form (gmp keeps numerator and denominator
/// coprime with a positive denominator).
using Scalar = mpq_class;

/// `p` or `p/q`.
std::string to_string(const Scalar& s);
Scalar parse_scalar(std::string_view text);

}  // namespace opforge
