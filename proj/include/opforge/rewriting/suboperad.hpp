#pragma once

#include <vector>

#include "opforge/algebra/element.hpp"
#include "opforge/rewriting/system.hpp"

namespace opforge {

/// Dimensions, for arities 1..up_to, of the symmetric suboperad of the
/// quotient generated by `gens` (elements over the ambient signature, each
/// of arity >= 2). Throws Error above the truncation arity.
std::vector<long long> suboperad_dims(const RewriteSystem& ambient, const std::vector<Element>& gens,
                                      int up_to);

}  // namespace opforge
