#pragma once

#include <vector>

#include "opforge/core/occurrence.hpp"
#include "opforge/rewriting/system.hpp"

namespace opforge {

/// Two occurrences of rule lhs in a common multiple that share at least one
/// vertex and together cover every vertex of it.
struct Overlap {
  RewriteRule first;
  RewriteRule second;
  TreeMonomial multiple;
  Occurrence first_occurrence;
  Occurrence second_occurrence;
};

/// Every overlap of arity <= max_arity. For a rule with itself, identical
/// occurrences are skipped and each unordered pair is listed once. Ordered
/// by (arity, multiple structure, occurrence roots).
std::vector<Overlap> critical_pairs(const RewriteRule& r1, const RewriteRule& r2, int max_arity,
                                    const ShuffleSignature& sig);

/// The difference of the two one-step rewrites of the common multiple.
Element s_polynomial(const Overlap& o);

}  // namespace opforge
