#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opforge/core/tree.hpp"

namespace opforge {

/// An embedding of a pattern monomial into a host monomial.
///
/// `vertices[i]` is the host node matched by the i-th internal vertex of the
/// pattern (prefix order). `frontier[l-1]` is the host node hanging below
/// the pattern's leaf l; the minimal labels below the frontier nodes
/// increase with l.
struct Occurrence {
  int root = 0;
  std::vector<int> vertices;
  std::vector<int> frontier;
  std::uint64_t mask = 0;  // bit per matched host node

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences, ordered by the host position of their root.
/// Throws Error when the pattern is the identity.
std::vector<Occurrence> find_occurrences(const TreeMonomial& host, const TreeMonomial& pattern);
std::vector<Occurrence> find_occurrences(const TreeMonomial& host, const TreeIndex& index,
                                         const TreeMonomial& pattern);
std::optional<Occurrence> first_occurrence(const TreeMonomial& host, const TreeIndex& index,
                                           const TreeMonomial& pattern);

/// Replaces the matched region by `replacement` (same arity as the pattern),
/// reattaching the frontier subtrees by label. The result is again a shuffle
/// monomial, so no straightening is needed.
TreeMonomial substitute(const TreeMonomial& host, const TreeIndex& index, const Occurrence& occ,
                        const TreeMonomial& replacement);

/// Bit mask of all internal nodes of a monomial.
std::uint64_t internal_mask(const TreeMonomial& t);

}  // namespace opforge
