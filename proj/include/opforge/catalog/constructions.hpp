#pragma once

#include <string>
#include <vector>

#include "opforge/algebra/presentation.hpp"
#include "opforge/algebra/weights.hpp"
#include "opforge/core/order.hpp"
#include "opforge/rewriting/completion.hpp"

namespace opforge {

/// One entry of a right-hand-side map: `lhs` is alpha(beta_1, ..., beta_k)
/// with alpha a Q-generator and each beta_i a P-generator applied to
/// arguments; every term of `rhs` has a P-generator at its root.
struct RhsEntry {
  std::string lhs;
  std::string rhs;
};
using RhsMap = std::vector<RhsEntry>;

/// P v Q modulo alpha(beta_1, ..., beta_k) = 0 for every Q-generator alpha
/// and every tuple of P-generators. P-generators get class X, Q-generators
/// class Y. Throws Error on a generator name clash.
Presentation almost_composite(const Presentation& p, const Presentation& q);

/// As almost_composite, but alpha(beta...) = f(alpha(beta...)) for the
/// entries of f. Throws Error when an entry's lhs is not of the required
/// shape or an rhs term has a Q-generator at its root.
Presentation with_rewriting_rhs(const Presentation& p, const Presentation& q, const RhsMap& f);

/// The canonical texts of the alpha(beta_1, ..., beta_k) monomials, in the
/// order almost_composite adds them.
std::vector<std::string> mixed_monomials(const Presentation& p, const Presentation& q);

/// Bracket generator weight 1, every other generator 0, on shuffle ids.
/// The bracket is the antisymmetric binary generator (the one named `b`
/// when several exist). Throws Error when there is none.
WeightAssignment lie_filtration_weights(const Presentation& p);
WeightAssignment lie_filtration_weights(const ShuffleSignature& sig);

/// Order of the given kind on a signature: precedence by generator id
/// (reversed on request), weights from the filtration weights, classes from
/// the class tags.
OrderSpec make_order(OrderKind kind, const ShuffleSignature& sig, bool reverse_precedence = false);

/// dims(with_rewriting_rhs(P, Q, f)) == dims(almost_composite(P, Q)) up to max_arity.
bool is_almost_distributive(const Presentation& p, const Presentation& q, const RhsMap& f,
                            const CompletionOptions& options);

}  // namespace opforge
