#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "opforge/algebra/element.hpp"
#include "opforge/core/order.hpp"
#include "opforge/core/signature.hpp"

namespace opforge {

struct Provenance {
  enum class Kind { Input, CriticalPair, InterReduction };
  Kind kind = Kind::Input;
  std::vector<int> parents;  // rule indices within the owning system

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(Provenance::Kind k);

/// lhs -> rhs, with every rhs monomial smaller than lhs (for admissible
/// orders) and the same arity.
struct RewriteRule {
  TreeMonomial lhs;
  Element rhs;
  Provenance provenance;

  int arity() const { return lhs.arity(); }
  /// lhs - rhs, the relation the rule encodes.
  Element relation() const;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Builds the monic rule of a nonzero element. Throws Error on zero.
RewriteRule rule_from_element(const Element& e, const OrderSpec& spec, Provenance p = {});

/// A rewriting system truncated at an arity. Rules are sorted by arity, then
/// by lhs under the order.
struct RewriteSystem {
  ShuffleSignature signature;
  OrderSpec order;
  std::vector<RewriteRule> rules;
  int truncation_arity = 1;

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;
};

/// True when no lhs is divisible by another rule's lhs.
bool is_interreduced(const RewriteSystem& sys);

/// `{format, order, truncation_arity, signature, rules:[{lhs, rhs, provenance}]}`
nlohmann::ordered_json to_json(const RewriteSystem& sys);
RewriteSystem system_from_json(const nlohmann::json& j);
/// Stable text of the JSON dump, newline-terminated.
std::string dump(const RewriteSystem& sys);

}  // namespace opforge
