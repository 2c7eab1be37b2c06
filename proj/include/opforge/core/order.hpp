#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "opforge/core/signature.hpp"
#include "opforge/core/tree.hpp"

namespace opforge {

enum class OrderKind { PathLex, WeightedPathLex, XYAugmented };

/// Monomial order descriptor.
///
/// Path-lexicographic convention (all variants fall back to it):
///   1. arity (orders only ever compare equal arities);
///   2. the path sequence: for leaf l = 1..n, the word of generator ranks
///      read from the root down to l. Tuples compare coordinatewise from
///      leaf 1; a longer word is greater, equal lengths compare
///      lexicographically by rank;
///   3. the planar leaf sequence (labels read left to right), compared from
///      the right end: at the last differing position the larger label wins.
/// A generator's rank is its position in `precedence` (earliest = smallest);
/// unlisted generators rank after all listed ones, by id.
///
/// WeightedPathLex compares total weight first; with heavier_is_greater the
/// heavier monomial is greater. XYAugmented compares n(T) first, larger n(T)
/// meaning smaller monomial, then falls back to `fallback`. It is total and
/// well-founded per arity but not compatible with composition.
struct OrderSpec {
  OrderKind kind = OrderKind::PathLex;
  std::vector<int> precedence;
  std::vector<int> weights;
  bool heavier_is_greater = true;
  std::vector<ClassTag> classes;
  OrderKind fallback = OrderKind::PathLex;

  static OrderSpec path_lex(std::vector<int> precedence = {});
  static OrderSpec weighted(std::vector<int> weights, bool heavier_is_greater = true,
                            std::vector<int> precedence = {});
  static OrderSpec xy_augmented(std::vector<ClassTag> classes, OrderSpec fallback_order);

  bool admissible() const { return kind != OrderKind::XYAugmented; }
  int rank(int gen) const;
  int weight(int gen) const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

std::string order_name(OrderKind k);
OrderKind parse_order_name(const std::string& name);

nlohmann::ordered_json to_json(const OrderSpec& spec);
OrderSpec order_from_json(const nlohmann::json& j);

/// Number of pairs (v, v') of internal vertices with v on the root path of
/// v', v labelled in X and v' labelled in Y.
int n_T(const TreeMonomial& t, std::span<const int> x_ids, std::span<const int> y_ids);
int n_T(const TreeMonomial& t, std::span<const ClassTag> classes);

/// Precomputed comparison data; sorting many monomials should go through keys.
struct OrderKey {
  int arity = 0;
  int primary = 0;  // -n(T) for XYAugmented, 0 otherwise
  int weight = 0;   // signed so that larger compares greater
  std::vector<std::vector<int>> words;
  std::vector<int> leaf_sequence;
  TreeMonomial monomial;
};

OrderKey order_key(const TreeMonomial& t, const OrderSpec& spec);
std::strong_ordering compare_keys(const OrderKey& a, const OrderKey& b);

/// Throws Error on arity mismatch or an unclassified generator under XYAugmented.
std::strong_ordering compare(const TreeMonomial& a, const TreeMonomial& b, const OrderSpec& spec);

/// Sorts ascending under the order.
void sort_by_order(std::vector<TreeMonomial>& monomials, const OrderSpec& spec);

}  // namespace opforge
