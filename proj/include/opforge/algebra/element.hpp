#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "opforge/algebra/scalar.hpp"
#include "opforge/core/occurrence.hpp"
#include "opforge/core/order.hpp"
#include "opforge/core/tree.hpp"

namespace opforge {

/// A finite rational linear combination of shuffle tree monomials of one arity.
class Element {
 public:
  using Terms = std::map<TreeMonomial, Scalar>;

  explicit Element(int arity = 1) : arity_(arity) {}
  static Element monomial(const TreeMonomial& t, const Scalar& c = 1);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const TreeMonomial& t) const;

  /// Adds c*t; zero results are dropped.
  void add_term(const TreeMonomial& t, const Scalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element e) { return e *= c; }
  friend Element operator-(Element e) { return e *= -1; }
  friend bool operator==(const Element&, const Element&) = default;

  /// Throws Error on the zero element.
  const TreeMonomial& leading_monomial(const OrderSpec& spec) const;
  Scalar leading_coefficient(const OrderSpec& spec) const;

  /// Scales so the leading coefficient is 1.
  Element monic(const OrderSpec& spec) const;

  /// True when `o` is a nonzero rational multiple of this element.
  bool proportional_to(const Element& o) const;

 private:
  int arity_;
  Terms terms_;
};

Element add(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& e);

/// `2*o(o(1,2),3) - 1/2*b(1,2)`, or `0`. Terms in structural order unless an
/// order is given, in which case they are listed from the largest down.
std::string to_text(const Element& e, const ShuffleSignature& sig);
std::string to_text(const Element& e, const ShuffleSignature& sig, const OrderSpec& spec);

/// `[{"coeff": "p/q", "monomial": ...}]`, largest monomial first under spec.
nlohmann::ordered_json to_json(const Element& e, const ShuffleSignature& sig, const OrderSpec& spec);
Element element_from_json(const nlohmann::json& j, int arity, const ShuffleSignature& sig);

/// Linear extension of replacing the matched region of `host` by each term
/// of `replacement` (an element of the pattern's arity).
Element replace_occurrence(const TreeMonomial& host, const Occurrence& occ,
                           const Element& replacement);
Element replace_occurrence(const TreeMonomial& host, const TreeIndex& index,
                           const Occurrence& occ, const Element& replacement);

/// Applies a permutation of the leaf labels to every term.
Element apply_permutation(const Element& e, std::span<const int> sigma, const ShuffleSignature& sig);

/// Bilinear shuffle composition over all terms.
Element compose(const Element& outer, int leaf_index, const Element& inner,
                std::span<const int> inner_labels);

}  // namespace opforge
