#pragma once

#include <map>
#include <vector>

#include "opforge/algebra/element.hpp"

namespace opforge {

/// Filtration weight per shuffle generator id; a monomial weighs the sum
/// over its internal vertices.
struct WeightAssignment {
  std::vector<int> weights;

  int of(int gen) const;
  int weight(const TreeMonomial& t) const;
};

/// Splits an element into weight-homogeneous parts whose sum is the input.
std::map<int, Element> weight_components(const Element& e, const WeightAssignment& w);

}  // namespace opforge
