#include "opforge/algebra/weights.hpp"

#include "opforge/error.hpp"

namespace opforge {

int WeightAssignment::of(int gen) const {
  if (gen < 0 || gen >= static_cast<int>(weights.size()) || weights[gen] < 0)
    throw Error("generator id " + std::to_string(gen) + " has no weight");
  return weights[gen];
}

int WeightAssignment::weight(const TreeMonomial& t) const {
  int w = 0;
  for (const auto& n : t.nodes())
    if (!n.is_leaf()) w += of(n.gen);
  return w;
}

std::map<int, Element> weight_components(const Element& e, const WeightAssignment& w) {
  std::map<int, Element> out;
  for (const auto& [t, c] : e.terms()) {
    auto [it, _] = out.try_emplace(w.weight(t), e.arity());
    it->second.add_term(t, c);
  }
  return out;
}

}  // namespace opforge
