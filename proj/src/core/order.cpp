#include "opforge/core/order.hpp"

#include <algorithm>
#include <numeric>

#include "opforge/error.hpp"

namespace opforge {

OrderSpec OrderSpec::path_lex(std::vector<int> precedence) {
  OrderSpec s;
  s.precedence = std::move(precedence);
  return s;
}

OrderSpec OrderSpec::weighted(std::vector<int> weights, bool heavier_is_greater,
                              std::vector<int> precedence) {
  OrderSpec s;
  s.kind = OrderKind::WeightedPathLex;
  s.weights = std::move(weights);
  s.heavier_is_greater = heavier_is_greater;
  s.precedence = std::move(precedence);
  return s;
}

OrderSpec OrderSpec::xy_augmented(std::vector<ClassTag> classes, OrderSpec fallback_order) {
  if (fallback_order.kind == OrderKind::XYAugmented)
    throw Error("XYAugmented needs an admissible fallback order");
  OrderSpec s = std::move(fallback_order);
  s.fallback = s.kind;
  s.kind = OrderKind::XYAugmented;
  s.classes = std::move(classes);
  return s;
}

int OrderSpec::rank(int gen) const {
  for (std::size_t i = 0; i < precedence.size(); ++i)
    if (precedence[i] == gen) return static_cast<int>(i);
  return static_cast<int>(precedence.size()) + gen;
}

int OrderSpec::weight(int gen) const {
  if (gen < 0 || gen >= static_cast<int>(weights.size()))
    throw Error("no weight for generator id " + std::to_string(gen));
  return weights[gen];
}

std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::PathLex:
      return "pathlex";
    case OrderKind::WeightedPathLex:
      return "weighted-pathlex";
    case OrderKind::XYAugmented:
      return "xy-augmented";
  }
  return "pathlex";
}

OrderKind parse_order_name(const std::string& name) {
  if (name == "pathlex") return OrderKind::PathLex;
  if (name == "weighted-pathlex") return OrderKind::WeightedPathLex;
  if (name == "xy-augmented") return OrderKind::XYAugmented;
  throw Error("unknown order '" + name + "'");
}

nlohmann::ordered_json to_json(const OrderSpec& spec) {
  nlohmann::ordered_json j;
  j["kind"] = order_name(spec.kind);
  j["precedence"] = spec.precedence;
  if (spec.kind == OrderKind::WeightedPathLex ||
      (spec.kind == OrderKind::XYAugmented && spec.fallback == OrderKind::WeightedPathLex)) {
    j["weights"] = spec.weights;
    j["heavier_is_greater"] = spec.heavier_is_greater;
  }
  if (spec.kind == OrderKind::XYAugmented) {
    auto classes = nlohmann::ordered_json::array();
    for (auto c : spec.classes) classes.push_back(std::string(to_string(c)));
    j["classes"] = classes;
    j["fallback"] = order_name(spec.fallback);
  }
  j["convention"] =
      "path sequence from leaf 1, deglex words by precedence rank; ties by planar leaf "
      "sequence compared from the right";
  return j;
}

OrderSpec order_from_json(const nlohmann::json& j) {
  OrderSpec s;
  s.kind = parse_order_name(j.at("kind").get<std::string>());
  s.precedence = j.value("precedence", std::vector<int>{});
  s.weights = j.value("weights", std::vector<int>{});
  s.heavier_is_greater = j.value("heavier_is_greater", true);
  if (s.kind == OrderKind::XYAugmented) {
    for (const auto& c : j.at("classes")) s.classes.push_back(parse_class_tag(c.get<std::string>()));
    s.fallback = parse_order_name(j.at("fallback").get<std::string>());
  }
  return s;
}

namespace {

int count_pairs(const TreeMonomial& t, const std::vector<ClassTag>& cls_of_node) {
  const TreeIndex idx(t);
  int pairs = 0;
  for (int v = 0; v < t.node_count(); ++v) {
    if (cls_of_node[v] != ClassTag::Y) continue;
    for (int a = idx.parent[v]; a >= 0; a = idx.parent[a])
      if (cls_of_node[a] == ClassTag::X) ++pairs;
  }
  return pairs;
}

}  // namespace

int n_T(const TreeMonomial& t, std::span<const int> x_ids, std::span<const int> y_ids) {
  for (int x : x_ids)
    if (std::find(y_ids.begin(), y_ids.end(), x) != y_ids.end())
      throw Error("X and Y generator sets must be disjoint");
  std::vector<ClassTag> cls(t.node_count(), ClassTag::Unassigned);
  const auto nodes = t.nodes();
  for (int i = 0; i < t.node_count(); ++i) {
    if (nodes[i].is_leaf()) continue;
    const int g = nodes[i].gen;
    if (std::find(x_ids.begin(), x_ids.end(), g) != x_ids.end())
      cls[i] = ClassTag::X;
    else if (std::find(y_ids.begin(), y_ids.end(), g) != y_ids.end())
      cls[i] = ClassTag::Y;
    else
      throw Error("generator id " + std::to_string(g) + " lies outside X and Y");
  }
  return count_pairs(t, cls);
}

int n_T(const TreeMonomial& t, std::span<const ClassTag> classes) {
  std::vector<ClassTag> cls(t.node_count(), ClassTag::Unassigned);
  const auto nodes = t.nodes();
  for (int i = 0; i < t.node_count(); ++i) {
    if (nodes[i].is_leaf()) continue;
    const int g = nodes[i].gen;
    if (g >= static_cast<int>(classes.size()) || classes[g] == ClassTag::Unassigned)
      throw Error("generator id " + std::to_string(g) + " has no X/Y class");
    cls[i] = classes[g];
  }
  return count_pairs(t, cls);
}

OrderKey order_key(const TreeMonomial& t, const OrderSpec& spec) {
  OrderKey key;
  key.arity = t.arity();
  key.monomial = t;
  const auto nodes = t.nodes();
  if (spec.kind == OrderKind::XYAugmented) key.primary = -n_T(t, spec.classes);
  const bool weighted = spec.kind == OrderKind::WeightedPathLex ||
                        (spec.kind == OrderKind::XYAugmented && spec.fallback == OrderKind::WeightedPathLex);
  if (weighted) {
    int w = 0;
    for (const auto& n : nodes)
      if (!n.is_leaf()) w += spec.weight(n.gen);
    key.weight = spec.heavier_is_greater ? w : -w;
  }
  key.words.assign(t.arity(), {});
  std::vector<int> path;
  std::vector<int> remaining;  // children still to visit per open vertex
  for (const auto& n : nodes) {
    if (n.is_leaf()) {
      key.words[n.value - 1] = path;
      key.leaf_sequence.push_back(n.value);
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        path.pop_back();
      }
    } else {
      path.push_back(spec.rank(n.gen));
      remaining.push_back(n.value);
    }
  }
  return key;
}

std::strong_ordering compare_keys(const OrderKey& a, const OrderKey& b) {
  if (auto c = a.arity <=> b.arity; c != 0) return c;
  if (auto c = a.primary <=> b.primary; c != 0) return c;
  if (auto c = a.weight <=> b.weight; c != 0) return c;
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    const auto& wa = a.words[i];
    const auto& wb = b.words[i];
    if (auto c = wa.size() <=> wb.size(); c != 0) return c;
    if (auto c = wa <=> wb; c != 0) return c;
  }
  for (std::size_t i = a.leaf_sequence.size(); i-- > 0;) {
    if (auto c = a.leaf_sequence[i] <=> b.leaf_sequence[i]; c != 0) return c;
  }
  return a.monomial <=> b.monomial;
}

std::strong_ordering compare(const TreeMonomial& a, const TreeMonomial& b, const OrderSpec& spec) {
  if (a.arity() != b.arity()) throw Error("cannot compare monomials of different arity");
  if (a == b) return std::strong_ordering::equal;
  return compare_keys(order_key(a, spec), order_key(b, spec));
}

void sort_by_order(std::vector<TreeMonomial>& monomials, const OrderSpec& spec) {
  std::vector<OrderKey> keys;
  keys.reserve(monomials.size());
  for (const auto& m : monomials) keys.push_back(order_key(m, spec));
  std::vector<std::size_t> perm(monomials.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return compare_keys(keys[x], keys[y]) < 0; });
  std::vector<TreeMonomial> out;
  out.reserve(monomials.size());
  for (auto i : perm) out.push_back(std::move(monomials[i]));
  monomials = std::move(out);
}

}  // namespace opforge
