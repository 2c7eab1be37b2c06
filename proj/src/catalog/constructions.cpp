#include "opforge/catalog/constructions.hpp"

#include <algorithm>
#include <set>

#include "opforge/catalog/cache.hpp"
#include "opforge/error.hpp"

namespace opforge {

namespace {

std::vector<GeneratorSpec> joined_generators(const Presentation& p, const Presentation& q) {
  std::vector<GeneratorSpec> gens;
  std::set<std::string> names;
  for (auto g : p.generators) {
    g.class_tag = ClassTag::X;
    names.insert(g.name);
    gens.push_back(g);
  }
  for (auto g : q.generators) {
    if (!names.insert(g.name).second) throw Error("generator name '" + g.name + "' used by both presentations");
    g.class_tag = ClassTag::Y;
    gens.push_back(g);
  }
  return gens;
}

bool is_p_generator(int gen, const Presentation& p) { return gen >= 0 && gen < static_cast<int>(p.generators.size()); }

// Enumerates tuples of P-generator indices: all ordered tuples, or only
// nondecreasing ones when alpha's symmetry lets us reorder its inputs.
void tuples(int k, int count, bool sorted, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = sorted && !cur.empty() ? cur.back() : 0; i < count; ++i) {
    cur.push_back(i);
    tuples(k, count, sorted, cur, out);
    cur.pop_back();
  }
}

std::vector<ExprTree> mixed_trees(const Presentation& p, const Presentation& q) {
  std::vector<ExprTree> out;
  const int np = static_cast<int>(p.generators.size());
  for (int a = 0; a < static_cast<int>(q.generators.size()); ++a) {
    const auto& alpha = q.generators[a];
    std::vector<std::vector<int>> ts;
    std::vector<int> cur;
    tuples(alpha.arity, np, alpha.symmetry != Symmetry::None, cur, ts);
    for (const auto& t : ts) {
      int arg = 1;
      std::vector<ExprTree> kids;
      for (int b : t) {
        std::vector<ExprTree> leaves;
        for (int j = 0; j < p.generators[b].arity; ++j) leaves.push_back(ExprTree::argument(arg++));
        kids.push_back(ExprTree::apply(b, std::move(leaves)));
      }
      out.push_back(ExprTree::apply(np + a, std::move(kids)));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> mixed_monomials(const Presentation& p, const Presentation& q) {
  const auto gens = joined_generators(p, q);
  std::vector<std::string> out;
  for (const auto& t : mixed_trees(p, q)) out.push_back(to_text(t, gens));
  return out;
}

Presentation with_rewriting_rhs(const Presentation& p, const Presentation& q, const RhsMap& f) {
  const auto gens = joined_generators(p, q);
  const auto mixed = mixed_monomials(p, q);

  std::vector<std::string> rels = p.relations;
  rels.insert(rels.end(), q.relations.begin(), q.relations.end());

  std::vector<const RhsEntry*> chosen(mixed.size(), nullptr);
  for (const auto& entry : f) {
    const Expression lhs = parse_expression(entry.lhs, gens);
    if (lhs.terms.size() != 1 || lhs.terms[0].coeff != 1)
      throw Error("right-hand-side map key must be a single monomial: " + entry.lhs);
    const std::string key = to_text(lhs, gens);
    auto it = std::find(mixed.begin(), mixed.end(), key);
    if (it == mixed.end())
      throw Error("right-hand-side map key is not a Q-generator applied to P-generators: " + entry.lhs);
    const Expression rhs = parse_expression(entry.rhs, gens, lhs.arity);
    for (const auto& term : rhs.terms)
      if (!is_p_generator(term.tree.gen, p))
        throw Error("right-hand-side term " + to_text(term.tree, gens) + " does not have a P-generator at its root");
    auto& slot = chosen[it - mixed.begin()];
    if (slot) throw Error("right-hand-side map has two entries for " + key);
    slot = &entry;
  }
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    if (!chosen[i]) {
      rels.push_back(mixed[i]);
      continue;
    }
    Expression e = parse_expression(mixed[i], gens);
    e -= parse_expression(chosen[i]->rhs, gens, e.arity);
    rels.push_back(to_text(e, gens));
  }
  const bool deformed = std::any_of(chosen.begin(), chosen.end(), [](auto* c) { return c != nullptr; });
  const std::string name = (deformed ? "deformed(" : "almost(") + p.name + "," + q.name + ")";
  return make_presentation(name, gens, rels,
                           deformed ? "almost composite product with rewritten mixed relations"
                                    : "almost composite product");
}

Presentation almost_composite(const Presentation& p, const Presentation& q) { return with_rewriting_rhs(p, q, {}); }

WeightAssignment lie_filtration_weights(const ShuffleSignature& sig) {
  std::vector<int> candidates;
  for (const auto& g : sig.generators())
    if (g.symmetry == Symmetry::Antisymmetric && g.arity == 2) candidates.push_back(g.id);
  if (candidates.empty()) throw Error("no antisymmetric binary generator to filter by");
  int bracket = candidates.front();
  if (candidates.size() > 1) {
    auto b = sig.find("b");
    if (!b || std::find(candidates.begin(), candidates.end(), *b) == candidates.end())
      throw Error("several antisymmetric generators and none named 'b'");
    bracket = *b;
  }
  WeightAssignment w;
  w.weights.assign(sig.size(), 0);
  w.weights[bracket] = 1;
  return w;
}

WeightAssignment lie_filtration_weights(const Presentation& p) { return lie_filtration_weights(p.signature()); }

OrderSpec make_order(OrderKind kind, const ShuffleSignature& sig, bool reverse_precedence) {
  std::vector<int> prec(sig.size());
  for (int i = 0; i < sig.size(); ++i) prec[i] = reverse_precedence ? sig.size() - 1 - i : i;
  switch (kind) {
    case OrderKind::PathLex: return OrderSpec::path_lex(prec);
    case OrderKind::WeightedPathLex: {
      std::vector<int> w;
      for (const auto& g : sig.generators()) w.push_back(g.filtration_weight);
      return OrderSpec::weighted(w, true, prec);
    }
    case OrderKind::XYAugmented: {
      std::vector<ClassTag> classes;
      for (const auto& g : sig.generators()) {
        if (g.class_tag == ClassTag::Unassigned)
          throw Error("the xy-augmented order needs a class (X or Y) on generator '" + g.name + "'");
        classes.push_back(g.class_tag);
      }
      return OrderSpec::xy_augmented(classes, OrderSpec::path_lex(prec));
    }
  }
  throw Error("unknown order kind");
}

bool is_almost_distributive(const Presentation& p, const Presentation& q, const RhsMap& f,
                            const CompletionOptions& options) {
  const Presentation deformed = with_rewriting_rhs(p, q, f);
  const Presentation plain = almost_composite(p, q);
  const auto order = make_order(OrderKind::PathLex, plain.signature());
  return dims(completed(deformed, order, options), options.max_arity) ==
         dims(completed(plain, order, options), options.max_arity);
}

}  // namespace opforge
