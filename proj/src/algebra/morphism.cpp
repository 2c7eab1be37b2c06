#include "opforge/algebra/morphism.hpp"

#include "opforge/error.hpp"

namespace opforge {

using Node = TreeMonomial::Node;

GeneratorMap::GeneratorMap(ShuffleSignature source, ShuffleSignature target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.size())
    throw Error("generator map needs one image per source generator");
  for (int g = 0; g < source_.size(); ++g) {
    if (images_[g].arity() != source_[g].arity)
      throw Error("image of '" + source_[g].name + "' has the wrong arity");
    for (const auto& [t, c] : images_[g].terms()) t.check_against(target_);
  }
}

GeneratorMap GeneratorMap::from_origins(ShuffleSignature source, ShuffleSignature target,
                                        const std::vector<Element>& origin_images) {
  if (origin_images.size() != source.origins().size())
    throw Error("generator map needs one image per source origin");
  std::vector<Element> images;
  const int swap[] = {2, 1};
  for (const auto& g : source.generators()) {
    const Element& base = origin_images[g.origin];
    images.push_back(g.swapped ? apply_permutation(base, swap, target) : base);
  }
  return GeneratorMap(std::move(source), std::move(target), std::move(images));
}

namespace {

using Partial = std::vector<std::pair<std::vector<Node>, Scalar>>;

Partial apply_rec(std::span<const Node> nodes, std::size_t& pos, const std::vector<Element>& images) {
  const Node n = nodes[pos++];
  if (n.is_leaf()) return Partial{{{n}, Scalar(1)}};
  std::vector<Partial> kids;
  for (int c = 0; c < n.value; ++c) kids.push_back(apply_rec(nodes, pos, images));
  Partial out;
  for (const auto& [img, ci] : images[n.gen].terms()) {
    std::vector<std::size_t> pick(kids.size(), 0);
    while (true) {
      Scalar coeff = ci;
      std::vector<Node> built;
      for (const auto& x : img.nodes()) {
        if (!x.is_leaf()) {
          built.push_back(x);
          continue;
        }
        const auto& [sub, cs] = kids[x.value - 1][pick[x.value - 1]];
        built.insert(built.end(), sub.begin(), sub.end());
      }
      for (std::size_t k = 0; k < kids.size(); ++k) coeff *= kids[k][pick[k]].second;
      out.emplace_back(std::move(built), coeff);
      std::size_t k = 0;
      for (; k < kids.size(); ++k) {
        if (++pick[k] < kids[k].size()) break;
        pick[k] = 0;
      }
      if (k == kids.size()) break;
    }
  }
  return out;
}

}  // namespace

Element GeneratorMap::apply(const TreeMonomial& t) const {
  t.check_against(source_);
  std::size_t pos = 0;
  Element out(t.arity());
  for (auto& [nodes, c] : apply_rec(t.nodes(), pos, images_)) out.add_term(make_unchecked(std::move(nodes), t.arity()), c);
  return out;
}

Element GeneratorMap::apply(const Element& e) const {
  Element out(e.arity());
  for (const auto& [t, c] : e.terms()) {
    Element img = apply(t);
    img *= c;
    out += img;
  }
  return out;
}

ShuffleSignature prelie_signature() {
  return ShuffleSignature::from_generators({GeneratorSpec{"p", 2, Symmetry::None}});
}

ShuffleSignature polarized_signature() {
  return ShuffleSignature::from_generators({GeneratorSpec{"o", 2, Symmetry::Symmetric, 0, ClassTag::X},
                                            GeneratorSpec{"b", 2, Symmetry::Antisymmetric, 1, ClassTag::Y}});
}

namespace {

void require_signature(const ShuffleSignature& sig, const ShuffleSignature& expected, const char* what) {
  if (sig.origins().size() != expected.origins().size()) throw Error(std::string("wrong signature for ") + what);
  for (std::size_t i = 0; i < sig.origins().size(); ++i) {
    const auto& a = sig.origins()[i];
    const auto& b = expected.origins()[i];
    if (a.name != b.name || a.arity != b.arity || a.symmetry != b.symmetry)
      throw Error(std::string("wrong signature for ") + what);
  }
}

}  // namespace

Element polarize(const Element& e, const ShuffleSignature& sig) {
  require_signature(sig, prelie_signature(), "polarize");
  const auto target = polarized_signature();
  Element img(2);
  img.add_term(corolla(target, target.id_of("o")), Scalar(1, 2));
  img.add_term(corolla(target, target.id_of("b")), Scalar(1, 2));
  return GeneratorMap::from_origins(sig, target, {img}).apply(e);
}

Element depolarize(const Element& e, const ShuffleSignature& sig) {
  require_signature(sig, polarized_signature(), "depolarize");
  const auto target = prelie_signature();
  const TreeMonomial p = corolla(target, target.id_of("p"));
  const TreeMonomial q = corolla(target, target.id_of("p'"));
  Element o(2), b(2);
  o.add_term(p, 1);
  o.add_term(q, 1);
  b.add_term(p, 1);
  b.add_term(q, -1);
  return GeneratorMap::from_origins(sig, target, {o, b}).apply(e);
}

}  // namespace opforge
