#pragma once

#include <vector>

#include "opforge/algebra/element.hpp"
#include "opforge/core/signature.hpp"

namespace opforge {

/// A morphism of free shuffle operads given on generators: each source
/// shuffle generator of arity k maps to an element of arity k over the
/// target signature.
class GeneratorMap {
 public:
  GeneratorMap(ShuffleSignature source, ShuffleSignature target, std::vector<Element> images);

  /// Images given per source origin (the unswapped generator); the image of
  /// a swapped partner is derived by exchanging its two arguments.
  static GeneratorMap from_origins(ShuffleSignature source, ShuffleSignature target,
                                   const std::vector<Element>& origin_images);

  const ShuffleSignature& source() const { return source_; }
  const ShuffleSignature& target() const { return target_; }

  Element apply(const TreeMonomial& t) const;
  Element apply(const Element& e) const;

 private:
  ShuffleSignature source_;
  ShuffleSignature target_;
  std::vector<Element> images_;
};

/// Signature of the pre-Lie operad written with one no-symmetry product `p`.
ShuffleSignature prelie_signature();
/// Signature of the symmetrized product `o` and the bracket `b`.
ShuffleSignature polarized_signature();

/// p(x,y) = 1/2 (x o y) + 1/2 [x,y]. Throws Error on any other signature.
Element polarize(const Element& e, const ShuffleSignature& sig);
/// x o y = p(x,y) + p(y,x), [x,y] = p(x,y) - p(y,x).
Element depolarize(const Element& e, const ShuffleSignature& sig);

}  // namespace opforge
