#include "opforge/catalog/presets.hpp"

#include "opforge/catalog/constructions.hpp"
#include "opforge/error.hpp"

namespace opforge {

namespace {

GeneratorSpec product() { return GeneratorSpec{"o", 2, Symmetry::Symmetric, 0, ClassTag::X}; }
GeneratorSpec bracket() { return GeneratorSpec{"b", 2, Symmetry::Antisymmetric, 1, ClassTag::Y}; }

}  // namespace

std::vector<GeneratorSpec> product_bracket_generators() { return {product(), bracket()}; }

std::vector<std::string> preset_names() {
  return {"com", "lie", "ass", "poisson", "prelie", "fm", "plc", "almost(com,lie)"};
}

Presentation preset(std::string_view id) {
  using namespace relations;
  if (id == "com")
    return make_presentation("com", {product()}, {kAssociativity}, "commutative associative");
  if (id == "lie") return make_presentation("lie", {bracket()}, {kJacobi}, "Lie");
  if (id == "ass")
    return make_presentation("ass", {GeneratorSpec{"m", 2, Symmetry::None}},
                             {"m(m(a1, a2), a3) - m(a1, m(a2, a3))"}, "associative");
  if (id == "poisson")
    return make_presentation("poisson", product_bracket_generators(), {kAssociativity, kJacobi, kLeibniz},
                             "Poisson");
  if (id == "prelie")
    return make_presentation("prelie", {GeneratorSpec{"p", 2, Symmetry::None}}, {kPreLie}, "pre-Lie");
  if (id == "fm")
    return make_presentation("fm", product_bracket_generators(), {kAssociativity, kJacobi, kHertlingManin},
                             "F-manifold: associativity, Jacobi, Hertling-Manin");
  if (id == "plc")
    return make_presentation(
        "plc", {GeneratorSpec{"o", 2, Symmetry::Symmetric, 0, ClassTag::X}, GeneratorSpec{"p", 2, Symmetry::None}},
        {kAssociativity, kPreLie, kPreLieCommutative}, "pre-Lie commutative; p is the pre-Lie product");
  if (id == "almost(com,lie)") return almost_composite(preset("com"), preset("lie"));
  throw Error("unknown preset '" + std::string(id) + "'");
}

}  // namespace opforge
