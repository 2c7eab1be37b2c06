#include <doctest.h>

#include "linear_oracle.hpp"
#include "opforge/algebra/morphism.hpp"
#include "opforge/algebra/presentation.hpp"
#include "opforge/algebra/weights.hpp"
#include "opforge/catalog/presets.hpp"
#include "opforge/error.hpp"
#include "random.hpp"

using namespace opforge;

namespace {

std::vector<GeneratorSpec> ob() { return product_bracket_generators(); }

Element elem(const std::string& text, const ShuffleSignature& sig, const std::vector<GeneratorSpec>& gens) {
  return to_element(parse_expression(text, gens), sig);
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("5")) == "5");
  CHECK_THROWS(parse_scalar("1/0"));
}

TEST_CASE("expression parse and print") {
  const auto gens = ob();
  const auto e = parse_expression(relations::kLeibniz, gens);
  CHECK(e.arity == 3);
  CHECK(e.terms.size() == 3);
  CHECK(parse_expression(to_text(e, gens), gens) == e);
  const auto r2 = parse_expression(relations::kR2, gens);
  CHECK(r2.terms.size() == 25);
  CHECK(parse_expression(to_text(r2, gens), gens) == r2);
  CHECK(parse_expression("1/2*[a1, a2] - 3 a1 o a2", gens).terms.size() == 2);
}

TEST_CASE("expression errors carry positions") {
  const auto gens = ob();
  CHECK_THROWS_AS(parse_expression("a1 o a2 o a3", gens), ParseError);
  CHECK_THROWS_AS(parse_expression("a1 o a1", gens), ParseError);
  CHECK_THROWS_AS(parse_expression("a1 o a3", gens), ParseError);
  CHECK_THROWS_AS(parse_expression("q(a1, a2)", gens), ParseError);
  CHECK_THROWS_AS(parse_expression("a1 o a2 + a1", gens), ParseError);
  try {
    parse_expression("a1 o a2 $", gens);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("relations become shuffle elements with signs") {
  const auto gens = ob();
  const auto sig = ShuffleSignature::from_generators(gens);
  const Element x = elem("[a2, a1]", sig, gens);
  CHECK(to_text(x, sig) == "-b(1,2)");
  CHECK(elem("a2 o a1 - a1 o a2", sig, gens).is_zero());
  // associativity orbit spans a 2-dimensional space, Jacobi is one element
  const auto assoc = to_shuffle_elements(parse_expression(relations::kAssociativity, gens), sig);
  CHECK(oracle::span_rank(assoc) == 2);
  const auto jac = to_shuffle_elements(parse_expression(relations::kJacobi, gens), sig);
  CHECK(jac.size() == 1);
  CHECK(jac[0].size() == 3);
  const auto leib = to_shuffle_elements(parse_expression(relations::kLeibniz, gens), sig);
  CHECK(oracle::span_rank(leib) == 3);
}

TEST_CASE("element arithmetic, text and json") {
  const auto gens = ob();
  const auto sig = ShuffleSignature::from_generators(gens);
  const Element a = elem("(a1 o a2) o a3 - 1/2*[a1, a3] o a2", sig, gens);
  const Element b = elem("[a1, a3] o a2", sig, gens);
  const Element c = a + Scalar(1, 2) * b;
  CHECK(c.size() == 1);
  CHECK(to_text(c, sig) == "o(o(1,2),3)");
  CHECK((a - a).is_zero());
  const auto order = OrderSpec::path_lex();
  CHECK(element_from_json(to_json(a, sig, order), 3, sig) == a);
  CHECK(a.leading_monomial(order) == parse_monomial("o(b(1,3),2)", sig));
  CHECK(a.monic(order).leading_coefficient(order) == 1);
  CHECK(a.proportional_to(Scalar(-4) * a));
  CHECK_FALSE(a.proportional_to(b));
  CHECK_THROWS_AS(Element(3).leading_monomial(order), Error);
}

TEST_CASE("element composition is bilinear") {
  const auto gens = ob();
  const auto sig = ShuffleSignature::from_generators(gens);
  const Element x = elem("a1 o a2 + [a1, a2]", sig, gens);
  const Element y = elem("2 [a1, a2]", sig, gens);
  const std::vector<int> labels{1, 2};
  const Element xy = compose(x, 1, y, labels);
  const Element want = elem("2 [a1, a2] o a3 + 2 [[a1, a2], a3]", sig, gens);
  CHECK(xy == want);
}

TEST_CASE("polarize and depolarize are inverse") {
  const auto pl = prelie_signature();
  const auto pol = polarized_signature();
  opforge::testing::Rng rng(3);
  for (int n = 2; n <= 4; ++n) {
    const auto mons = enumerate_monomials(pl, n);
    for (int k = 0; k < 30; ++k) {
      const Element e = opforge::testing::random_element(rng, mons);
      CHECK(depolarize(polarize(e, pl), pol) == e);
    }
  }
  const auto p12 = Element::monomial(parse_monomial("p(1,2)", pl));
  CHECK(to_text(polarize(p12, pl), pol) == "1/2*o(1,2) + 1/2*b(1,2)");
  CHECK_THROWS_AS(depolarize(p12, pl), Error);
}

TEST_CASE("generator maps") {
  const auto pl = prelie_signature();
  const auto pol = polarized_signature();
  const auto m = GeneratorMap::from_origins(pol, pl, {elem("p(a1, a2) + p(a2, a1)", pl, {{"p", 2, Symmetry::None}}),
                                                      elem("p(a1, a2) - p(a2, a1)", pl, {{"p", 2, Symmetry::None}})});
  const auto t = Element::monomial(parse_monomial("b(1,2)", pol));
  CHECK(m.apply(t) == depolarize(t, pol));
  const auto u = Element::monomial(parse_monomial("o(b(1,3),2)", pol));
  CHECK(m.apply(u) == depolarize(u, pol));
}

TEST_CASE("weight components") {
  const auto gens = ob();
  const auto sig = ShuffleSignature::from_generators(gens);
  const Element r1 = elem(relations::kR1, sig, gens);
  const auto parts = weight_components(r1, WeightAssignment{{0, 1}});
  REQUIRE(parts.size() == 3);
  Element sum(3);
  for (const auto& [w, e] : parts) sum += e;
  CHECK(sum == r1);
  CHECK(parts.at(0) == elem(relations::kAssociativity, sig, gens));
  CHECK_THROWS_AS(WeightAssignment{{0}}.of(1), Error);
}

TEST_CASE("presentation json round trip and fingerprint") {
  for (const auto& id : preset_names()) {
    const Presentation p = preset(id);
    const Presentation q = presentation_from_json(nlohmann::json::parse(to_json(p).dump()));
    CHECK(q == p);
    CHECK(q.fingerprint_hex() == p.fingerprint_hex());
    CHECK(p.fingerprint_hex().size() == 16);
  }
  CHECK(preset("fm").fingerprint() != preset("poisson").fingerprint());
  const auto g = generator_from_json(nlohmann::json::parse(R"({"name":"q","symmetry":"symmetric"})"));
  CHECK(g.arity == 2);
  CHECK(g.class_tag == ClassTag::Unassigned);
}
