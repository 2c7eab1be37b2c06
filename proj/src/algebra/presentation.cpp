#include "opforge/algebra/presentation.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "opforge/error.hpp"

namespace opforge {

std::vector<Expression> Presentation::parsed_relations() const {
  std::vector<Expression> out;
  for (const auto& r : relations) out.push_back(parse_expression(r, generators));
  return out;
}

std::uint64_t Presentation::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& g : generators) {
    mix(g.name);
    mix(std::to_string(g.arity));
    mix(std::string(to_string(g.symmetry)));
  }
  for (const auto& r : relations) mix(r);
  return h;
}

std::string Presentation::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
  return buf;
}

Presentation make_presentation(std::string name, std::vector<GeneratorSpec> gens,
                               const std::vector<std::string>& relations, std::string notes) {
  // Validates the generator table as a side effect.
  ShuffleSignature::from_generators(gens);
  Presentation p{std::move(name), std::move(gens), {}, std::move(notes)};
  for (const auto& r : relations) p.relations.push_back(to_text(parse_expression(r, p.generators), p.generators));
  return p;
}

nlohmann::ordered_json to_json(const GeneratorSpec& g) {
  nlohmann::ordered_json x;
  x["name"] = g.name;
  x["arity"] = g.arity;
  x["symmetry"] = std::string(to_string(g.symmetry));
  if (g.filtration_weight != 0) x["weight"] = g.filtration_weight;
  if (g.class_tag != ClassTag::Unassigned) x["class"] = std::string(to_string(g.class_tag));
  return x;
}

GeneratorSpec generator_from_json(const nlohmann::json& x) {
  GeneratorSpec g;
  g.name = x.at("name").get<std::string>();
  g.arity = x.value("arity", 2);
  g.symmetry = parse_symmetry(x.at("symmetry").get<std::string>());
  g.filtration_weight = x.value("weight", 0);
  if (x.contains("class")) g.class_tag = parse_class_tag(x.at("class").get<std::string>());
  return g;
}

nlohmann::ordered_json to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : p.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  j["relations"] = p.relations;
  j["notes"] = p.notes;
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  std::vector<GeneratorSpec> gens;
  for (const auto& x : j.at("generators")) gens.push_back(generator_from_json(x));
  return make_presentation(j.at("name").get<std::string>(), std::move(gens),
                           j.at("relations").get<std::vector<std::string>>(), j.value("notes", std::string{}));
}

std::string canonical_text(const Presentation& p) { return to_json(p).dump(2) + "\n"; }

namespace {

PlanarTree to_planar(const ExprTree& t, const ShuffleSignature& sig, std::span<const int> sigma) {
  if (t.gen < 0) return PlanarTree::leaf(sigma.empty() ? t.arg : sigma[t.arg - 1]);
  std::vector<PlanarTree> kids;
  for (const auto& c : t.children) kids.push_back(to_planar(c, sig, sigma));
  return PlanarTree::vertex(sig.primary_id(t.gen), std::move(kids));
}

}  // namespace

Element to_element(const Expression& e, const ShuffleSignature& sig, std::span<const int> sigma) {
  if (!sigma.empty() && static_cast<int>(sigma.size()) != e.arity)
    throw Error("permutation size does not match expression arity");
  Element out(e.arity);
  for (const auto& term : e.terms) {
    Signed s = straighten(to_planar(term.tree, sig, sigma), sig);
    out.add_term(s.monomial, term.coeff * s.sign);
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Element> to_shuffle_elements(const Expression& e, const ShuffleSignature& sig,
                                         const OrderSpec& spec) {
  std::vector<Element> out;
  std::set<Element::Terms> seen;
  for (const auto& sigma : all_permutations(e.arity)) {
    Element x = to_element(e, sig, sigma);
    if (x.is_zero()) continue;
    x = x.monic(spec);
    if (seen.insert(x.terms()).second) out.push_back(std::move(x));
  }
  return out;
}

ShufflePresentation expand(const Presentation& p, const OrderSpec& spec) {
  ShufflePresentation sp{p.signature(), {}};
  for (const auto& rel : p.parsed_relations()) {
    for (auto& x : to_shuffle_elements(rel, sp.signature, spec)) sp.relations.push_back(std::move(x));
  }
  return sp;
}

}  // namespace opforge
