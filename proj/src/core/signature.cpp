#include "opforge/core/signature.hpp"

#include <set>

#include "opforge/error.hpp"

namespace opforge {

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric:
      return "symmetric";
    case Symmetry::Antisymmetric:
      return "antisymmetric";
    case Symmetry::None:
      return "none";
  }
  return "none";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "symmetric") return Symmetry::Symmetric;
  if (text == "antisymmetric") return Symmetry::Antisymmetric;
  if (text == "none") return Symmetry::None;
  throw Error("unknown symmetry '" + std::string(text) + "'");
}

std::string_view to_string(ClassTag c) {
  switch (c) {
    case ClassTag::X:
      return "X";
    case ClassTag::Y:
      return "Y";
    case ClassTag::Unassigned:
      return "unassigned";
  }
  return "unassigned";
}

ClassTag parse_class_tag(std::string_view text) {
  if (text == "X") return ClassTag::X;
  if (text == "Y") return ClassTag::Y;
  if (text == "unassigned") return ClassTag::Unassigned;
  throw Error("unknown class tag '" + std::string(text) + "'");
}

ShuffleSignature ShuffleSignature::from_generators(std::vector<GeneratorSpec> gens) {
  ShuffleSignature sig;
  std::set<std::string> names;
  for (const auto& g : gens) {
    if (g.name.empty()) throw Error("generator with empty name");
    if (g.arity < 2) throw Error("generator '" + g.name + "' has arity < 2");
    if (g.symmetry == Symmetry::None && g.arity != 2)
      throw Error("generator '" + g.name + "': no-symmetry generators must be binary");
    if (g.filtration_weight < 0) throw Error("generator '" + g.name + "' has negative weight");
    if (!names.insert(g.name).second) throw Error("duplicate generator name '" + g.name + "'");
  }
  for (int origin = 0; origin < static_cast<int>(gens.size()); ++origin) {
    const auto& g = gens[origin];
    GeneratorSymbol s;
    s.id = static_cast<int>(sig.gens_.size());
    s.name = g.name;
    s.arity = g.arity;
    s.symmetry = g.symmetry;
    s.filtration_weight = g.filtration_weight;
    s.class_tag = g.class_tag;
    s.origin = origin;
    sig.primary_.push_back(s.id);
    sig.gens_.push_back(s);
    if (g.symmetry == Symmetry::None) {
      GeneratorSymbol p = s;
      p.id = s.id + 1;
      p.name = g.name + "'";
      p.swapped = true;
      p.partner = s.id;
      sig.gens_.back().partner = p.id;
      if (!names.insert(p.name).second) throw Error("generator name clash on '" + p.name + "'");
      sig.gens_.push_back(p);
    }
  }
  sig.origins_ = std::move(gens);
  return sig;
}

const GeneratorSymbol& ShuffleSignature::operator[](int id) const {
  if (id < 0 || id >= size()) throw Error("unknown generator id " + std::to_string(id));
  return gens_[id];
}

std::optional<int> ShuffleSignature::find(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.id;
  return std::nullopt;
}

int ShuffleSignature::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error("unknown generator '" + std::string(name) + "'");
}

std::optional<int> ShuffleSignature::find_origin(std::string_view name) const {
  for (int i = 0; i < static_cast<int>(origins_.size()); ++i)
    if (origins_[i].name == name) return i;
  return std::nullopt;
}

}  // namespace opforge
