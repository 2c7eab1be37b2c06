#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "opforge/algebra/element.hpp"
#include "opforge/algebra/expression.hpp"
#include "opforge/core/order.hpp"
#include "opforge/core/signature.hpp"

namespace opforge {

/// A presentation of a symmetric operad by generators and relations. The
/// relations are kept as canonical expression text and expanded to shuffle
/// form only when a signature and order are fixed.
struct Presentation {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> relations;
  std::string notes;

  std::vector<Expression> parsed_relations() const;
  ShuffleSignature signature() const { return ShuffleSignature::from_generators(generators); }

  /// FNV-1a over the generator table and the canonical relation texts.
  std::uint64_t fingerprint() const;
  std::string fingerprint_hex() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses and re-prints every relation so the stored text is canonical.
Presentation make_presentation(std::string name, std::vector<GeneratorSpec> gens,
                               const std::vector<std::string>& relations, std::string notes = {});

/// `{name, arity, symmetry}` plus `weight`/`class` when set.
nlohmann::ordered_json to_json(const GeneratorSpec& g);
GeneratorSpec generator_from_json(const nlohmann::json& j);

/// `{name, generators:[{name, arity, symmetry}], relations:[...], notes}`;
/// `weight` and `class` keys appear on a generator only when set.
nlohmann::ordered_json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
std::string canonical_text(const Presentation& p);

/// The shuffle image of a symmetric presentation.
struct ShufflePresentation {
  ShuffleSignature signature;
  std::vector<Element> relations;

  friend bool operator==(const ShufflePresentation&, const ShufflePresentation&) = default;
};

/// The single shuffle element obtained by sending a_i to leaf sigma[i-1]
/// (identity when sigma is empty) and straightening.
Element to_element(const Expression& e, const ShuffleSignature& sig, std::span<const int> sigma = {});

/// Expands a relation over its whole S_n-orbit. Zero images are dropped and
/// duplicates up to scalar are removed; every output is monic under `spec`.
std::vector<Element> to_shuffle_elements(const Expression& e, const ShuffleSignature& sig,
                                         const OrderSpec& spec = {});

ShufflePresentation expand(const Presentation& p, const OrderSpec& spec = {});

/// All permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace opforge
