#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opforge {

enum class Symmetry { Symmetric, Antisymmetric, None };
enum class ClassTag { Unassigned, X, Y };

std::string_view to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);
std::string_view to_string(ClassTag c);
ClassTag parse_class_tag(std::string_view text);

/// A generator of a symmetric operad presentation, as written by the user.
struct GeneratorSpec {
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::None;
  int filtration_weight = 0;
  ClassTag class_tag = ClassTag::Unassigned;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// A generator of the free shuffle operad.
///
/// A symmetric or antisymmetric generator gives one shuffle generator. A
/// binary generator without symmetry gives two partners: `mu(1,2)` keeps the
/// name and `mu(2,1)` is spelled `mu'(1,2)`.
struct GeneratorSymbol {
  int id = 0;
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::None;
  int filtration_weight = 0;
  ClassTag class_tag = ClassTag::Unassigned;
  int origin = 0;      // index into ShuffleSignature::origins()
  bool swapped = false;
  int partner = -1;    // shuffle id of the partner, -1 when there is none
};

class ShuffleSignature {
 public:
  ShuffleSignature() = default;

  /// Throws Error on duplicate names, arity < 2, or a no-symmetry
  /// generator of arity other than 2.
  static ShuffleSignature from_generators(std::vector<GeneratorSpec> gens);

  const std::vector<GeneratorSymbol>& generators() const { return gens_; }
  const std::vector<GeneratorSpec>& origins() const { return origins_; }
  const GeneratorSymbol& operator[](int id) const;
  int size() const { return static_cast<int>(gens_.size()); }

  /// Shuffle id for a shuffle-generator name such as `p` or `p'`.
  std::optional<int> find(std::string_view name) const;
  int id_of(std::string_view name) const;

  /// Shuffle id of the unswapped shuffle generator of an origin.
  int primary_id(int origin) const { return primary_[origin]; }
  std::optional<int> find_origin(std::string_view name) const;

  friend bool operator==(const ShuffleSignature& a, const ShuffleSignature& b) {
    return a.origins_ == b.origins_;
  }

 private:
  std::vector<GeneratorSpec> origins_;
  std::vector<GeneratorSymbol> gens_;
  std::vector<int> primary_;
};

}  // namespace opforge
