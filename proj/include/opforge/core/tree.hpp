#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opforge/core/signature.hpp"

namespace opforge {

/// A shuffle tree monomial: a planar rooted tree whose internal vertices
/// carry shuffle-generator ids and whose leaves carry 1..n, each once, with
/// the children of every vertex sorted by the minimal leaf below them.
///
/// Stored as a prefix sequence of nodes. Values are immutable and compare
/// structurally, so they can key maps.
class TreeMonomial {
 public:
  struct Node {
    std::int16_t gen;    // shuffle generator id, or -1 for a leaf
    std::int16_t value;  // child count for a vertex, label for a leaf

    bool is_leaf() const { return gen < 0; }
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  /// The single-leaf tree.
  TreeMonomial();

  /// Validates the prefix layout, the labels 1..n and the shuffle condition.
  static TreeMonomial from_nodes(std::vector<Node> nodes);

  int arity() const { return arity_; }
  bool is_identity() const { return nodes_.size() == 1; }
  std::span<const Node> nodes() const { return nodes_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int internal_count() const { return node_count() - arity_; }
  int root_gen() const { return nodes_.front().gen; }

  /// Throws Error when a vertex's child count disagrees with its generator.
  void check_against(const ShuffleSignature& sig) const;

  friend bool operator==(const TreeMonomial&, const TreeMonomial&) = default;
  friend auto operator<=>(const TreeMonomial& a, const TreeMonomial& b) {
    return a.nodes_ <=> b.nodes_;
  }

  std::size_t hash() const;

 private:
  struct Unchecked {};
  TreeMonomial(std::vector<Node> nodes, int arity, Unchecked)
      : nodes_(std::move(nodes)), arity_(arity) {}
  friend TreeMonomial make_unchecked(std::vector<Node> nodes, int arity);

  std::vector<Node> nodes_;
  int arity_ = 1;
};

/// Builds a monomial without validation; callers guarantee the invariants.
TreeMonomial make_unchecked(std::vector<TreeMonomial::Node> nodes, int arity);

/// Per-node structural data for a monomial, indexed by prefix position.
struct TreeIndex {
  explicit TreeIndex(const TreeMonomial& t);

  std::vector<int> end;       // one past the last node of the subtree
  std::vector<int> min_leaf;  // smallest label below the node
  std::vector<int> parent;    // -1 for the root
  std::vector<int> depth;
  std::vector<int> children_of(const TreeMonomial& t, int node) const;
};

/// A planar tree with arbitrary distinct leaf labels and no shuffle
/// condition; the input of straighten.
struct PlanarTree {
  int gen = -1;
  int label = 0;
  std::vector<PlanarTree> children;

  static PlanarTree leaf(int label) { return PlanarTree{-1, label, {}}; }
  static PlanarTree vertex(int gen, std::vector<PlanarTree> children) {
    return PlanarTree{gen, 0, std::move(children)};
  }
};

PlanarTree to_planar(const TreeMonomial& t);

struct Signed {
  int sign = 1;
  TreeMonomial monomial;
  friend bool operator==(const Signed&, const Signed&) = default;
};

/// Sorts children by minimal leaf at every vertex and renumbers leaves
/// 1..n order-preservingly. Antisymmetric generators contribute the sign of
/// the sorting permutation; a swapped no-symmetry generator turns into its
/// partner.
Signed straighten(const PlanarTree& tree, const ShuffleSignature& sig);

/// Relabels leaf l as sigma[l-1] and straightens.
Signed apply_permutation(const TreeMonomial& t, std::span<const int> sigma,
                         const ShuffleSignature& sig);

/// Shuffle composition: grafts `inner` on leaf `leaf_index` of `outer`.
/// `inner_labels` lists, increasingly, the labels the inner leaves take in
/// the result; it must contain leaf_index and lie in
/// [leaf_index, arity(outer) + arity(inner) - 1]. The outer leaves keep
/// their relative order on the remaining labels.
TreeMonomial compose(const TreeMonomial& outer, int leaf_index, const TreeMonomial& inner,
                     std::span<const int> inner_labels);

/// Every label set accepted by compose for these arities, in lexicographic order.
std::vector<std::vector<int>> shuffle_label_sets(int outer_arity, int leaf_index,
                                                 int inner_arity);

std::vector<TreeMonomial> enumerate_compositions(const TreeMonomial& outer, int leaf_index,
                                                 const TreeMonomial& inner);

/// All monomials of arity n over the signature, sorted structurally.
std::vector<TreeMonomial> enumerate_monomials(const ShuffleSignature& sig, int n);

/// The corolla gen(1, ..., k).
TreeMonomial corolla(const ShuffleSignature& sig, int gen);

// Text form `o(o(1,2),3)`, the identity is `1`.
std::string to_text(const TreeMonomial& t, const ShuffleSignature& sig);
TreeMonomial parse_monomial(std::string_view text, const ShuffleSignature& sig);

// JSON form `["o",["o",1,2],3]`, the identity is `1`.
nlohmann::json to_json(const TreeMonomial& t, const ShuffleSignature& sig);
TreeMonomial monomial_from_json(const nlohmann::json& j, const ShuffleSignature& sig);

}  // namespace opforge

template <>
struct std::hash<opforge::TreeMonomial> {
  std::size_t operator()(const opforge::TreeMonomial& t) const { return t.hash(); }
};
