#include "opforge/core/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "opforge/error.hpp"

namespace opforge {

using Node = TreeMonomial::Node;

namespace {

Node leaf_node(int label) { return Node{-1, static_cast<std::int16_t>(label)}; }
Node vertex_node(int gen, int children) {
  return Node{static_cast<std::int16_t>(gen), static_cast<std::int16_t>(children)};
}

// Walks the prefix layout from `pos`, returning the minimal leaf label of the
// subtree and advancing `pos` past it.
int validate_subtree(const std::vector<Node>& nodes, std::size_t& pos, std::vector<int>& labels) {
  if (pos >= nodes.size()) throw Error("truncated tree monomial");
  const Node n = nodes[pos++];
  if (n.is_leaf()) {
    labels.push_back(n.value);
    return n.value;
  }
  if (n.value < 1) throw Error("vertex without children");
  int first_min = 0;
  int prev = 0;
  for (int c = 0; c < n.value; ++c) {
    const int m = validate_subtree(nodes, pos, labels);
    if (c == 0) {
      first_min = m;
    } else if (m <= prev) {
      throw Error("shuffle condition violated: children not sorted by minimal leaf");
    }
    prev = m;
  }
  return first_min;
}

}  // namespace

TreeMonomial::TreeMonomial() : nodes_{leaf_node(1)}, arity_(1) {}

TreeMonomial make_unchecked(std::vector<Node> nodes, int arity) {
  return TreeMonomial(std::move(nodes), arity, TreeMonomial::Unchecked{});
}

TreeMonomial TreeMonomial::from_nodes(std::vector<Node> nodes) {
  std::size_t pos = 0;
  std::vector<int> labels;
  validate_subtree(nodes, pos, labels);
  if (pos != nodes.size()) throw Error("trailing nodes after tree monomial");
  const int n = static_cast<int>(labels.size());
  std::vector<bool> seen(n + 1, false);
  for (int l : labels) {
    if (l < 1 || l > n) throw Error("leaf label " + std::to_string(l) + " outside 1.." + std::to_string(n));
    if (seen[l]) throw Error("repeated leaf label " + std::to_string(l));
    seen[l] = true;
  }
  return make_unchecked(std::move(nodes), n);
}

void TreeMonomial::check_against(const ShuffleSignature& sig) const {
  for (const auto& n : nodes_) {
    if (n.is_leaf()) continue;
    if (sig[n.gen].arity != n.value)
      throw Error("vertex of generator '" + sig[n.gen].name + "' has wrong child count");
  }
}

std::size_t TreeMonomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& n : nodes_) {
    h ^= static_cast<std::uint16_t>(n.gen);
    h *= 1099511628211ULL;
    h ^= static_cast<std::uint16_t>(n.value);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

TreeIndex::TreeIndex(const TreeMonomial& t) {
  const auto nodes = t.nodes();
  const int size = static_cast<int>(nodes.size());
  end.assign(size, 0);
  min_leaf.assign(size, 0);
  parent.assign(size, -1);
  depth.assign(size, 0);
  // Iterative prefix walk: each stack entry is (node, children still to visit).
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < size; ++i) {
    if (!stack.empty()) {
      parent[i] = stack.back().first;
      depth[i] = depth[parent[i]] + 1;
      --stack.back().second;
    }
    if (nodes[i].is_leaf()) {
      end[i] = i + 1;
      min_leaf[i] = nodes[i].value;
      while (!stack.empty() && stack.back().second == 0) {
        const int v = stack.back().first;
        stack.pop_back();
        end[v] = i + 1;
      }
    } else {
      stack.emplace_back(i, nodes[i].value);
    }
  }
  for (int i = size - 1; i >= 0; --i) {
    if (nodes[i].is_leaf()) continue;
    // The first child sits right after the vertex and carries the minimum.
    min_leaf[i] = min_leaf[i + 1];
  }
}

std::vector<int> TreeIndex::children_of(const TreeMonomial& t, int node) const {
  std::vector<int> out;
  const auto nodes = t.nodes();
  if (nodes[node].is_leaf()) return out;
  int c = node + 1;
  for (int k = 0; k < nodes[node].value; ++k) {
    out.push_back(c);
    c = end[c];
  }
  return out;
}

PlanarTree to_planar(const TreeMonomial& t) {
  const auto nodes = t.nodes();
  std::size_t pos = 0;
  std::function<PlanarTree()> build = [&]() -> PlanarTree {
    const Node n = nodes[pos++];
    if (n.is_leaf()) return PlanarTree::leaf(n.value);
    std::vector<PlanarTree> children;
    for (int c = 0; c < n.value; ++c) children.push_back(build());
    return PlanarTree::vertex(n.gen, std::move(children));
  };
  return build();
}

namespace {

struct Built {
  int sign = 1;
  std::vector<Node> nodes;
  int min = 0;
};

int permutation_parity_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Built straighten_rec(const PlanarTree& p, const ShuffleSignature& sig) {
  if (p.gen < 0) return Built{1, {leaf_node(p.label)}, p.label};
  const auto& g = sig[p.gen];
  if (static_cast<int>(p.children.size()) != g.arity)
    throw Error("generator '" + g.name + "' applied to " + std::to_string(p.children.size()) +
                " arguments, expected " + std::to_string(g.arity));
  std::vector<Built> kids;
  kids.reserve(p.children.size());
  for (const auto& c : p.children) kids.push_back(straighten_rec(c, sig));
  std::vector<int> order(kids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return kids[a].min < kids[b].min; });

  Built out;
  for (const auto& k : kids) out.sign *= k.sign;
  int gen = p.gen;
  const bool moved = !std::is_sorted(order.begin(), order.end());
  if (moved) {
    if (g.symmetry == Symmetry::Antisymmetric) {
      out.sign *= permutation_parity_sign(order);
    } else if (g.symmetry == Symmetry::None) {
      gen = g.partner;
    }
  }
  out.nodes.push_back(vertex_node(gen, g.arity));
  for (int i : order) out.nodes.insert(out.nodes.end(), kids[i].nodes.begin(), kids[i].nodes.end());
  out.min = kids[order.front()].min;
  return out;
}

}  // namespace

Signed straighten(const PlanarTree& tree, const ShuffleSignature& sig) {
  // Check label distinctness first; equal minima would make the sort ambiguous.
  std::vector<int> labels;
  std::function<void(const PlanarTree&)> collect = [&](const PlanarTree& p) {
    if (p.gen < 0) {
      labels.push_back(p.label);
      return;
    }
    for (const auto& c : p.children) collect(c);
  };
  collect(tree);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("repeated leaf label in planar tree");

  Built b = straighten_rec(tree, sig);
  for (auto& n : b.nodes) {
    if (!n.is_leaf()) continue;
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), n.value);
    n.value = static_cast<std::int16_t>(it - sorted.begin() + 1);
  }
  const int arity = static_cast<int>(sorted.size());
  return Signed{b.sign, make_unchecked(std::move(b.nodes), arity)};
}

Signed apply_permutation(const TreeMonomial& t, std::span<const int> sigma,
                         const ShuffleSignature& sig) {
  const int n = t.arity();
  if (static_cast<int>(sigma.size()) != n)
    throw Error("permutation size " + std::to_string(sigma.size()) + " does not match arity " +
                std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw Error("not a permutation of 1..n");
    seen[v] = true;
  }
  PlanarTree p = to_planar(t);
  std::function<void(PlanarTree&)> relabel = [&](PlanarTree& x) {
    if (x.gen < 0) {
      x.label = sigma[x.label - 1];
      return;
    }
    for (auto& c : x.children) relabel(c);
  };
  relabel(p);
  return straighten(p, sig);
}

TreeMonomial compose(const TreeMonomial& outer, int leaf_index, const TreeMonomial& inner,
                     std::span<const int> inner_labels) {
  const int m = outer.arity();
  const int k = inner.arity();
  const int total = m + k - 1;
  if (leaf_index < 1 || leaf_index > m)
    throw Error("leaf index " + std::to_string(leaf_index) + " outside 1.." + std::to_string(m));
  if (static_cast<int>(inner_labels.size()) != k) throw Error("relabeling has the wrong size");
  if (inner_labels.front() != leaf_index) throw Error("relabeling is not a shuffle: must start at the grafting leaf");
  for (int i = 0; i < k; ++i) {
    if (inner_labels[i] > total) throw Error("relabeling is not a shuffle: label out of range");
    if (i > 0 && inner_labels[i] <= inner_labels[i - 1])
      throw Error("relabeling is not a shuffle: labels must increase");
  }
  std::vector<bool> taken(total + 1, false);
  for (int l : inner_labels) taken[l] = true;
  std::vector<int> outer_label(m + 1, 0);
  {
    int next = 1;
    for (int j = 1; j <= m; ++j) {
      if (j == leaf_index) continue;
      while (taken[next]) ++next;
      outer_label[j] = next++;
    }
  }
  std::vector<Node> nodes;
  nodes.reserve(outer.nodes().size() + inner.nodes().size());
  for (const auto& n : outer.nodes()) {
    if (!n.is_leaf()) {
      nodes.push_back(n);
    } else if (n.value == leaf_index) {
      for (const auto& in : inner.nodes()) {
        if (in.is_leaf())
          nodes.push_back(leaf_node(inner_labels[in.value - 1]));
        else
          nodes.push_back(in);
      }
    } else {
      nodes.push_back(leaf_node(outer_label[n.value]));
    }
  }
  return TreeMonomial::from_nodes(std::move(nodes));
}

std::vector<std::vector<int>> shuffle_label_sets(int outer_arity, int leaf_index, int inner_arity) {
  std::vector<std::vector<int>> out;
  const int total = outer_arity + inner_arity - 1;
  std::vector<int> current{leaf_index};
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(current.size()) == inner_arity) {
      out.push_back(current);
      return;
    }
    for (int l = from; l <= total; ++l) {
      current.push_back(l);
      rec(l + 1);
      current.pop_back();
    }
  };
  rec(leaf_index + 1);
  return out;
}

std::vector<TreeMonomial> enumerate_compositions(const TreeMonomial& outer, int leaf_index,
                                                 const TreeMonomial& inner) {
  if (leaf_index < 1 || leaf_index > outer.arity())
    throw Error("leaf index " + std::to_string(leaf_index) + " outside 1.." +
                std::to_string(outer.arity()));
  std::vector<TreeMonomial> out;
  for (const auto& labels : shuffle_label_sets(outer.arity(), leaf_index, inner.arity()))
    out.push_back(compose(outer, leaf_index, inner, labels));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Set partitions of {1..s} into exactly k blocks, blocks ordered by minimum.
void partitions_into(int s, int k, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> block_of(s, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (s - i < k - used) return;
    if (i == s) {
      if (used != k) return;
      std::vector<std::vector<int>> blocks(k);
      for (int j = 0; j < s; ++j) blocks[block_of[j]].push_back(j + 1);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b < used; ++b) {
      block_of[i] = b;
      rec(i + 1, used);
    }
    if (used < k) {
      block_of[i] = used;
      rec(i + 1, used + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<TreeMonomial> enumerate_monomials(const ShuffleSignature& sig, int n) {
  if (n < 1) throw Error("arity must be at least 1");
  // by_size[s]: node sequences of all monomials with leaves 1..s.
  std::vector<std::vector<std::vector<Node>>> by_size(n + 1);
  by_size[1].push_back({leaf_node(1)});
  for (int s = 2; s <= n; ++s) {
    for (const auto& g : sig.generators()) {
      if (g.arity > s) continue;
      std::vector<std::vector<std::vector<int>>> parts;
      partitions_into(s, g.arity, parts);
      for (const auto& blocks : parts) {
        // Cartesian product over the blocks' sub-monomials.
        std::vector<std::size_t> pick(blocks.size(), 0);
        bool empty = false;
        for (const auto& b : blocks)
          if (by_size[b.size()].empty()) empty = true;
        if (empty) continue;
        while (true) {
          std::vector<Node> nodes{vertex_node(g.id, g.arity)};
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (const auto& x : by_size[blocks[b].size()][pick[b]])
              nodes.push_back(x.is_leaf() ? leaf_node(blocks[b][x.value - 1]) : x);
          }
          by_size[s].push_back(std::move(nodes));
          std::size_t b = 0;
          for (; b < blocks.size(); ++b) {
            if (++pick[b] < by_size[blocks[b].size()].size()) break;
            pick[b] = 0;
          }
          if (b == blocks.size()) break;
        }
      }
    }
  }
  std::vector<TreeMonomial> out;
  out.reserve(by_size[n].size());
  for (auto& nodes : by_size[n]) out.push_back(make_unchecked(std::move(nodes), n));
  std::sort(out.begin(), out.end());
  return out;
}

TreeMonomial corolla(const ShuffleSignature& sig, int gen) {
  const auto& g = sig[gen];
  std::vector<Node> nodes{vertex_node(gen, g.arity)};
  for (int i = 1; i <= g.arity; ++i) nodes.push_back(leaf_node(i));
  return make_unchecked(std::move(nodes), g.arity);
}

std::string to_text(const TreeMonomial& t, const ShuffleSignature& sig) {
  std::string out;
  const auto nodes = t.nodes();
  std::size_t pos = 0;
  std::function<void()> emit = [&]() {
    const Node n = nodes[pos++];
    if (n.is_leaf()) {
      out += std::to_string(n.value);
      return;
    }
    out += sig[n.gen].name;
    out += '(';
    for (int c = 0; c < n.value; ++c) {
      if (c > 0) out += ',';
      emit();
    }
    out += ')';
  };
  emit();
  return out;
}

namespace {

class MonomialTextParser {
 public:
  MonomialTextParser(std::string_view text, const ShuffleSignature& sig) : text_(text), sig_(sig) {}

  std::vector<Node> parse() {
    std::vector<Node> nodes;
    node(nodes);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return nodes;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void node(std::vector<Node>& nodes) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = v * 10 + (text_[pos_++] - '0');
      nodes.push_back(leaf_node(v));
      return;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    if (start == pos_) throw ParseError("expected generator name or leaf label", pos_);
    const auto name = text_.substr(start, pos_ - start);
    const auto id = sig_.find(name);
    if (!id) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    const int arity = sig_[*id].arity;
    nodes.push_back(vertex_node(*id, arity));
    expect('(');
    for (int c = 0; c < arity; ++c) {
      if (c > 0) expect(',');
      node(nodes);
    }
    expect(')');
  }

  std::string_view text_;
  const ShuffleSignature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

TreeMonomial parse_monomial(std::string_view text, const ShuffleSignature& sig) {
  return TreeMonomial::from_nodes(MonomialTextParser(text, sig).parse());
}

nlohmann::json to_json(const TreeMonomial& t, const ShuffleSignature& sig) {
  const auto nodes = t.nodes();
  std::size_t pos = 0;
  std::function<nlohmann::json()> emit = [&]() -> nlohmann::json {
    const Node n = nodes[pos++];
    if (n.is_leaf()) return n.value;
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(sig[n.gen].name);
    for (int c = 0; c < n.value; ++c) arr.push_back(emit());
    return arr;
  };
  return emit();
}

TreeMonomial monomial_from_json(const nlohmann::json& j, const ShuffleSignature& sig) {
  std::vector<Node> nodes;
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& x) {
    if (x.is_number_integer()) {
      nodes.push_back(leaf_node(x.get<int>()));
      return;
    }
    if (!x.is_array() || x.empty() || !x[0].is_string()) throw Error("malformed monomial JSON");
    const int id = sig.id_of(x[0].get<std::string>());
    if (static_cast<int>(x.size()) - 1 != sig[id].arity)
      throw Error("monomial JSON: wrong child count for '" + sig[id].name + "'");
    nodes.push_back(vertex_node(id, sig[id].arity));
    for (std::size_t c = 1; c < x.size(); ++c) walk(x[c]);
  };
  walk(j);
  return TreeMonomial::from_nodes(std::move(nodes));
}

}  // namespace opforge
