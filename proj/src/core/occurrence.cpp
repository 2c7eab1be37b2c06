#include "opforge/core/occurrence.hpp"

#include "opforge/error.hpp"

namespace opforge {

namespace {

bool match_at(const TreeMonomial& host, const TreeIndex& index, const TreeMonomial& pattern,
              int& ppos, int hpos, Occurrence& occ) {
  const auto p = pattern.nodes()[ppos++];
  if (p.is_leaf()) {
    occ.frontier[p.value - 1] = hpos;
    return true;
  }
  const auto h = host.nodes()[hpos];
  if (h.is_leaf() || h.gen != p.gen || h.value != p.value) return false;
  occ.vertices.push_back(hpos);
  occ.mask |= std::uint64_t{1} << hpos;
  int child = hpos + 1;
  for (int c = 0; c < p.value; ++c) {
    if (!match_at(host, index, pattern, ppos, child, occ)) return false;
    child = index.end[child];
  }
  return true;
}

std::optional<Occurrence> try_root(const TreeMonomial& host, const TreeIndex& index,
                                   const TreeMonomial& pattern, int root) {
  Occurrence occ;
  occ.root = root;
  occ.frontier.assign(pattern.arity(), -1);
  int ppos = 0;
  if (!match_at(host, index, pattern, ppos, root, occ)) return std::nullopt;
  for (std::size_t l = 1; l < occ.frontier.size(); ++l)
    if (index.min_leaf[occ.frontier[l - 1]] >= index.min_leaf[occ.frontier[l]]) return std::nullopt;
  return occ;
}

void check_pattern(const TreeMonomial& host, const TreeMonomial& pattern) {
  if (pattern.is_identity()) throw Error("cannot search for the identity monomial");
  if (host.node_count() > 64) throw Error("host monomial too large for occurrence masks");
}

}  // namespace

std::vector<Occurrence> find_occurrences(const TreeMonomial& host, const TreeMonomial& pattern) {
  return find_occurrences(host, TreeIndex(host), pattern);
}

std::vector<Occurrence> find_occurrences(const TreeMonomial& host, const TreeIndex& index,
                                         const TreeMonomial& pattern) {
  check_pattern(host, pattern);
  std::vector<Occurrence> out;
  if (pattern.arity() > host.arity()) return out;
  const int g = pattern.root_gen();
  const auto nodes = host.nodes();
  for (int r = 0; r < host.node_count(); ++r) {
    if (nodes[r].gen != g) continue;
    if (auto occ = try_root(host, index, pattern, r)) out.push_back(std::move(*occ));
  }
  return out;
}

std::optional<Occurrence> first_occurrence(const TreeMonomial& host, const TreeIndex& index,
                                           const TreeMonomial& pattern) {
  check_pattern(host, pattern);
  if (pattern.arity() > host.arity() || pattern.node_count() > host.node_count()) return std::nullopt;
  const int g = pattern.root_gen();
  const auto nodes = host.nodes();
  for (int r = 0; r < host.node_count(); ++r) {
    if (nodes[r].gen != g) continue;
    if (auto occ = try_root(host, index, pattern, r)) return occ;
  }
  return std::nullopt;
}

TreeMonomial substitute(const TreeMonomial& host, const TreeIndex& index, const Occurrence& occ,
                        const TreeMonomial& replacement) {
  if (replacement.arity() != static_cast<int>(occ.frontier.size()))
    throw Error("replacement arity does not match the occurrence");
  const auto h = host.nodes();
  std::vector<TreeMonomial::Node> nodes;
  nodes.reserve(h.size() + replacement.nodes().size());
  nodes.insert(nodes.end(), h.begin(), h.begin() + occ.root);
  for (const auto& r : replacement.nodes()) {
    if (!r.is_leaf()) {
      nodes.push_back(r);
      continue;
    }
    const int f = occ.frontier[r.value - 1];
    nodes.insert(nodes.end(), h.begin() + f, h.begin() + index.end[f]);
  }
  nodes.insert(nodes.end(), h.begin() + index.end[occ.root], h.end());
  return make_unchecked(std::move(nodes), host.arity());
}

std::uint64_t internal_mask(const TreeMonomial& t) {
  std::uint64_t m = 0;
  const auto nodes = t.nodes();
  for (int i = 0; i < t.node_count(); ++i)
    if (!nodes[i].is_leaf()) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace opforge
