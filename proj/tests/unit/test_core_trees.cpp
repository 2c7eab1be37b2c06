#include <doctest.h>

#include <algorithm>
#include <set>

#include "opforge/core/occurrence.hpp"
#include "opforge/core/order.hpp"
#include "opforge/core/tree.hpp"
#include "opforge/error.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace opforge;
using opforge::testing::Rng;

namespace {

ShuffleSignature com_sig() { return ShuffleSignature::from_generators({{"o", 2, Symmetry::Symmetric}}); }
ShuffleSignature ob_sig() {
  return ShuffleSignature::from_generators({{"o", 2, Symmetry::Symmetric}, {"b", 2, Symmetry::Antisymmetric}});
}
ShuffleSignature p_sig() { return ShuffleSignature::from_generators({{"p", 2, Symmetry::None}}); }

// Straight from the documented convention: path words per leaf, then the
// planar leaf sequence read from the right.
struct PathData {
  std::vector<std::vector<int>> words;
  std::vector<int> leaves;
};

void collect(const PlanarTree& t, std::vector<int>& path, PathData& d) {
  if (t.gen < 0) {
    d.words[t.label - 1] = path;
    d.leaves.push_back(t.label);
    return;
  }
  path.push_back(t.gen);
  for (const auto& c : t.children) collect(c, path, d);
  path.pop_back();
}

int oracle_compare(const TreeMonomial& a, const TreeMonomial& b) {
  PathData da{std::vector<std::vector<int>>(a.arity()), {}}, db{std::vector<std::vector<int>>(b.arity()), {}};
  std::vector<int> path;
  collect(to_planar(a), path, da);
  collect(to_planar(b), path, db);
  for (int l = 0; l < a.arity(); ++l) {
    const auto &x = da.words[l], &y = db.words[l];
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    if (x != y) return x < y ? -1 : 1;
  }
  for (int i = a.arity() - 1; i >= 0; --i)
    if (da.leaves[i] != db.leaves[i]) return da.leaves[i] < db.leaves[i] ? -1 : 1;
  return 0;
}

int sgn(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("monomial text round trip and validation") {
  const auto sig = ob_sig();
  const auto t = parse_monomial("o(b(1,3),2)", sig);
  CHECK(t.arity() == 3);
  CHECK(to_text(t, sig) == "o(b(1,3),2)");
  CHECK(monomial_from_json(to_json(t, sig), sig) == t);
  CHECK(parse_monomial("1", sig).is_identity());
  CHECK_THROWS_AS(parse_monomial("o(2,1)", sig), Error);
  CHECK_THROWS_AS(parse_monomial("o(1,1)", sig), Error);
  CHECK_THROWS_AS(parse_monomial("x(1,2)", sig), Error);
}

TEST_CASE("signature rules") {
  CHECK_THROWS_AS(ShuffleSignature::from_generators({{"u", 1, Symmetry::Symmetric}}), Error);
  CHECK_THROWS_AS(ShuffleSignature::from_generators({{"o", 2, Symmetry::Symmetric}, {"o", 2, Symmetry::None}}),
                  Error);
  CHECK_THROWS_AS(ShuffleSignature::from_generators({{"t", 3, Symmetry::None}}), Error);
  const auto sig = p_sig();
  REQUIRE(sig.size() == 2);
  CHECK(sig[sig.id_of("p'")].swapped);
  CHECK(sig[sig.id_of("p")].partner == sig.id_of("p'"));
}

TEST_CASE("straighten signs and partners") {
  const auto sig = ob_sig();
  const int o = sig.id_of("o"), b = sig.id_of("b");
  auto s = straighten(PlanarTree::vertex(b, {PlanarTree::leaf(7), PlanarTree::leaf(3)}), sig);
  CHECK(s.sign == -1);
  CHECK(to_text(s.monomial, sig) == "b(1,2)");
  s = straighten(PlanarTree::vertex(o, {PlanarTree::leaf(2), PlanarTree::vertex(b, {PlanarTree::leaf(3),
                                                                                    PlanarTree::leaf(1)})}),
                 sig);
  CHECK(s.sign == -1);
  CHECK(to_text(s.monomial, sig) == "o(b(1,3),2)");
  const auto ps = p_sig();
  s = straighten(PlanarTree::vertex(ps.id_of("p"), {PlanarTree::leaf(2), PlanarTree::leaf(1)}), ps);
  CHECK(s.sign == 1);
  CHECK(to_text(s.monomial, ps) == "p'(1,2)");
}

TEST_CASE("straighten agrees with unordered canonical forms") {
  const auto sig = com_sig();
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + k % 7;
    const PlanarTree p = opforge::testing::random_planar(rng, sig, n, 12);
    const auto s = straighten(p, sig);
    // Standardize labels of the input for comparison.
    std::vector<int> labels;
    std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& x) {
      if (x.gen < 0) labels.push_back(x.label);
      for (const auto& c : x.children) walk(c);
    };
    walk(p);
    std::sort(labels.begin(), labels.end());
    PlanarTree q = p;
    std::function<void(PlanarTree&)> relabel = [&](PlanarTree& x) {
      if (x.gen < 0) x.label = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x.label) - labels.begin()) + 1;
      for (auto& c : x.children) relabel(c);
    };
    relabel(q);
    CHECK(oracle::unordered_form(to_planar(s.monomial)) == oracle::unordered_form(q));
  }
}

TEST_CASE("enumeration counts") {
  for (int n = 1; n <= 7; ++n) {
    const long long df = oracle::double_factorial_odd(n);
    CHECK(static_cast<long long>(enumerate_monomials(com_sig(), n).size()) == df);
    long long two = df;
    for (int j = 1; j < n; ++j) two *= 2;
    CHECK(static_cast<long long>(enumerate_monomials(ob_sig(), n).size()) == two);
    CHECK(static_cast<long long>(enumerate_monomials(p_sig(), n).size()) == two);
  }
  // One ternary symmetric generator: arities 1, 3, 5 only.
  const auto tern = ShuffleSignature::from_generators({{"c", 3, Symmetry::Symmetric}});
  CHECK(enumerate_monomials(tern, 2).empty());
  CHECK(enumerate_monomials(tern, 3).size() == 1);
  CHECK(enumerate_monomials(tern, 5).size() == 10);
}

TEST_CASE("composition matches the brute-force merge oracle") {
  const auto sig = ob_sig();
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 3; ++k)
      for (const auto& outer : enumerate_monomials(sig, m))
        for (const auto& inner : enumerate_monomials(sig, k))
          for (int i = 1; i <= m; ++i) {
            const auto got = enumerate_compositions(outer, i, inner);
            const auto want = oracle::merge_compositions(outer, i, inner);
            CHECK(std::set<TreeMonomial>(got.begin(), got.end()) == want);
          }
  const auto bin = parse_monomial("o(1,2)", sig);
  CHECK(enumerate_compositions(bin, 1, bin).size() == 2);
  CHECK(enumerate_compositions(bin, 2, bin).size() == 1);
  CHECK(shuffle_label_sets(2, 1, 2).size() == 2);
  CHECK_THROWS_AS(compose(bin, 1, bin, std::vector<int>{2, 3}), Error);
}

TEST_CASE("path-lex agrees with an independent implementation") {
  const auto sig = ob_sig();
  const auto order = OrderSpec::path_lex();
  for (int n = 2; n <= 4; ++n) {
    const auto mons = enumerate_monomials(sig, n);
    for (const auto& a : mons)
      for (const auto& b : mons) CHECK(sgn(compare(a, b, order)) == oracle_compare(a, b));
  }
  // sort_by_order uses the same order
  auto mons = enumerate_monomials(sig, 4);
  sort_by_order(mons, order);
  for (std::size_t i = 1; i < mons.size(); ++i) CHECK(compare(mons[i - 1], mons[i], order) < 0);
}

TEST_CASE("orders: precedence, weights, xy") {
  const auto sig = ob_sig();
  const auto o12_3 = parse_monomial("o(o(1,2),3)", sig);
  const auto b12_3 = parse_monomial("o(b(1,2),3)", sig);
  CHECK(compare(o12_3, b12_3, OrderSpec::path_lex()) < 0);
  CHECK(compare(o12_3, b12_3, OrderSpec::path_lex({1, 0})) > 0);
  const auto w = OrderSpec::weighted({0, 1});
  CHECK(compare(parse_monomial("b(b(1,2),3)", sig), parse_monomial("o(o(1,2),3)", sig), w) > 0);
  CHECK(compare(parse_monomial("b(b(1,2),3)", sig), parse_monomial("o(o(1,2),3)", sig),
                OrderSpec::weighted({0, 1}, false)) < 0);
  const std::vector<ClassTag> classes{ClassTag::X, ClassTag::Y};
  CHECK(n_T(parse_monomial("o(b(1,2),3)", sig), classes) == 1);
  CHECK(n_T(parse_monomial("b(o(1,2),3)", sig), classes) == 0);
  CHECK(n_T(parse_monomial("o(1,o(2,b(3,4)))", sig), classes) == 2);
  const auto xy = OrderSpec::xy_augmented(classes, OrderSpec::path_lex());
  CHECK_FALSE(xy.admissible());
  CHECK(compare(parse_monomial("o(b(1,2),3)", sig), parse_monomial("b(o(1,2),3)", sig), xy) < 0);
  CHECK_THROWS_AS(compare(o12_3, b12_3, OrderSpec::xy_augmented({ClassTag::X}, OrderSpec::path_lex())), Error);
  CHECK(order_from_json(to_json(xy)) == xy);
  CHECK(order_from_json(to_json(w)) == w);
}

TEST_CASE("occurrences agree with the embedding counter") {
  const auto sig = ob_sig();
  std::vector<TreeMonomial> patterns;
  for (int n = 2; n <= 3; ++n)
    for (const auto& t : enumerate_monomials(sig, n)) patterns.push_back(t);
  for (const auto& host : enumerate_monomials(sig, 4))
    for (const auto& pat : patterns) {
      const auto occ = find_occurrences(host, pat);
      CHECK(static_cast<int>(occ.size()) == oracle::count_embeddings(host, pat));
      const TreeIndex idx(host);
      for (const auto& o : occ) CHECK(substitute(host, idx, o, pat) == host);
    }
  const auto host = parse_monomial("o(o(1,2),o(3,4))", sig);
  CHECK(find_occurrences(host, parse_monomial("o(o(1,2),3)", sig)).size() == 1);
  CHECK(find_occurrences(host, parse_monomial("o(1,o(2,3))", sig)).size() == 1);
  CHECK(find_occurrences(host, parse_monomial("o(o(1,3),2)", sig)).empty());
  CHECK_THROWS_AS(find_occurrences(host, TreeMonomial()), Error);
}

TEST_CASE("substitution reattaches subtrees by label") {
  const auto sig = ob_sig();
  const auto host = parse_monomial("o(o(1,b(2,4)),3)", sig);
  const auto pat = parse_monomial("o(o(1,2),3)", sig);
  const TreeIndex idx(host);
  const auto occ = find_occurrences(host, idx, pat);
  REQUIRE(occ.size() == 1);
  CHECK(to_text(substitute(host, idx, occ[0], parse_monomial("o(1,o(2,3))", sig)), sig) == "o(1,o(b(2,4),3))");
  CHECK_THROWS_AS(substitute(host, idx, occ[0], parse_monomial("o(1,2)", sig)), Error);
}
