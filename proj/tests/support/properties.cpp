#include "properties.hpp"

#include <algorithm>
#include <cstdlib>

#include "linear_oracle.hpp"
#include "opforge/catalog/cache.hpp"
#include "opforge/catalog/constructions.hpp"
#include "opforge/catalog/presets.hpp"
#include "opforge/algebra/morphism.hpp"
#include "opforge/rewriting/reducer.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace opforge::testing {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what();
  }
  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

ShuffleSignature two_binary() { return polarized_signature(); }

ShuffleSignature mixed_signature() {
  return ShuffleSignature::from_generators(
      {GeneratorSpec{"o", 2, Symmetry::Symmetric}, GeneratorSpec{"p", 2, Symmetry::None}});
}

}  // namespace

PropertyResult prop_order_admissible(int cases, unsigned seed) {
  Tally tally("order admissibility (pathlex, weighted-pathlex)");
  Rng rng(seed);
  const ShuffleSignature sig = mixed_signature();
  const std::vector<OrderSpec> orders{OrderSpec::path_lex(), OrderSpec::path_lex({2, 1, 0}),
                                      OrderSpec::weighted({0, 1, 1}), OrderSpec::weighted({1, 0, 0}, false, {1, 0, 2})};
  std::vector<std::vector<TreeMonomial>> by_arity(5);
  for (int n = 1; n <= 4; ++n) by_arity[n] = enumerate_monomials(sig, n);
  std::uniform_int_distribution<int> ar(2, 4), ctx_ar(1, 3);
  for (int k = 0; k < cases; ++k) {
    const OrderSpec& order = pick(rng, orders);
    const int n = ar(rng);
    TreeMonomial a = pick(rng, by_arity[n]), b = pick(rng, by_arity[n]);
    if (a == b) {
      --k;
      continue;
    }
    if (compare(a, b, order) > 0) std::swap(a, b);
    const TreeMonomial& c = pick(rng, by_arity[ctx_ar(rng)]);
    // a < b must survive grafting into a context and grafting a context in.
    bool ok = true;
    std::string where;
    {
      std::uniform_int_distribution<int> leaf(1, c.arity());
      const int i = leaf(rng);
      const auto sets = shuffle_label_sets(c.arity(), i, n);
      const auto& s = pick(rng, sets);
      if (compare(compose(c, i, a, s), compose(c, i, b, s), order) >= 0) ok = false, where = "outer context";
    }
    if (!c.is_identity()) {
      std::uniform_int_distribution<int> leaf(1, n);
      const int i = leaf(rng);
      const auto sets = shuffle_label_sets(n, i, c.arity());
      const auto& s = pick(rng, sets);
      if (compare(compose(a, i, c, s), compose(b, i, c, s), order) >= 0) ok = false, where = "inner graft";
    }
    tally.check(ok, [&] { return where + ": " + to_text(a, sig) + " < " + to_text(b, sig) + " with " + to_text(c, sig); });
  }
  return tally.result();
}

PropertyResult prop_order_total(int cases, unsigned seed) {
  Tally tally("order is a strict total order");
  Rng rng(seed);
  const ShuffleSignature sig = mixed_signature();
  const auto mons = enumerate_monomials(sig, 4);
  const OrderSpec order = OrderSpec::path_lex();
  for (int k = 0; k < cases; ++k) {
    const auto &a = pick(rng, mons), &b = pick(rng, mons), &c = pick(rng, mons);
    const auto ab = compare(a, b, order), ba = compare(b, a, order);
    bool ok = (ab == 0) == (a == b) && (ab < 0) == (ba > 0);
    if (ab < 0 && compare(b, c, order) < 0) ok &= compare(a, c, order) < 0;
    tally.check(ok, [&] { return to_text(a, sig) + " / " + to_text(b, sig) + " / " + to_text(c, sig); });
  }
  return tally.result();
}

PropertyResult prop_straighten_idempotent(int cases, unsigned seed) {
  Tally tally("straighten idempotence");
  Rng rng(seed);
  const ShuffleSignature sig = mixed_signature();
  std::uniform_int_distribution<int> ar(1, 7);
  for (int k = 0; k < cases; ++k) {
    const int n = ar(rng);
    const PlanarTree p = random_planar(rng, sig, n, n + 3);
    const Signed once = straighten(p, sig);
    const Signed twice = straighten(to_planar(once.monomial), sig);
    tally.check(twice.sign == 1 && twice.monomial == once.monomial && once.sign != 0,
                [&] { return to_text(once.monomial, sig); });
  }
  return tally.result();
}

PropertyResult prop_permutation_action(int cases, unsigned seed) {
  Tally tally("permutation action and signs");
  Rng rng(seed);
  const ShuffleSignature sig = two_binary();
  const ShuffleSignature sym = ShuffleSignature::from_generators(
      {GeneratorSpec{"o", 2, Symmetry::Symmetric}, GeneratorSpec{"c", 3, Symmetry::Symmetric}});
  std::uniform_int_distribution<int> ar(2, 6);
  for (int k = 0; k < cases; ++k) {
    const int n = ar(rng);
    const auto mons = enumerate_monomials(sig, n);
    const TreeMonomial& t = pick(rng, mons);
    const auto s1 = random_permutation(rng, n), s2 = random_permutation(rng, n);
    // (s2 . s1)(l) = s2[s1[l]]
    std::vector<int> comp(n);
    for (int l = 0; l < n; ++l) comp[l] = s2[s1[l] - 1];
    const Signed a = apply_permutation(t, s1, sig);
    const Signed b = apply_permutation(a.monomial, s2, sig);
    const Signed c = apply_permutation(t, comp, sig);
    bool ok = b.monomial == c.monomial && a.sign * b.sign == c.sign;

    // With only antisymmetric vertices the sign is the product of local
    // sorting signs; check one transposition flips it when the two leaves
    // hang from the same bracket.
    const auto nodes = t.nodes();
    if (nodes.size() == 3 && nodes[0].gen == sig.id_of("b")) {
      const int swap[] = {2, 1};
      ok &= apply_permutation(t, swap, sig).sign == -1;
    }

    // Symmetric-only signature: compare against unordered canonical forms.
    const auto smons = enumerate_monomials(sym, n);
    const TreeMonomial& u = pick(rng, smons);
    const auto perm = random_permutation(rng, n);
    const Signed v = apply_permutation(u, perm, sym);
    PlanarTree relabeled = to_planar(u);
    std::function<void(PlanarTree&)> relabel = [&](PlanarTree& p) {
      if (p.gen < 0) p.label = perm[p.label - 1];
      for (auto& ch : p.children) relabel(ch);
    };
    relabel(relabeled);
    ok &= v.sign == 1 && oracle::unordered_form(to_planar(v.monomial)) == oracle::unordered_form(relabeled);
    tally.check(ok, [&] { return to_text(t, sig) + " / " + to_text(u, sym); });
  }
  return tally.result();
}

PropertyResult prop_reduce(int cases, unsigned seed) {
  Tally tally("reduce: idempotent, linear, strategy-independent, certified");
  Rng rng(seed);
  std::vector<RewriteSystem> systems;
  for (const char* id : {"fm", "prelie", "poisson", "ass", "plc"}) {
    const Presentation p = preset(id);
    systems.push_back(completed(p, make_order(OrderKind::PathLex, p.signature()), CompletionOptions{4}));
  }
  std::uniform_int_distribution<int> ar(2, 4), co(-3, 3);
  for (int k = 0; k < cases; ++k) {
    const RewriteSystem& sys = systems[k % systems.size()];
    const int n = ar(rng);
    Reducer red(sys);
    const auto& basis = red.basis(n).monomials;
    const Element x = random_element(rng, basis), y = random_element(rng, basis);
    const Scalar a = co(rng), b = co(rng);
    Certificate cert;
    const Element rx = reduce(x, sys, ReduceStrategy::LeftmostOutermost, &cert);
    const Element ry = reduce(y, sys, ReduceStrategy::LeftmostInnermost);
    bool ok = reduce(rx, sys) == rx;
    ok &= reduce(a * x + b * y, sys) == a * rx + b * ry;
    ok &= reduce(x, sys, ReduceStrategy::LeftmostInnermost) == rx;
    ok &= red.normal_form(x) == rx;
    ok &= replay(cert, sys, n) == x - rx;
    for (const auto& [t, c] : rx.terms()) ok &= red.is_normal(t);
    tally.check(ok, [&] { return to_text(x, sys.signature); });
  }
  return tally.result();
}

PropertyResult prop_occurrence_round_trip(int cases, unsigned seed) {
  Tally tally("occurrence round trips");
  Rng rng(seed);
  const ShuffleSignature sig = mixed_signature();
  std::uniform_int_distribution<int> ar(2, 6), par(2, 3);
  std::vector<std::vector<TreeMonomial>> by_arity(7);
  for (int n = 2; n <= 6; ++n) by_arity[n] = enumerate_monomials(sig, n);
  for (int k = 0; k < cases; ++k) {
    const TreeMonomial& host = pick(rng, by_arity[ar(rng)]);
    const int pa = std::min(par(rng), host.arity());
    const TreeMonomial& pattern = pick(rng, by_arity[pa]);
    const TreeIndex idx(host);
    const auto occs = find_occurrences(host, idx, pattern);
    bool ok = static_cast<int>(occs.size()) == oracle::count_embeddings(host, pattern);
    for (const auto& o : occs) {
      ok &= substitute(host, idx, o, pattern) == host;
      ok &= static_cast<int>(o.vertices.size()) == pattern.internal_count();
    }
    const auto first = first_occurrence(host, idx, pattern);
    ok &= first.has_value() == !occs.empty();
    if (first) ok &= *first == occs.front();
    tally.check(ok, [&] { return to_text(pattern, sig) + " in " + to_text(host, sig); });
  }
  return tally.result();
}

PropertyResult prop_enumeration_counts() {
  Tally tally("enumeration counts k^(n-1) (2n-3)!!");
  const std::vector<ShuffleSignature> sigs{
      ShuffleSignature::from_generators({GeneratorSpec{"o", 2, Symmetry::Symmetric}}),
      two_binary(), mixed_signature()};
  const std::vector<int> k{1, 2, 3};
  for (std::size_t s = 0; s < sigs.size(); ++s)
    for (int n = 1; n <= 6; ++n) {
      const auto mons = enumerate_monomials(sigs[s], n);
      long long expect = oracle::double_factorial_odd(n);
      for (int j = 1; j < n; ++j) expect *= k[s];
      bool ok = static_cast<long long>(mons.size()) == expect;
      ok &= std::is_sorted(mons.begin(), mons.end()) && std::adjacent_find(mons.begin(), mons.end()) == mons.end();
      for (const auto& t : mons) {
        ok &= t.arity() == n;
        ok &= TreeMonomial::from_nodes({t.nodes().begin(), t.nodes().end()}) == t;
      }
      tally.check(ok, [&, n] { return "signature " + std::to_string(s) + " arity " + std::to_string(n); });
    }
  return tally.result();
}

PropertyResult prop_rhs_monotonicity(int cases, unsigned seed) {
  Tally tally("almost-composite dimensions bound deformations");
  Rng rng(seed);
  const Presentation com = preset("com"), lie = preset("lie");
  const CompletionOptions co{4};
  const OrderSpec order = make_order(OrderKind::PathLex, almost_composite(com, lie).signature());
  const auto bound = dims(completed(almost_composite(com, lie), order, co), 4);
  const std::vector<std::string> shapes{"a{0} o [a{1}, a{2} o a{3}]", "(a{0} o a{1}) o [a{2}, a{3}]",
                                        "[a{0} o a{1}, a{2}] o a{3}", "(a{0} o a{1}) o (a{2} o a{3})",
                                        "a{0} o (a{1} o (a{2} o a{3}))", "[[a{0}, a{1}], a{2}] o a{3}",
                                        "a{0} o [[a{1}, a{2}], a{3}]", "[a{0}, a{1}] o [a{2}, a{3}]"};
  std::uniform_int_distribution<int> nterms(1, 3), coeff(-2, 2);
  for (int k = 0; k < cases; ++k) {
    std::string rhs;
    for (int t = nterms(rng); t > 0; --t) {
      const auto perm = random_permutation(rng, 4);
      std::string term = pick(rng, shapes);
      for (int i = 0; i < 4; ++i) {
        const std::string slot = "{" + std::to_string(i) + "}";
        term.replace(term.find(slot), slot.size(), std::to_string(perm[i]));
      }
      int c = coeff(rng);
      if (c == 0) c = 1;
      rhs += (rhs.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) + std::to_string(std::abs(c)) + "*" + term;
    }
    const RhsMap f{RhsEntry{"[a1 o a2, a3 o a4]", rhs}};
    const auto d = dims(completed(with_rewriting_rhs(com, lie, f), order, co), 4);
    bool ok = true;
    for (int n = 0; n < 4; ++n) ok &= d[n] <= bound[n];
    tally.check(ok, [&] { return rhs; });
  }
  return tally.result();
}

std::vector<std::function<PropertyResult()>> all_properties() {
  return {[] { return prop_order_admissible(); },     [] { return prop_order_total(); },
          [] { return prop_straighten_idempotent(); }, [] { return prop_permutation_action(); },
          [] { return prop_reduce(); },                [] { return prop_occurrence_round_trip(); },
          [] { return prop_enumeration_counts(); },    [] { return prop_rhs_monotonicity(); }};
}

}  // namespace opforge::testing
