#include "opforge/rewriting/suboperad.hpp"

#include <set>

#include "opforge/algebra/presentation.hpp"
#include "opforge/error.hpp"
#include "opforge/rewriting/linalg.hpp"
#include "opforge/rewriting/reducer.hpp"

namespace opforge {

std::vector<long long> suboperad_dims(const RewriteSystem& ambient, const std::vector<Element>& gens,
                                      int up_to) {
  if (up_to > ambient.truncation_arity)
    throw Error("arity " + std::to_string(up_to) + " exceeds the truncation arity");
  Reducer reducer(ambient);

  // Generators together with their symmetric-group orbits.
  std::map<int, std::vector<Element>> orbit;
  for (const auto& g : gens) {
    if (g.is_zero() || g.arity() < 2) throw Error("suboperad generators must be nonzero of arity >= 2");
    std::set<Element::Terms> seen;
    for (const auto& sigma : all_permutations(g.arity())) {
      Element h = apply_permutation(g, sigma, ambient.signature);
      if (h.is_zero() || !seen.insert(h.terms()).second) continue;
      orbit[g.arity()].push_back(std::move(h));
    }
  }

  // basis[n]: normal forms of elements spanning S(n)
  std::vector<std::vector<Element>> basis(up_to + 1);
  std::vector<long long> out;
  if (up_to >= 1) {
    basis[1].push_back(Element::monomial(TreeMonomial()));
    out.push_back(1);
  }
  for (int n = 2; n <= up_to; ++n) {
    IntegerEchelon ech;
    const auto& mons = reducer.basis(n);
    for (const auto& [k, gs] : orbit) {
      const int m = n - k + 1;
      if (m < 1) continue;
      for (const auto& a : basis[m])
        for (int i = 1; i <= m; ++i)
          for (const auto& labels : shuffle_label_sets(m, i, k))
            for (const auto& g : gs) {
              Element c = compose(a, i, g, labels);
              SparseVec v = reducer.normal_form_sparse(c);
              if (ech.insert(v)) basis[n].push_back(mons.to_element(v));
            }
    }
    out.push_back(ech.rank());
  }
  return out;
}

}  // namespace opforge
